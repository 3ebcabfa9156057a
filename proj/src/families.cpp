#include "maxmatch/families.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "maxmatch/canonical.hpp"

namespace maxmatch {

namespace {

std::invalid_argument err(const std::string& msg) { return std::invalid_argument(msg); }

Tree spider_tree(const std::vector<int>& legs_sorted) {
  int n = 1;
  for (int l : legs_sorted) n += l;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int next = 1;
  for (int l : legs_sorted) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      edges.emplace_back(std::min(prev, next), std::max(prev, next));
      prev = next++;
    }
  }
  return tree_from_edges(n, edges);
}

}  // namespace

FamilyInstance path(int n) {
  if (n < 1) throw err("path: n must be at least 1");
  FamilyInstance fi;
  fi.family_name = "path";
  fi.parameters = {n};
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  fi.tree = tree_from_edges(n, edges);
  return fi;
}

FamilyInstance star(int m) {
  if (m < 1) throw err("star: m must be at least 1");
  FamilyInstance fi;
  fi.family_name = "star";
  fi.parameters = {m};
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.emplace_back(0, i);
  fi.tree = tree_from_edges(m + 1, edges);
  fi.expected_psi = BigNat(m);  // every maximal matching of a star is one edge
  return fi;
}

FamilyInstance subdivided_star(int m, int t) {
  if (t < 0 || t >= m) throw err("subdivided_star: need 0 <= t < m");
  std::vector<int> legs(t, 1);
  legs.insert(legs.end(), m - t, 2);
  FamilyInstance fi;
  fi.family_name = "subdivided_star";
  fi.parameters = {m, t};
  fi.tree = spider_tree(legs);
  if (t <= 2) fi.expected_psi = ceil_half(2 * m - t + 1);
  return fi;
}

FamilyInstance spider(const std::vector<int>& legs) {
  if (legs.empty()) throw err("spider: at least one leg required");
  for (int l : legs)
    if (l < 1) throw err("spider: leg lengths must be positive");
  std::vector<int> sorted = legs;
  std::sort(sorted.begin(), sorted.end());
  FamilyInstance fi;
  fi.family_name = "spider";
  fi.parameters = sorted;
  fi.tree = spider_tree(sorted);
  return fi;
}

FamilyInstance star_of_triples(int n) {
  if (n < 1) throw err("star_of_triples: n must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(4 * n);
  int next = 1;
  for (int i = 0; i < n; ++i) {
    int center = next++;
    edges.emplace_back(0, center);
    for (int j = 0; j < 3; ++j) edges.emplace_back(center, next++);
  }
  FamilyInstance fi;
  fi.family_name = "star_of_triples";
  fi.parameters = {n};
  fi.tree = tree_from_edges(4 * n + 1, edges);
  BigNat p;  // 3^(n-1)
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));
  fi.expected_psi = p * 3 + p * n;
  return fi;
}

std::vector<FamilyInstance> extremal_family(int n) {
  if (n < 2) throw err("extremal_family: n must be at least 2");
  std::vector<FamilyInstance> out;
  std::vector<std::string> codes;
  auto add = [&](std::vector<int> legs) {
    FamilyInstance fi = spider(legs);
    fi.expected_psi = ceil_half(n);
    std::string code = canonical_code(fi.tree);
    if (std::find(codes.begin(), codes.end(), code) != codes.end()) return;
    codes.push_back(std::move(code));
    out.push_back(std::move(fi));
  };
  if (n % 2 == 0) {
    std::vector<int> legs{1};
    legs.insert(legs.end(), n / 2 - 1, 2);
    add(std::move(legs));
  } else {
    add(std::vector<int>((n - 1) / 2, 2));
    std::vector<int> legs{1, 1};
    legs.insert(legs.end(), (n + 1) / 2 - 2, 2);
    add(std::move(legs));
  }
  return out;
}

FamilyInstance parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    size_t pos = colon + 1;
    while (pos < spec.size()) {
      size_t comma = spec.find(',', pos);
      size_t end = comma == std::string::npos ? spec.size() : comma;
      int value = 0;
      auto [next, ec] = std::from_chars(spec.data() + pos, spec.data() + end, value);
      if (ec != std::errc() || next != spec.data() + end)
        throw err("family spec: bad parameter in '" + spec + "'");
      params.push_back(value);
      pos = end + 1;
    }
  }

  auto want = [&](size_t k) {
    if (params.size() != k)
      throw err("family spec: " + name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "path") {
    want(1);
    return path(params[0]);
  }
  if (name == "star") {
    want(1);
    return star(params[0]);
  }
  if (name == "subdivided_star") {
    want(2);
    return subdivided_star(params[0], params[1]);
  }
  if (name == "spider") return spider(params);
  if (name == "star_of_triples") {
    want(1);
    return star_of_triples(params[0]);
  }
  throw err("family spec: unknown family '" + name + "'");
}

}  // namespace maxmatch
