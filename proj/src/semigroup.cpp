#include "semirep/semigroup.hpp"

#include <map>
#include <string>

namespace semirep {

std::optional<int> Semigroup::identityElement() const {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) ok = prod(e, s) == s && prod(s, e) == s;
    if (ok) return e;
  }
  return std::nullopt;
}

Semigroup fromCayleyTable(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) inputError("IndexOutOfRange", "empty table");
  Semigroup s;
  s.n = n;
  s.table.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      inputError("IndexOutOfRange", "row " + std::to_string(i) + " has " +
                                        std::to_string(table[i].size()) + " entries, expected " +
                                        std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n)
        inputError("IndexOutOfRange", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") = " + std::to_string(v));
      s.table.push_back(v);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.prod(s.prod(a, b), c) != s.prod(a, s.prod(b, c)))
          inputError("NonAssociative", "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
  return s;
}

Semigroup fromTransformations(int degree, const std::vector<std::vector<int>>& generators,
                              std::size_t sizeCap) {
  if (degree < 1) inputError("IndexOutOfRange", "degree must be >= 1");
  if (generators.empty()) inputError("IndexOutOfRange", "empty generator list");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (static_cast<int>(generators[g].size()) != degree)
      inputError("IndexOutOfRange", "generator " + std::to_string(g) + " is not a map on " +
                                        std::to_string(degree) + " points");
    for (int img : generators[g])
      if (img < 0 || img >= degree)
        inputError("IndexOutOfRange", "generator " + std::to_string(g) + " image out of range");
  }

  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) c[static_cast<std::size_t>(x)] = b[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])];
    return c;
  };

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> genIdx;
  for (const auto& g : generators) {
    auto [it, fresh] = index.try_emplace(g, static_cast<int>(elems.size()));
    if (fresh) elems.push_back(g);
    genIdx.push_back(it->second);
  }

  // BFS closure under right multiplication by the generators.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      const auto prod = compose(elems[head], g);
      auto [it, fresh] = index.try_emplace(prod, static_cast<int>(elems.size()));
      (void)it;
      if (fresh) {
        elems.push_back(prod);
        if (elems.size() > sizeCap)
          inputError("SizeLimitExceeded", "closure exceeded cap " + std::to_string(sizeCap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  Semigroup s;
  s.n = n;
  s.degree = degree;
  s.maps = elems;
  s.generators = genIdx;
  s.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s.table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return s;
}

Semigroup adjoinIdentity(const Semigroup& s) {
  const int n = s.n;
  Semigroup t;
  t.n = n + 1;
  t.table.resize(static_cast<std::size_t>(t.n) * t.n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.table[static_cast<std::size_t>(a) * t.n + b] = s.prod(a, b);
  for (int a = 0; a <= n; ++a) {
    t.table[static_cast<std::size_t>(a) * t.n + n] = a;
    t.table[static_cast<std::size_t>(n) * t.n + a] = a;
  }
  t.generators = s.generators;
  t.generators.push_back(n);
  if (s.degree > 0) {
    t.degree = s.degree;
    t.maps = s.maps;
    std::vector<int> id(static_cast<std::size_t>(s.degree));
    for (int x = 0; x < s.degree; ++x) id[static_cast<std::size_t>(x)] = x;
    t.maps.push_back(id);
  }
  return t;
}

}  // namespace semirep
