#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semirep/errors.hpp"

namespace semirep {

/// Finite semigroup as an index-based Cayley table.  Elements are 0..n-1 and
/// all derived structures identify elements by table index.
struct Semigroup {
  int n = 0;
  std::vector<int> table;  // n*n row-major: table[s*n + t] = s*t

  // Optional construction metadata.
  std::vector<int> generators;         // element indices of the generators
  int degree = 0;                      // >0 when built from transformations
  std::vector<std::vector<int>> maps;  // per-element point map (transformations only)

  int prod(int s, int t) const { return table[static_cast<std::size_t>(s) * n + t]; }
  bool isIdempotent(int s) const { return prod(s, s) == s; }
  /// Two-sided identity, if one exists.
  std::optional<int> identityElement() const;
};

/// Validates shape, entry range and associativity (exhaustive over all
/// triples).  Errors: IndexOutOfRange, NonAssociative with a witness triple.
Semigroup fromCayleyTable(const std::vector<std::vector<int>>& table);

/// Closure of total point maps on {0..degree-1} under composition, breadth
/// first from the generators in the given order.  Composition is the right
/// action: (s*t)(x) = t(s(x)).  Errors: SizeLimitExceeded past `sizeCap`.
Semigroup fromTransformations(int degree, const std::vector<std::vector<int>>& generators,
                              std::size_t sizeCap = 100000);

/// S^1: a fresh two-sided identity is adjoined even if S already has one.
Semigroup adjoinIdentity(const Semigroup& s);

}  // namespace semirep
