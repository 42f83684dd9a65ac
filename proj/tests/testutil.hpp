#pragma once

#include <string>
#include <vector>

#include "semirep/semigroup.hpp"

namespace semirep::test {

// Programmatic builders for the bundled corpus, independent of the JSON
// loader so the data files themselves can be validated against them.

inline Semigroup trivial() { return fromCayleyTable({{0}}); }

inline Semigroup leftZero2() { return fromCayleyTable({{0, 0}, {1, 1}}); }

inline Semigroup rightZero2() { return fromCayleyTable({{0, 1}, {0, 1}}); }

inline Semigroup chain2() { return fromCayleyTable({{0, 0}, {0, 1}}); }

/// (i,j)(k,l) = (i,l) on {0..rows-1} x {0..cols-1}, index = i*cols + j.
inline Semigroup rectBand(int rows, int cols) {
  const int n = rows * cols;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a / cols) * cols + b % cols;
  return fromCayleyTable(t);
}

/// Free band on {a, b}: elements a, b, ab, ba, aba, bab in that order.
inline Semigroup freeBand2() {
  return fromCayleyTable({{0, 2, 2, 4, 4, 2},
                          {3, 1, 5, 3, 3, 5},
                          {4, 2, 2, 4, 4, 2},
                          {3, 5, 5, 3, 3, 5},
                          {4, 2, 2, 4, 4, 2},
                          {3, 5, 5, 3, 3, 5}});
}

inline Semigroup c2() { return fromCayleyTable({{0, 1}, {1, 0}}); }

inline Semigroup s3() { return fromTransformations(3, {{1, 0, 2}, {1, 2, 0}}); }

inline Semigroup t2() { return fromTransformations(2, {{1, 0}, {0, 0}}); }

inline Semigroup t3() { return fromTransformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}); }

/// Monoid {1, x, 0} with x^2 = 0: aperiodic, in DA, not a band.
inline Semigroup daNonBand() { return fromCayleyTable({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}); }

struct CorpusEntry {
  std::string name;
  Semigroup sg;
};

inline std::vector<CorpusEntry> corpus() {
  return {
      {"trivial", trivial()},         {"left-zero-2", leftZero2()},
      {"right-zero-2", rightZero2()}, {"chain-2", chain2()},
      {"rect-band-2x2", rectBand(2, 2)}, {"rect-band-2x3", rectBand(2, 3)},
      {"free-band-2", freeBand2()},   {"c2", c2()},
      {"s3", s3()},                   {"t2", t2()},
      {"t3", t3()},                   {"da-nonband", daNonBand()},
  };
}

inline std::string corpusDir() { return SEMIREP_CORPUS_DIR; }

}  // namespace semirep::test
