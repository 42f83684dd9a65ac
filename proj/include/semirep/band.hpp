#pragma once

#include <utility>
#include <vector>

#include "semirep/green.hpp"
#include "semirep/modules.hpp"

namespace semirep {

/// Every element idempotent.
bool isBand(const Semigroup& s);

/// S minus I_J closed under multiplication (exhaustive check).  Meaningful
/// beyond bands: the degree-one formula below is multiplicative exactly when
/// this holds.
bool complementClosedCheck(const Semigroup& s, const GreenStructure& g, int jClassId);

/// Trivial subgroups and every regular J-class a subsemigroup.
bool isInDA(const Semigroup& s, const GreenStructure& g);

/// The degree-one representation s |-> [s in I_J ? 0 : 1] as a dim-1 SModule,
/// so the generic verification machinery applies unchanged.
template <class K>
SModule<K> complementIndicatorModule(const Semigroup& s, const GreenStructure& g, int jClassId,
                                     const Field& f) {
  SModule<K> m;
  m.dim = 1;
  m.field = f;
  m.actions.reserve(static_cast<std::size_t>(s.n));
  for (int x = 0; x < s.n; ++x) {
    Mat<K> a(1, 1);
    a(0, 0) = FieldOps<K>::make(f, g.jBelowOrEqual(jClassId, g.jOf[static_cast<std::size_t>(x)]) ? 1 : 0);
    m.actions.push_back(std::move(a));
  }
  return m;
}

/// One degree-one representation per J-class of a band (all are regular).
/// NotABand otherwise.  Each representation is checked multiplicative via the
/// complement-closure property above.
template <class K>
std::vector<std::pair<int, SModule<K>>> bandIrreducibles(const Semigroup& s,
                                                         const GreenStructure& g, const Field& f) {
  if (!isBand(s)) inputError("NotABand", "input semigroup has a non-idempotent element");
  std::vector<std::pair<int, SModule<K>>> out;
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    if (!g.regular[static_cast<std::size_t>(j)])
      internalError("InternalInconsistency", "band with a non-regular J-class");
    if (!complementClosedCheck(s, g, j))
      internalError("InternalInconsistency",
                    "complement of I_J not closed in a band, J-class " + std::to_string(j));
    out.emplace_back(j, complementIndicatorModule<K>(s, g, j, f));
  }
  return out;
}

/// Same formula on the DA class.  NotInDA otherwise.
template <class K>
std::vector<std::pair<int, SModule<K>>> daIrreducibles(const Semigroup& s,
                                                       const GreenStructure& g, const Field& f) {
  if (!isInDA(s, g)) inputError("NotInDA", "subgroup nontrivial or a regular J-class not closed");
  std::vector<std::pair<int, SModule<K>>> out;
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) continue;
    if (!complementClosedCheck(s, g, j))
      internalError("InternalInconsistency",
                    "complement of I_J not closed for DA input, J-class " + std::to_string(j));
    out.emplace_back(j, complementIndicatorModule<K>(s, g, j, f));
  }
  return out;
}

}  // namespace semirep
