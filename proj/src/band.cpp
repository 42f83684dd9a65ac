#include "semirep/band.hpp"

namespace semirep {

bool isBand(const Semigroup& s) {
  for (int x = 0; x < s.n; ++x)
    if (!s.isIdempotent(x)) return false;
  return true;
}

bool complementClosedCheck(const Semigroup& s, const GreenStructure& g, int jClassId) {
  // s is outside I_J exactly when J <=_J J(s)
  std::vector<int> comp;
  for (int x = 0; x < s.n; ++x)
    if (g.jBelowOrEqual(jClassId, g.jOf[static_cast<std::size_t>(x)])) comp.push_back(x);
  for (int a : comp)
    for (int b : comp)
      if (!g.jBelowOrEqual(jClassId, g.jOf[static_cast<std::size_t>(s.prod(a, b))])) return false;
  return true;
}

bool isInDA(const Semigroup& s, const GreenStructure& g) {
  for (int e : g.idempotents) {
    const MaxSubgroup grp = maximalSubgroup(s, g, e);
    if (grp.order() != 1) return false;
  }
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) continue;
    const auto& cls = g.jClasses[static_cast<std::size_t>(j)];
    for (int a : cls)
      for (int b : cls)
        if (g.jOf[static_cast<std::size_t>(s.prod(a, b))] != j) return false;
  }
  return true;
}

}  // namespace semirep
