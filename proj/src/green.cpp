#include "semirep/green.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace semirep {

namespace {

using BoolVec = std::vector<bool>;

// Principal right ideal s S^1 as a membership vector.
BoolVec rightIdeal(const Semigroup& s, int x) {
  BoolVec in(static_cast<std::size_t>(s.n), false);
  in[static_cast<std::size_t>(x)] = true;
  for (int t = 0; t < s.n; ++t) in[static_cast<std::size_t>(s.prod(x, t))] = true;
  return in;
}

BoolVec leftIdeal(const Semigroup& s, int x) {
  BoolVec in(static_cast<std::size_t>(s.n), false);
  in[static_cast<std::size_t>(x)] = true;
  for (int t = 0; t < s.n; ++t) in[static_cast<std::size_t>(s.prod(t, x))] = true;
  return in;
}

// Principal two-sided ideal S^1 x S^1.
BoolVec twoSidedIdeal(const Semigroup& s, int x) {
  BoolVec in(static_cast<std::size_t>(s.n), false);
  auto addRow = [&](int y) {
    in[static_cast<std::size_t>(y)] = true;
    for (int t = 0; t < s.n; ++t) in[static_cast<std::size_t>(s.prod(y, t))] = true;
  };
  addRow(x);
  for (int u = 0; u < s.n; ++u) addRow(s.prod(u, x));
  return in;
}

// Numbers equivalence classes so that class ids follow minimum elements.
void canonicalPartition(const std::vector<BoolVec>& keys, std::vector<int>& classOf,
                        std::vector<std::vector<int>>& classes) {
  const int n = static_cast<int>(keys.size());
  classOf.assign(static_cast<std::size_t>(n), -1);
  classes.clear();
  std::map<BoolVec, int> seen;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = seen.try_emplace(keys[static_cast<std::size_t>(x)],
                                        static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classOf[static_cast<std::size_t>(x)] = it->second;
    classes[static_cast<std::size_t>(it->second)].push_back(x);
  }
  // first appearance order equals minimum-element order, classes stay sorted
}

bool subset(const BoolVec& a, const BoolVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

GreenStructure greenStructure(const Semigroup& s) {
  const int n = s.n;
  GreenStructure g;
  g.n = n;

  std::vector<BoolVec> rIdeals, lIdeals, jIdeals;
  rIdeals.reserve(n);
  lIdeals.reserve(n);
  jIdeals.reserve(n);
  for (int x = 0; x < n; ++x) {
    rIdeals.push_back(rightIdeal(s, x));
    lIdeals.push_back(leftIdeal(s, x));
    jIdeals.push_back(twoSidedIdeal(s, x));
  }

  canonicalPartition(rIdeals, g.rOf, g.rClasses);
  canonicalPartition(lIdeals, g.lOf, g.lClasses);
  canonicalPartition(jIdeals, g.jOf, g.jClasses);

  // H = R meet L
  {
    std::vector<BoolVec> hKeys(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      BoolVec key(2 * static_cast<std::size_t>(n), false);
      key[static_cast<std::size_t>(g.rOf[static_cast<std::size_t>(x)])] = true;
      key[static_cast<std::size_t>(n + g.lOf[static_cast<std::size_t>(x)])] = true;
      hKeys[static_cast<std::size_t>(x)] = std::move(key);
    }
    canonicalPartition(hKeys, g.hOf, g.hClasses);
  }

  // every R-class and L-class lies inside one J-class
  for (int x = 0; x < n; ++x) {
    if (g.jOf[static_cast<std::size_t>(g.rClasses[static_cast<std::size_t>(g.rOf[static_cast<std::size_t>(x)])][0])] !=
        g.jOf[static_cast<std::size_t>(x)])
      internalError("InternalInconsistency", "R-class crosses J-classes");
    if (g.jOf[static_cast<std::size_t>(g.lClasses[static_cast<std::size_t>(g.lOf[static_cast<std::size_t>(x)])][0])] !=
        g.jOf[static_cast<std::size_t>(x)])
      internalError("InternalInconsistency", "L-class crosses J-classes");
  }

  const int nj = static_cast<int>(g.jClasses.size());
  g.jLeq.assign(static_cast<std::size_t>(nj), BoolVec(static_cast<std::size_t>(nj), false));
  for (int a = 0; a < nj; ++a)
    for (int b = 0; b < nj; ++b)
      g.jLeq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          subset(jIdeals[static_cast<std::size_t>(g.jClasses[static_cast<std::size_t>(a)][0])],
                 jIdeals[static_cast<std::size_t>(g.jClasses[static_cast<std::size_t>(b)][0])]);

  // cover edges of the strict order, sorted
  for (int a = 0; a < nj; ++a) {
    for (int b = 0; b < nj; ++b) {
      if (a == b || !g.jBelowOrEqual(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < nj && cover; ++c)
        if (c != a && c != b && g.jBelowOrEqual(a, c) && g.jBelowOrEqual(c, b)) cover = false;
      if (cover) g.jOrderEdges.emplace_back(a, b);
    }
  }
  std::sort(g.jOrderEdges.begin(), g.jOrderEdges.end());

  for (int x = 0; x < n; ++x)
    if (s.isIdempotent(x)) g.idempotents.push_back(x);

  g.regular.assign(static_cast<std::size_t>(nj), false);
  g.apexTransversal.assign(static_cast<std::size_t>(nj), -1);
  for (int j = 0; j < nj; ++j) {
    const auto& cls = g.jClasses[static_cast<std::size_t>(j)];
    bool hasIdem = false;
    for (int x : cls)
      if (s.isIdempotent(x)) {
        hasIdem = true;
        if (g.apexTransversal[static_cast<std::size_t>(j)] < 0)
          g.apexTransversal[static_cast<std::size_t>(j)] = x;  // minimum index: cls is sorted
      }
    bool squareMeets = false;
    for (int x : cls) {
      for (int y : cls)
        if (g.jOf[static_cast<std::size_t>(s.prod(x, y))] == j) { squareMeets = true; break; }
      if (squareMeets) break;
    }
    if (hasIdem != squareMeets)
      internalError("InternalInconsistency",
                    "regularity tests disagree on J-class " + std::to_string(j));
    g.regular[static_cast<std::size_t>(j)] = hasIdem;
  }

  return g;
}

std::vector<int> idealIJ(const Semigroup& s, const GreenStructure& g, int jClassId) {
  if (jClassId < 0 || jClassId >= static_cast<int>(g.jClasses.size()))
    inputError("IndexOutOfRange", "bad J-class id " + std::to_string(jClassId));
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x)
    if (!g.jBelowOrEqual(jClassId, g.jOf[static_cast<std::size_t>(x)])) out.push_back(x);
  // two-sided ideal check
  std::vector<bool> in(static_cast<std::size_t>(s.n), false);
  for (int x : out) in[static_cast<std::size_t>(x)] = true;
  for (int x : out)
    for (int t = 0; t < s.n; ++t)
      if (!in[static_cast<std::size_t>(s.prod(x, t))] || !in[static_cast<std::size_t>(s.prod(t, x))])
        internalError("InternalInconsistency", "I_J is not an ideal");
  return out;
}

MaxSubgroup maximalSubgroup(const Semigroup& s, const GreenStructure& g, int e) {
  if (e < 0 || e >= s.n || !s.isIdempotent(e))
    inputError("NotIdempotent", "element " + std::to_string(e));
  const int j = g.jOf[static_cast<std::size_t>(e)];

  MaxSubgroup grp;
  grp.jClassId = j;
  grp.identity = e;
  std::vector<bool> seen(static_cast<std::size_t>(s.n), false);
  for (int t = 0; t < s.n; ++t) {
    const int x = s.prod(s.prod(e, t), e);
    if (!seen[static_cast<std::size_t>(x)] && g.jOf[static_cast<std::size_t>(x)] == j) {
      seen[static_cast<std::size_t>(x)] = true;
      grp.elements.push_back(x);
    }
  }
  std::sort(grp.elements.begin(), grp.elements.end());

  grp.posOf.assign(static_cast<std::size_t>(s.n), -1);
  for (std::size_t i = 0; i < grp.elements.size(); ++i)
    grp.posOf[static_cast<std::size_t>(grp.elements[i])] = static_cast<int>(i);

  // group axioms: closure, identity, two-sided inverses
  for (int a : grp.elements) {
    if (s.prod(e, a) != a || s.prod(a, e) != a)
      internalError("InternalInconsistency", "e is not an identity of eSe meet J");
    for (int b : grp.elements)
      if (grp.pos(s.prod(a, b)) < 0)
        internalError("InternalInconsistency", "maximal subgroup not closed");
  }
  grp.inverse.assign(grp.elements.size(), -1);
  for (std::size_t i = 0; i < grp.elements.size(); ++i) {
    const int a = grp.elements[i];
    for (int b : grp.elements)
      if (s.prod(a, b) == e && s.prod(b, a) == e) { grp.inverse[i] = b; break; }
    if (grp.inverse[i] < 0)
      internalError("InternalInconsistency", "element without inverse in maximal subgroup");
  }
  return grp;
}

std::optional<std::pair<int, int>> idempotentsIsomorphic(const Semigroup& s,
                                                         const GreenStructure& g, int e, int f) {
  if (e < 0 || e >= s.n || !s.isIdempotent(e)) inputError("NotIdempotent", std::to_string(e));
  if (f < 0 || f >= s.n || !s.isIdempotent(f)) inputError("NotIdempotent", std::to_string(f));

  std::vector<int> eSf, fSe;
  {
    std::vector<bool> a(static_cast<std::size_t>(s.n), false), b(static_cast<std::size_t>(s.n), false);
    for (int t = 0; t < s.n; ++t) {
      a[static_cast<std::size_t>(s.prod(s.prod(e, t), f))] = true;
      b[static_cast<std::size_t>(s.prod(s.prod(f, t), e))] = true;
    }
    for (int x = 0; x < s.n; ++x) {
      if (a[static_cast<std::size_t>(x)]) eSf.push_back(x);
      if (b[static_cast<std::size_t>(x)]) fSe.push_back(x);
    }
  }

  std::optional<std::pair<int, int>> witness;
  for (int x : eSf) {
    for (int xp : fSe)
      if (s.prod(x, xp) == e && s.prod(xp, x) == f) { witness = std::make_pair(x, xp); break; }
    if (witness) break;
  }

  const bool sameJ = g.jOf[static_cast<std::size_t>(e)] == g.jOf[static_cast<std::size_t>(f)];
  if (witness.has_value() != sameJ)
    internalError("InternalInconsistency", "idempotent witness disagrees with J-partition");
  return witness;
}

JClassData jclassData(const Semigroup& s, const GreenStructure& g, int jClassId,
                      std::optional<int> chosenIdempotent) {
  if (jClassId < 0 || jClassId >= static_cast<int>(g.jClasses.size()))
    inputError("IndexOutOfRange", "bad J-class id " + std::to_string(jClassId));
  if (!g.regular[static_cast<std::size_t>(jClassId)])
    inputError("NotRegular", "J-class " + std::to_string(jClassId));

  JClassData d;
  d.jClassId = jClassId;
  d.eJ = chosenIdempotent.value_or(g.apexTransversal[static_cast<std::size_t>(jClassId)]);
  if (!s.isIdempotent(d.eJ) || g.jOf[static_cast<std::size_t>(d.eJ)] != jClassId)
    inputError("NotIdempotent",
               "element " + std::to_string(d.eJ) + " is not an idempotent of J-class " +
                   std::to_string(jClassId));

  d.group = maximalSubgroup(s, g, d.eJ);

  // R_{e} = eS meet J must be exactly the R-class of e; dually for L_{e}.
  {
    std::vector<bool> in(static_cast<std::size_t>(s.n), false);
    for (int t = 0; t < s.n; ++t) {
      const int x = s.prod(d.eJ, t);
      if (g.jOf[static_cast<std::size_t>(x)] == jClassId) in[static_cast<std::size_t>(x)] = true;
    }
    for (int x = 0; x < s.n; ++x)
      if (in[static_cast<std::size_t>(x)]) d.rClassOfE.push_back(x);
    if (d.rClassOfE != g.rClasses[static_cast<std::size_t>(g.rOf[static_cast<std::size_t>(d.eJ)])])
      internalError("InternalInconsistency", "eS meet J differs from the R-class of e");
  }
  {
    std::vector<bool> in(static_cast<std::size_t>(s.n), false);
    for (int t = 0; t < s.n; ++t) {
      const int x = s.prod(t, d.eJ);
      if (g.jOf[static_cast<std::size_t>(x)] == jClassId) in[static_cast<std::size_t>(x)] = true;
    }
    for (int x = 0; x < s.n; ++x)
      if (in[static_cast<std::size_t>(x)]) d.lClassOfE.push_back(x);
    if (d.lClassOfE != g.lClasses[static_cast<std::size_t>(g.lOf[static_cast<std::size_t>(d.eJ)])])
      internalError("InternalInconsistency", "Se meet J differs from the L-class of e");
  }

  d.rPosOf.assign(static_cast<std::size_t>(s.n), -1);
  for (std::size_t i = 0; i < d.rClassOfE.size(); ++i)
    d.rPosOf[static_cast<std::size_t>(d.rClassOfE[i])] = static_cast<int>(i);
  d.lPosOf.assign(static_cast<std::size_t>(s.n), -1);
  for (std::size_t i = 0; i < d.lClassOfE.size(); ++i)
    d.lPosOf[static_cast<std::size_t>(d.lClassOfE[i])] = static_cast<int>(i);

  // Free left G-action on R_e: orbit minima are the transversal T, one orbit
  // per L-class of J.  Unique factorization x = g*t is recorded as it is
  // discovered; any collision breaks freeness and aborts.
  {
    const std::size_t sz = d.rClassOfE.size();
    std::vector<int> orbitOf(sz, -1);
    for (std::size_t i = 0; i < sz; ++i) {
      if (orbitOf[i] >= 0) continue;
      const int t = d.rClassOfE[i];  // minimum unvisited element starts a new orbit
      const int tIdx = static_cast<int>(d.lTransversal.size());
      d.lTransversal.push_back(t);
      for (int gi = 0; gi < d.group.order(); ++gi) {
        const int x = s.prod(d.group.elements[static_cast<std::size_t>(gi)], t);
        const int xPos = d.rPosOf[static_cast<std::size_t>(x)];
        if (xPos < 0)
          internalError("InternalInconsistency", "G-action leaves R_e");
        if (orbitOf[static_cast<std::size_t>(xPos)] >= 0)
          internalError("InternalInconsistency", "left G-action on R_e is not free");
        orbitOf[static_cast<std::size_t>(xPos)] = tIdx;
      }
    }
    d.factorR.assign(sz, {-1, -1});
    for (std::size_t i = 0; i < sz; ++i) {
      const int tIdx = orbitOf[i];
      const int t = d.lTransversal[static_cast<std::size_t>(tIdx)];
      for (int gi = 0; gi < d.group.order(); ++gi)
        if (s.prod(d.group.elements[static_cast<std::size_t>(gi)], t) == d.rClassOfE[i]) {
          d.factorR[i] = {gi, tIdx};
          break;
        }
      if (d.factorR[i].first < 0)
        internalError("InternalInconsistency", "missing factorization in R_e");
    }
    // orbits correspond to L-classes
    if (sz != static_cast<std::size_t>(d.group.order()) * d.lTransversal.size())
      internalError("InternalInconsistency", "|R_e| != |G| * n_J");
    std::vector<int> lSeen;
    for (int t : d.lTransversal) lSeen.push_back(g.lOf[static_cast<std::size_t>(t)]);
    std::sort(lSeen.begin(), lSeen.end());
    if (std::adjacent_find(lSeen.begin(), lSeen.end()) != lSeen.end())
      internalError("InternalInconsistency", "two T-elements share an L-class");
    std::size_t lCount = 0;
    for (const auto& cls : g.lClasses)
      if (g.jOf[static_cast<std::size_t>(cls[0])] == jClassId) ++lCount;
    if (lCount != d.lTransversal.size())
      internalError("InternalInconsistency", "G-orbits on R_e do not match L-classes of J");
  }

  // Mirror image: free right G-action on L_e, orbits are the R-classes of J.
  {
    const std::size_t sz = d.lClassOfE.size();
    std::vector<int> orbitOf(sz, -1);
    for (std::size_t i = 0; i < sz; ++i) {
      if (orbitOf[i] >= 0) continue;
      const int l = d.lClassOfE[i];
      const int lIdx = static_cast<int>(d.rTransversal.size());
      d.rTransversal.push_back(l);
      for (int gi = 0; gi < d.group.order(); ++gi) {
        const int x = s.prod(l, d.group.elements[static_cast<std::size_t>(gi)]);
        const int xPos = d.lPosOf[static_cast<std::size_t>(x)];
        if (xPos < 0) internalError("InternalInconsistency", "G-action leaves L_e");
        if (orbitOf[static_cast<std::size_t>(xPos)] >= 0)
          internalError("InternalInconsistency", "right G-action on L_e is not free");
        orbitOf[static_cast<std::size_t>(xPos)] = lIdx;
      }
    }
    d.factorL.assign(sz, {-1, -1});
    for (std::size_t i = 0; i < sz; ++i) {
      const int lIdx = orbitOf[i];
      const int l = d.rTransversal[static_cast<std::size_t>(lIdx)];
      for (int gi = 0; gi < d.group.order(); ++gi)
        if (s.prod(l, d.group.elements[static_cast<std::size_t>(gi)]) == d.lClassOfE[i]) {
          d.factorL[i] = {lIdx, gi};
          break;
        }
      if (d.factorL[i].first < 0)
        internalError("InternalInconsistency", "missing factorization in L_e");
    }
    if (sz != static_cast<std::size_t>(d.group.order()) * d.rTransversal.size())
      internalError("InternalInconsistency", "|L_e| != |G| * m_J");
    std::size_t rCount = 0;
    for (const auto& cls : g.rClasses)
      if (g.jOf[static_cast<std::size_t>(cls[0])] == jClassId) ++rCount;
    if (rCount != d.rTransversal.size())
      internalError("InternalInconsistency", "G-orbits on L_e do not match R-classes of J");
  }

  // Sandwich entries t_a * l_b live in e S e, hence in G or in I_J.
  d.sandwich.assign(static_cast<std::size_t>(d.mJ()) * d.nJ(), -1);
  for (int b = 0; b < d.mJ(); ++b) {
    for (int a = 0; a < d.nJ(); ++a) {
      const int x = s.prod(d.lTransversal[static_cast<std::size_t>(a)],
                           d.rTransversal[static_cast<std::size_t>(b)]);
      if (d.group.pos(x) >= 0) {
        d.sandwich[static_cast<std::size_t>(b) * d.nJ() + a] = x;
      } else if (g.jBelowOrEqual(jClassId, g.jOf[static_cast<std::size_t>(x)])) {
        internalError("InternalInconsistency", "sandwich product escapes G and I_J");
      }
    }
  }

  d.ideal = idealIJ(s, g, jClassId);
  return d;
}

}  // namespace semirep
