#include "semirep/schutzenberger.hpp"

#include <string>

namespace semirep {

MonomialRep rightSchutzenberger(const Semigroup& s, const JClassData& jd) {
  MonomialRep rep;
  rep.jClassId = jd.jClassId;
  rep.rightSide = true;
  rep.size = jd.nJ();
  rep.entries.assign(static_cast<std::size_t>(s.n),
                     std::vector<int>(static_cast<std::size_t>(rep.size) * rep.size, -1));
  for (int x = 0; x < s.n; ++x) {
    auto& m = rep.entries[static_cast<std::size_t>(x)];
    for (int a = 0; a < rep.size; ++a) {
      const int t = jd.lTransversal[static_cast<std::size_t>(a)];
      const int ts = s.prod(t, x);
      const int pos = jd.rPosOf[static_cast<std::size_t>(ts)];
      if (pos < 0) continue;  // t*x left R_e, the row stays zero
      const auto [gPos, tIdx] = jd.factorR[static_cast<std::size_t>(pos)];
      if (gPos < 0)
        internalError("FactorizationFailure",
                      "element " + std::to_string(ts) + " of R_e lacks a g*t factorization");
      m[static_cast<std::size_t>(a) * rep.size + tIdx] =
          jd.group.elements[static_cast<std::size_t>(gPos)];
    }
  }
  return rep;
}

MonomialRep leftSchutzenberger(const Semigroup& s, const JClassData& jd) {
  MonomialRep rep;
  rep.jClassId = jd.jClassId;
  rep.rightSide = false;
  rep.size = jd.mJ();
  rep.entries.assign(static_cast<std::size_t>(s.n),
                     std::vector<int>(static_cast<std::size_t>(rep.size) * rep.size, -1));
  for (int x = 0; x < s.n; ++x) {
    auto& m = rep.entries[static_cast<std::size_t>(x)];
    for (int b = 0; b < rep.size; ++b) {
      const int l = jd.rTransversal[static_cast<std::size_t>(b)];
      const int sl = s.prod(x, l);
      const int pos = jd.lPosOf[static_cast<std::size_t>(sl)];
      if (pos < 0) continue;  // x*l left L_e, the column stays zero
      const auto [lIdx, gPos] = jd.factorL[static_cast<std::size_t>(pos)];
      if (lIdx < 0)
        internalError("FactorizationFailure",
                      "element " + std::to_string(sl) + " of L_e lacks an l*g factorization");
      m[static_cast<std::size_t>(lIdx) * rep.size + b] =
          jd.group.elements[static_cast<std::size_t>(gPos)];
    }
  }
  return rep;
}

bool isRowMonomial(const MonomialRep& rep, int s) {
  for (int r = 0; r < rep.size; ++r) {
    int nz = 0;
    for (int c = 0; c < rep.size; ++c)
      if (rep.at(s, r, c) >= 0) ++nz;
    if (nz > 1) return false;
  }
  return true;
}

bool isColumnMonomial(const MonomialRep& rep, int s) {
  for (int c = 0; c < rep.size; ++c) {
    int nz = 0;
    for (int r = 0; r < rep.size; ++r)
      if (rep.at(s, r, c) >= 0) ++nz;
    if (nz > 1) return false;
  }
  return true;
}

std::vector<int> monomialProduct(const Semigroup& s, const MonomialRep& rep, int a, int b) {
  std::vector<int> out(static_cast<std::size_t>(rep.size) * rep.size, -1);
  for (int i = 0; i < rep.size; ++i) {
    for (int k = 0; k < rep.size; ++k) {
      const int x = rep.at(a, i, k);
      if (x < 0) continue;
      for (int j = 0; j < rep.size; ++j) {
        const int y = rep.at(b, k, j);
        if (y < 0) continue;
        auto& cell = out[static_cast<std::size_t>(i) * rep.size + j];
        if (cell >= 0)
          internalError("InternalInconsistency", "monomial product has a two-term sum");
        cell = s.prod(x, y);
      }
    }
  }
  return out;
}

void verifyMonomialRep(const Semigroup& s, const JClassData& jd, const MonomialRep& rep) {
  for (int x = 0; x < s.n; ++x) {
    const bool ok = rep.rightSide ? isRowMonomial(rep, x) : isColumnMonomial(rep, x);
    if (!ok)
      internalError("InternalInconsistency",
                    "representation of element " + std::to_string(x) + " is not monomial");
  }
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (monomialProduct(s, rep, a, b) != rep.entries[static_cast<std::size_t>(s.prod(a, b))])
        internalError("InternalInconsistency",
                      "monomial representation is not multiplicative at (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
  for (int x : jd.ideal) {
    for (int v : rep.entries[static_cast<std::size_t>(x)])
      if (v >= 0)
        internalError("InternalInconsistency",
                      "element of I_J does not act as zero in the monomial representation");
  }
}

}  // namespace semirep
