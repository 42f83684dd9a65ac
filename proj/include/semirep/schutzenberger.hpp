#pragma once

#include <vector>

#include "semirep/green.hpp"
#include "semirep/semigroup.hpp"

namespace semirep {

/// Monomial matrix representation of S over G_J adjoined with zero.  Entries
/// are semigroup element indices of members of G_J, or -1 for the zero
/// symbol.  The right version is row-monomial of size n_J (rows indexed by
/// the L-class transversal T, entry (a, b) = g when T[a]*s = g*T[b]); the
/// left version is column-monomial of size m_J (entry (c, b) = g when
/// s*rT[b] = rT[c]*g).  Both are multiplicative, rho(s)rho(t) = rho(st), and
/// send all of I_J to the zero matrix.
struct MonomialRep {
  int jClassId = -1;
  bool rightSide = true;
  int size = 0;
  std::vector<std::vector<int>> entries;  // per element: size*size row-major, -1 = zero

  int at(int s, int row, int col) const {
    return entries[static_cast<std::size_t>(s)][static_cast<std::size_t>(row) * size + col];
  }
};

MonomialRep rightSchutzenberger(const Semigroup& s, const JClassData& jd);
MonomialRep leftSchutzenberger(const Semigroup& s, const JClassData& jd);

bool isRowMonomial(const MonomialRep& rep, int s);
bool isColumnMonomial(const MonomialRep& rep, int s);

/// Product of two monomial matrices in M_size(G u {0}); aborts if a sum of
/// two nonzero terms appears (which would leave the monomial world).
std::vector<int> monomialProduct(const Semigroup& s, const MonomialRep& rep, int a, int b);

/// Monomiality on every element, multiplicativity on all of S x S, and
/// annihilation of I_J.  Throws InternalInconsistency on failure.
void verifyMonomialRep(const Semigroup& s, const JClassData& jd, const MonomialRep& rep);

}  // namespace semirep
