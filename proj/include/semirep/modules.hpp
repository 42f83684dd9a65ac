#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "semirep/green.hpp"
#include "semirep/linalg.hpp"
#include "semirep/semigroup.hpp"

namespace semirep {

/// Right KS-module: row vectors, one dim x dim action matrix per semigroup
/// element, v acting as v * action[s].
template <class K>
struct SModule {
  Index dim = 0;
  Field field;
  std::vector<Mat<K>> actions;  // indexed by semigroup element
};

/// Right KG-module for a maximal subgroup; actions indexed by position in
/// MaxSubgroup::elements, action at the identity position is I.
template <class K>
struct GModule {
  Index dim = 0;
  Field field;
  std::vector<Mat<K>> actions;  // indexed by group position
};

template <class K>
using Actions = std::span<const Mat<K>>;

template <class K>
bool allActionsZero(Actions<K> acts) {
  for (const auto& a : acts)
    if (!isZeroMat(a)) return false;
  return true;
}

/// Regular module of KS: basis indexed by elements, action(t): s |-> s*t.
template <class K>
SModule<K> regularSModule(const Semigroup& s, const Field& f) {
  SModule<K> m;
  m.dim = s.n;
  m.field = f;
  m.actions.reserve(static_cast<std::size_t>(s.n));
  for (int t = 0; t < s.n; ++t) {
    Mat<K> a = zeros<K>(f, s.n, s.n);
    for (int x = 0; x < s.n; ++x) a(x, s.prod(x, t)) = FieldOps<K>::make(f, 1);
    m.actions.push_back(std::move(a));
  }
  return m;
}

/// Regular module of KG: permutation matrices of right translation.
template <class K>
GModule<K> regularGModule(const Semigroup& s, const MaxSubgroup& grp, const Field& f) {
  GModule<K> m;
  m.dim = grp.order();
  m.field = f;
  m.actions.reserve(grp.elements.size());
  for (int gPos = 0; gPos < grp.order(); ++gPos) {
    Mat<K> a = zeros<K>(f, m.dim, m.dim);
    for (int hPos = 0; hPos < grp.order(); ++hPos) {
      const int hg = s.prod(grp.elements[static_cast<std::size_t>(hPos)],
                            grp.elements[static_cast<std::size_t>(gPos)]);
      a(hPos, grp.pos(hg)) = FieldOps<K>::make(f, 1);
    }
    m.actions.push_back(std::move(a));
  }
  return m;
}

/// Smallest subspace containing `vectors` and closed under every action;
/// returned as a canonical rref basis.  Stops early once the span is full.
template <class K>
Mat<K> spin(const Mat<K>& vectors, Actions<K> acts, Index dim, const Field& f) {
  if (vectors.rows() > 0 && vectors.cols() != dim)
    internalError("DimensionMismatch", "spin seed width does not match module dimension");
  Rref<K> basis;
  basis.mat.resize(0, dim);
  std::vector<RowVec<K>> queue;
  for (Index i = 0; i < vectors.rows(); ++i) {
    RowVec<K> v = vectors.row(i);
    if (rrefInsert(basis, v)) queue.push_back(vectors.row(i));
  }
  for (std::size_t head = 0; head < queue.size() && basis.rank() < dim; ++head) {
    for (const auto& a : acts) {
      RowVec<K> w = queue[head] * a;
      RowVec<K> copy = w;
      if (rrefInsert(basis, copy)) {
        queue.push_back(std::move(w));
        if (basis.rank() == dim) break;
      }
    }
  }
  if (basis.rank() == dim) return identity<K>(f, dim);
  return basis.mat;
}

/// Restriction of the actions to an invariant subspace given by a row basis;
/// coordinates live at the rref pivot columns.  NotInvariant when an image
/// leaves the span.
template <class K>
std::vector<Mat<K>> restrictActions(Actions<K> acts, const Mat<K>& basis) {
  const Rref<K> b = rref(basis);
  std::vector<Mat<K>> out;
  out.reserve(acts.size());
  for (std::size_t s = 0; s < acts.size(); ++s) {
    Mat<K> image = b.mat * acts[s];
    for (Index i = 0; i < image.rows(); ++i) {
      RowVec<K> v = image.row(i);
      reduceRow(b, v);
      if (!isZeroRow(v))
        internalError("NotInvariant", "subspace not closed under action " + std::to_string(s));
    }
    out.push_back(coordinatesIn(b, image));
  }
  return out;
}

/// Quotient by an invariant subspace: quotient actions plus the dim x q
/// projection whose rows are the images of the standard basis.
template <class K>
struct QuotientResult {
  std::vector<Mat<K>> actions;
  Mat<K> projection;
  Index dim = 0;
};

template <class K>
QuotientResult<K> quotientActions(Actions<K> acts, Index dim, const Field& f,
                                  const Mat<K>& subBasis) {
  const Rref<K> w = rref(subBasis);
  for (std::size_t s = 0; s < acts.size(); ++s)
    for (Index i = 0; i < w.rank(); ++i) {
      RowVec<K> v = w.mat.row(i) * acts[s];
      reduceRow(w, v);
      if (!isZeroRow(v))
        internalError("NotInvariant", "submodule not invariant under action " + std::to_string(s));
    }

  std::vector<bool> isPivot(static_cast<std::size_t>(dim), false);
  for (Index p : w.pivots) isPivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> freeCols;
  for (Index j = 0; j < dim; ++j)
    if (!isPivot[static_cast<std::size_t>(j)]) freeCols.push_back(j);
  const Index q = static_cast<Index>(freeCols.size());

  QuotientResult<K> res;
  res.dim = q;
  res.projection = zeros<K>(f, dim, q);
  for (Index i = 0; i < dim; ++i) {
    Mat<K> unit = zeros<K>(f, 1, dim);
    unit(0, i) = FieldOps<K>::make(f, 1);
    RowVec<K> v = unit.row(0);
    reduceRow(w, v);
    for (Index j = 0; j < q; ++j) res.projection(i, j) = v(freeCols[static_cast<std::size_t>(j)]);
  }
  res.actions.reserve(acts.size());
  for (const auto& a : acts) {
    Mat<K> qa(q, q);
    for (Index i = 0; i < q; ++i)
      qa.row(i) = a.row(freeCols[static_cast<std::size_t>(i)]) * res.projection;
    res.actions.push_back(std::move(qa));
  }
  // surjective by construction; intertwining is the real invariant
  for (std::size_t s = 0; s < acts.size(); ++s) {
    Mat<K> lhs = acts[s] * res.projection;
    Mat<K> rhs = res.projection * res.actions[s];
    if (!matEq(lhs, rhs))
      internalError("InternalInconsistency", "quotient projection fails to intertwine");
  }
  return res;
}

template <class K>
SModule<K> quotientModule(const SModule<K>& m, const Mat<K>& subBasis,
                          Mat<K>* projectionOut = nullptr) {
  auto res = quotientActions<K>(m.actions, m.dim, m.field, subBasis);
  if (projectionOut) *projectionOut = res.projection;
  return SModule<K>{res.dim, m.field, std::move(res.actions)};
}

/// All intertwiners X with actionA(s) X = X actionB(s), as a basis list.
template <class K>
std::vector<Mat<K>> homSpace(Actions<K> actsA, Actions<K> actsB, Index dimA, Index dimB,
                             const Field& f) {
  if (actsA.size() != actsB.size())
    internalError("DimensionMismatch", "hom between modules over different algebras");
  if (dimA == 0 || dimB == 0) return {};
  const Index unknowns = dimA * dimB;  // X[k][j] at k*dimB + j
  Mat<K> sys = zeros<K>(f, static_cast<Index>(actsA.size()) * unknowns, unknowns);
  Index row = 0;
  for (std::size_t s = 0; s < actsA.size(); ++s) {
    const Mat<K>& a = actsA[s];
    const Mat<K>& b = actsB[s];
    for (Index i = 0; i < dimA; ++i)
      for (Index j = 0; j < dimB; ++j) {
        for (Index k = 0; k < dimA; ++k) sys(row, k * dimB + j) += a(i, k);
        for (Index l = 0; l < dimB; ++l) sys(row, i * dimB + l) -= b(l, j);
        ++row;
      }
  }
  Mat<K> kernel = rightKernelBasis(sys);
  std::vector<Mat<K>> out;
  out.reserve(static_cast<std::size_t>(kernel.rows()));
  for (Index r = 0; r < kernel.rows(); ++r) {
    Mat<K> x(dimA, dimB);
    for (Index i = 0; i < dimA; ++i)
      for (Index j = 0; j < dimB; ++j) x(i, j) = kernel(r, i * dimB + j);
    out.push_back(std::move(x));
  }
  return out;
}

template <class K>
std::vector<Mat<K>> homSpace(const SModule<K>& a, const SModule<K>& b) {
  return homSpace<K>(a.actions, b.actions, a.dim, b.dim, a.field);
}

template <class K>
std::vector<Mat<K>> homSpace(const GModule<K>& a, const GModule<K>& b) {
  return homSpace<K>(a.actions, b.actions, a.dim, b.dim, a.field);
}

enum class Simplicity { Simple, ProbablySimple, NotSimple };

template <class K>
struct SimplicityResult {
  Simplicity verdict = Simplicity::NotSimple;
  std::optional<Mat<K>> witness;  // proper nonzero invariant subspace
};

enum class SimplicityMode { Exhaustive, Sampled, Auto };

/// p^dim <= 2^capLog2 gates exhaustive vector enumeration.
inline bool withinExhaustiveCap(const Field& f, Index dim, int capLog2 = 20) {
  if (f.kind != Field::Kind::Prime) return false;
  const double bits = static_cast<double>(dim) * std::log2(static_cast<double>(f.p));
  return bits <= static_cast<double>(capLog2);
}

/// One representative per projective point of F_p^dim (first nonzero
/// coordinate 1).  Returns false if `fn` stopped the enumeration.
template <class K>
bool forEachProjectiveVector(const Field& f, Index dim,
                             const std::function<bool(const Mat<K>&)>& fn) {
  for (Index lead = dim - 1; lead >= 0; --lead) {
    // leading one at `lead`, arbitrary residues to its right
    std::vector<std::uint64_t> suffix(static_cast<std::size_t>(dim - lead - 1), 0);
    while (true) {
      Mat<K> v = zeros<K>(f, 1, dim);
      v(0, lead) = FieldOps<K>::make(f, 1);
      for (Index j = lead + 1; j < dim; ++j)
        v(0, j) = FieldOps<K>::make(f, static_cast<long long>(suffix[static_cast<std::size_t>(j - lead - 1)]));
      if (!fn(v)) return false;
      std::size_t pos = 0;
      for (; pos < suffix.size(); ++pos) {
        if (++suffix[pos] < f.p) break;
        suffix[pos] = 0;
      }
      if (pos == suffix.size()) break;
    }
  }
  return true;
}

template <class K>
Mat<K> randomRowVector(const Field& f, Index dim, std::mt19937_64& rng) {
  Mat<K> v = zeros<K>(f, 1, dim);
  const K zero = FieldOps<K>::make(f, 0);
  do {
    for (Index j = 0; j < dim; ++j) v(0, j) = FieldOps<K>::randomCoeff(f, rng);
  } while (isZeroMat(v));
  (void)zero;
  return v;
}

/// Simplicity test by spinning.  Exhaustive mode enumerates all projective
/// vectors and is a proof; sampled mode spins the standard basis plus
/// `sampledTries` random vectors and can only return a witness or
/// ProbablySimple.  ZeroAction when MA = 0.
template <class K>
SimplicityResult<K> isSimple(Actions<K> acts, Index dim, const Field& f, SimplicityMode mode,
                             std::mt19937_64& rng, int sampledTries = 64, int capLog2 = 20) {
  if (dim < 1) internalError("ZeroAction", "simplicity of a zero module");
  if (allActionsZero(acts)) internalError("ZeroAction", "module with MA = 0");

  auto check = [&](const Mat<K>& v) -> std::optional<SimplicityResult<K>> {
    Mat<K> span = spin<K>(v, acts, dim, f);
    if (span.rows() > 0 && span.rows() < dim)
      return SimplicityResult<K>{Simplicity::NotSimple, span};
    return std::nullopt;
  };

  if (mode == SimplicityMode::Auto)
    mode = withinExhaustiveCap(f, dim, capLog2) ? SimplicityMode::Exhaustive
                                                : SimplicityMode::Sampled;

  if (mode == SimplicityMode::Exhaustive) {
    if (!withinExhaustiveCap(f, dim, capLog2))
      internalError("DimensionMismatch", "exhaustive simplicity above the p^dim cap");
    SimplicityResult<K> bad;
    bool completed = forEachProjectiveVector<K>(f, dim, [&](const Mat<K>& v) {
      if (auto r = check(v)) {
        bad = *r;
        return false;
      }
      return true;
    });
    if (!completed) return bad;
    return SimplicityResult<K>{Simplicity::Simple, std::nullopt};
  }

  for (Index i = 0; i < dim; ++i) {
    Mat<K> v = zeros<K>(f, 1, dim);
    v(0, i) = FieldOps<K>::make(f, 1);
    if (auto r = check(v)) return *r;
  }
  for (int t = 0; t < sampledTries; ++t) {
    if (auto r = check(randomRowVector<K>(f, dim, rng))) return *r;
  }
  return SimplicityResult<K>{Simplicity::ProbablySimple, std::nullopt};
}

/// V restricted along action(e_J): the row space of action(e_J) carries a
/// G_J-action by right multiplication; returned in basis coordinates.
template <class K>
GModule<K> restrictionToGroupModule(const SModule<K>& m, const Semigroup& s, const JClassData& jd) {
  const Mat<K> basis = rowSpaceBasis(m.actions[static_cast<std::size_t>(jd.eJ)]);
  const Rref<K> b = rref(basis);
  GModule<K> out;
  out.dim = b.rank();
  out.field = m.field;
  out.actions.reserve(jd.group.elements.size());
  for (int g : jd.group.elements) {
    Mat<K> image = b.mat * m.actions[static_cast<std::size_t>(g)];
    out.actions.push_back(coordinatesIn(b, image));
  }
  (void)s;
  return out;
}

/// Block-diagonal direct sum.
template <class K>
GModule<K> directSum(const GModule<K>& a, const GModule<K>& b) {
  GModule<K> out;
  out.dim = a.dim + b.dim;
  out.field = a.field;
  out.actions.reserve(a.actions.size());
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    Mat<K> m = zeros<K>(a.field, out.dim, out.dim);
    m.topLeftCorner(a.dim, a.dim) = a.actions[i];
    m.bottomRightCorner(b.dim, b.dim) = b.actions[i];
    out.actions.push_back(std::move(m));
  }
  return out;
}

/// action(s)action(t) == action(st) over all pairs.
template <class K>
bool isMultiplicative(const Semigroup& s, const SModule<K>& m) {
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      Mat<K> lhs = m.actions[static_cast<std::size_t>(a)] * m.actions[static_cast<std::size_t>(b)];
      if (!matEq(lhs, m.actions[static_cast<std::size_t>(s.prod(a, b))])) return false;
    }
  return true;
}

template <class K>
bool isMultiplicativeGroup(const Semigroup& s, const MaxSubgroup& grp, const GModule<K>& m) {
  for (int a = 0; a < grp.order(); ++a)
    for (int b = 0; b < grp.order(); ++b) {
      const int ab = s.prod(grp.elements[static_cast<std::size_t>(a)],
                            grp.elements[static_cast<std::size_t>(b)]);
      Mat<K> lhs = m.actions[static_cast<std::size_t>(a)] * m.actions[static_cast<std::size_t>(b)];
      if (!matEq(lhs, m.actions[static_cast<std::size_t>(grp.pos(ab))])) return false;
    }
  return true;
}

}  // namespace semirep
