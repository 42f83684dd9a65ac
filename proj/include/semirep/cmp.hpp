#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semirep/chop.hpp"
#include "semirep/modules.hpp"
#include "semirep/schutzenberger.hpp"

namespace semirep {

// The classification pipeline: a simple KG_J-module V affording phi turns
// into a simple KS-module twice over, as the head Ind(V)/N of the induced
// module and as the socle im(phi(C)) of the coinduced module.  Both uniqueness
// statements become executable cross-checks here.
//
// Block layout everywhere: coordinate index = transversal index * dim(V) +
// V-coordinate (transversal outer, row-major), so the two radical
// computations and the two socle computations are bit-comparable.

/// phi applied to one monomial matrix: the size*r x size*r block matrix with
/// block (i, j) = phi(g) when entry (i, j) of the monomial matrix is g, and a
/// zero block otherwise.
template <class K>
Mat<K> blockPhi(const MonomialRep& rep, int element, const JClassData& jd, const GModule<K>& v) {
  const Index r = v.dim;
  const Index size = rep.size;
  Mat<K> out = zeros<K>(v.field, size * r, size * r);
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; j < size; ++j) {
      const int g = rep.at(element, static_cast<int>(i), static_cast<int>(j));
      if (g < 0) continue;
      out.block(i * r, j * r, r, r) = v.actions[static_cast<std::size_t>(jd.group.pos(g))];
    }
  return out;
}

/// Ind(V) = V tensor KR_{e_J}: dimension r * n_J, action = blockwise phi of
/// the row-monomial representation.  Elements of I_J act as zero through the
/// monomial representation itself.
template <class K>
SModule<K> induce(const GModule<K>& v, const JClassData& jd, const MonomialRep& rho,
                  const Semigroup& s) {
  if (!rho.rightSide || rho.jClassId != jd.jClassId)
    internalError("DimensionMismatch", "induce needs the right monomial representation of J");
  SModule<K> m;
  m.dim = v.dim * jd.nJ();
  m.field = v.field;
  m.actions.reserve(static_cast<std::size_t>(s.n));
  for (int x = 0; x < s.n; ++x) m.actions.push_back(blockPhi<K>(rho, x, jd, v));
  return m;
}

/// Coind(V) realized on V^m via the column-monomial left representation.
template <class K>
SModule<K> coinduce(const GModule<K>& v, const JClassData& jd, const MonomialRep& lambda,
                    const Semigroup& s) {
  if (lambda.rightSide || lambda.jClassId != jd.jClassId)
    internalError("DimensionMismatch", "coinduce needs the left monomial representation of J");
  SModule<K> m;
  m.dim = v.dim * jd.mJ();
  m.field = v.field;
  m.actions.reserve(static_cast<std::size_t>(s.n));
  for (int x = 0; x < s.n; ++x) m.actions.push_back(blockPhi<K>(lambda, x, jd, v));
  return m;
}

/// The sandwich matrix pushed through phi: an (r n_J) x (r m_J) matrix whose
/// (a, b) block is phi of sandwich entry (b, a).  As a map of row vectors it
/// takes V^n to V^m; its left null space is the radical of Ind(V) and its row
/// space is the minimal submodule of Coind(V).
template <class K>
Mat<K> sandwichBlockMatrix(const JClassData& jd, const GModule<K>& v) {
  const Index r = v.dim;
  Mat<K> out = zeros<K>(v.field, r * jd.nJ(), r * jd.mJ());
  for (int a = 0; a < jd.nJ(); ++a)
    for (int b = 0; b < jd.mJ(); ++b) {
      const int g = jd.sandwichAt(b, a);
      if (g < 0) continue;
      out.block(static_cast<Index>(a) * r, static_cast<Index>(b) * r, r, r) =
          v.actions[static_cast<std::size_t>(jd.group.pos(g))];
    }
  return out;
}

/// N = {w in Ind(V) | w KSe_J = 0}, computed independently as the common left
/// null space of the L_{e_J}-actions and as the left null space of the
/// sandwich block matrix.  The two bases must agree exactly.
template <class K>
Mat<K> radicalN(const SModule<K>& ind, const JClassData& jd, const GModule<K>& v) {
  Mat<K> stacked(ind.dim, 0);
  for (int l : jd.lClassOfE) stacked = hstack<K>(stacked, ind.actions[static_cast<std::size_t>(l)]);
  Mat<K> fromActions = rowSpaceBasis<K>(leftNullBasis<K>(stacked));

  Mat<K> fromSandwich = rowSpaceBasis<K>(leftNullBasis<K>(sandwichBlockMatrix<K>(jd, v)));

  if (!matEq(fromActions, fromSandwich))
    internalError("CrossCheckMismatch",
                  "radical by L_e annihilation differs from the sandwich null space");
  return fromActions;
}

/// L(Coind V) = Coind(V) e_J A, computed as the row space of the sandwich
/// block matrix and as the spin of im(action(e_J)); exact agreement required.
template <class K>
Mat<K> minimalL(const SModule<K>& coind, const JClassData& jd, const GModule<K>& v) {
  Mat<K> fromSandwich = rowSpaceBasis<K>(sandwichBlockMatrix<K>(jd, v));

  Mat<K> start = rowSpaceBasis<K>(coind.actions[static_cast<std::size_t>(jd.eJ)]);
  Mat<K> spun = spin<K>(start, Actions<K>(coind.actions), coind.dim, coind.field);

  if (!matEq(fromSandwich, spun))
    internalError("CrossCheckMismatch",
                  "sandwich image differs from the spun minimal submodule");
  return fromSandwich;
}

/// Ann M = {s | action(s) = 0} compared against every I_J; the matching
/// regular J-class, if any, is the apex.
template <class K>
std::optional<int> apexOf(const SModule<K>& m, const Semigroup& s, const GreenStructure& g) {
  std::vector<int> ann;
  for (int x = 0; x < s.n; ++x)
    if (isZeroMat(m.actions[static_cast<std::size_t>(x)])) ann.push_back(x);
  if (static_cast<int>(ann.size()) == s.n) return std::nullopt;  // MA = 0
  std::optional<int> apex;
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) continue;
    if (idealIJ(s, g, j) != ann) continue;
    if (apex) return std::nullopt;  // distinct regular classes share an ideal: no apex
    apex = j;
  }
  return apex;
}

template <class K>
struct SimpleReport {
  int apex = -1;
  Index groupDim = 0;     // r = dim V
  Index inducedDim = 0;   // r * n_J
  Index radicalDim = 0;   // dim N
  Index simpleDim = 0;
  Index coinducedDim = 0; // r * m_J
  Index minimalDim = 0;   // rank of the sandwich block matrix
  bool isoCheck = false;  // induced-quotient isomorphic to coinduced-submodule
  SModule<K> simpleModule;
  GModule<K> groupSimple;
};

/// Quotient construction with its verification battery: the result is
/// simple, has apex J, and restricts along e_J back to V.
template <class K>
SModule<K> simpleFromInduced(const GModule<K>& v, const JClassData& jd, const MonomialRep& rho,
                             const Semigroup& s, const GreenStructure& g, const ChopConfig& cfg,
                             std::mt19937_64& rng) {
  SModule<K> ind = induce<K>(v, jd, rho, s);
  Mat<K> n = radicalN<K>(ind, jd, v);
  SModule<K> head = quotientModule<K>(ind, n);

  auto sr = isSimple<K>(Actions<K>(head.actions), head.dim, head.field, SimplicityMode::Auto, rng,
                        cfg.randomVectorTries, cfg.exhaustiveCapLog2);
  if (sr.verdict == Simplicity::NotSimple)
    internalError("VerificationFailure", "induced quotient is not simple");
  if (apexOf<K>(head, s, g) != std::optional<int>(jd.jClassId))
    internalError("VerificationFailure", "induced quotient has the wrong apex");
  GModule<K> res = restrictionToGroupModule<K>(head, s, jd);
  if (res.dim != v.dim || homSpace<K>(v, res).empty())
    internalError("VerificationFailure", "restriction of the induced quotient is not V");
  return head;
}

/// Submodule construction with the mirror verifications.
template <class K>
SModule<K> simpleFromCoinduced(const GModule<K>& v, const JClassData& jd, const MonomialRep& lambda,
                               const Semigroup& s, const GreenStructure& g, const ChopConfig& cfg,
                               std::mt19937_64& rng) {
  SModule<K> coind = coinduce<K>(v, jd, lambda, s);
  Mat<K> basis = minimalL<K>(coind, jd, v);
  SModule<K> socle{basis.rows(), coind.field,
                   restrictActions<K>(Actions<K>(coind.actions), basis)};

  auto sr = isSimple<K>(Actions<K>(socle.actions), socle.dim, socle.field, SimplicityMode::Auto,
                        rng, cfg.randomVectorTries, cfg.exhaustiveCapLog2);
  if (sr.verdict == Simplicity::NotSimple)
    internalError("VerificationFailure", "coinduced socle is not simple");
  if (apexOf<K>(socle, s, g) != std::optional<int>(jd.jClassId))
    internalError("VerificationFailure", "coinduced socle has the wrong apex");
  GModule<K> res = restrictionToGroupModule<K>(socle, s, jd);
  if (res.dim != v.dim || homSpace<K>(v, res).empty())
    internalError("VerificationFailure", "restriction of the coinduced socle is not V");
  return socle;
}

template <class K>
SimpleReport<K> buildSimpleReport(const GModule<K>& v, const JClassData& jd,
                                  const MonomialRep& rho, const MonomialRep& lambda,
                                  const Semigroup& s, const GreenStructure& g,
                                  const ChopConfig& cfg, std::mt19937_64& rng) {
  SimpleReport<K> rep;
  rep.apex = jd.jClassId;
  rep.groupDim = v.dim;
  rep.inducedDim = v.dim * jd.nJ();
  rep.coinducedDim = v.dim * jd.mJ();

  SModule<K> ind = induce<K>(v, jd, rho, s);
  Mat<K> n = radicalN<K>(ind, jd, v);
  rep.radicalDim = n.rows();

  SModule<K> head = simpleFromInduced<K>(v, jd, rho, s, g, cfg, rng);
  rep.simpleDim = head.dim;

  SModule<K> socle = simpleFromCoinduced<K>(v, jd, lambda, s, g, cfg, rng);
  rep.minimalDim = socle.dim;

  rep.isoCheck = head.dim == socle.dim && !homSpace<K>(head, socle).empty();
  if (!rep.isoCheck)
    internalError("VerificationFailure",
                  "induced and coinduced constructions disagree at J-class " +
                      std::to_string(jd.jClassId));
  rep.simpleModule = std::move(head);
  rep.groupSimple = v;
  return rep;
}

/// Everything the classification yields for one semigroup and field: one
/// report per (regular J-class, simple KG_J-module).
template <class K>
std::vector<SimpleReport<K>> allIrreducibles(const Semigroup& s, const GreenStructure& g,
                                             const Field& f, const ChopConfig& cfg,
                                             std::mt19937_64& rng) {
  std::vector<SimpleReport<K>> out;
  for (int j = 0; j < static_cast<int>(g.jClasses.size()); ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) continue;
    JClassData jd = jclassData(s, g, j);
    MonomialRep rho = rightSchutzenberger(s, jd);
    MonomialRep lambda = leftSchutzenberger(s, jd);
    verifyMonomialRep(s, jd, rho);
    verifyMonomialRep(s, jd, lambda);
    for (const GModule<K>& v : irreducibles<K>(s, jd.group, f, cfg, rng))
      out.push_back(buildSimpleReport<K>(v, jd, rho, lambda, s, g, cfg, rng));
  }
  return out;
}

/// Rebuilds the classification at J from a second idempotent (maximum index
/// instead of minimum) and checks that each simple module comes out
/// isomorphic.  The two maximal subgroups are identified via an isomorphism
/// witness: g |-> x' g x.
template <class K>
bool transversalIndependenceCheck(const Semigroup& s, const GreenStructure& g, const Field& f,
                                  int jClassId, const ChopConfig& cfg, std::mt19937_64& rng,
                                  std::string* diagnostics = nullptr) {
  std::vector<int> idems;
  for (int x : g.jClasses[static_cast<std::size_t>(jClassId)])
    if (s.isIdempotent(x)) idems.push_back(x);
  if (idems.size() < 2) return true;  // vacuous

  const int e1 = idems.front();
  const int e2 = idems.back();
  JClassData jd1 = jclassData(s, g, jClassId, e1);
  JClassData jd2 = jclassData(s, g, jClassId, e2);
  MonomialRep rho1 = rightSchutzenberger(s, jd1);
  MonomialRep lam1 = leftSchutzenberger(s, jd1);
  MonomialRep rho2 = rightSchutzenberger(s, jd2);
  MonomialRep lam2 = leftSchutzenberger(s, jd2);

  auto witness = idempotentsIsomorphic(s, g, e1, e2);
  if (!witness) internalError("InternalInconsistency", "idempotents of one J-class lack a witness");
  const auto [x, xp] = *witness;

  // psi: G_{e1} -> G_{e2}, g |-> x' g x; inverse h |-> x h x'
  std::vector<int> psi(jd1.group.elements.size(), -1);
  for (std::size_t i = 0; i < jd1.group.elements.size(); ++i) {
    const int img = s.prod(s.prod(xp, jd1.group.elements[i]), x);
    if (jd2.group.pos(img) < 0)
      internalError("InternalInconsistency", "conjugation witness does not map G_e1 into G_e2");
    psi[i] = img;
  }

  for (const GModule<K>& v1 : irreducibles<K>(s, jd1.group, f, cfg, rng)) {
    // transport v1 along psi^{-1} to a G_{e2}-module
    GModule<K> v2;
    v2.dim = v1.dim;
    v2.field = v1.field;
    v2.actions.resize(jd2.group.elements.size());
    for (std::size_t i = 0; i < jd1.group.elements.size(); ++i)
      v2.actions[static_cast<std::size_t>(jd2.group.pos(psi[i]))] = v1.actions[i];

    SimpleReport<K> r1 = buildSimpleReport<K>(v1, jd1, rho1, lam1, s, g, cfg, rng);
    SimpleReport<K> r2 = buildSimpleReport<K>(v2, jd2, rho2, lam2, s, g, cfg, rng);
    if (r1.simpleDim != r2.simpleDim ||
        homSpace<K>(r1.simpleModule, r2.simpleModule).empty()) {
      if (diagnostics)
        *diagnostics = "J-class " + std::to_string(jClassId) + ": simples at e=" +
                       std::to_string(e1) + " and e=" + std::to_string(e2) +
                       " are not isomorphic (dims " + std::to_string(r1.simpleDim) + " vs " +
                       std::to_string(r2.simpleDim) + ")";
      return false;
    }
  }
  return true;
}

}  // namespace semirep
