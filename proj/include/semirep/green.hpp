#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semirep/semigroup.hpp"

namespace semirep {

/// Green's relations R, L, J, H computed from principal ideal equality, the
/// J-order DAG, idempotents and regularity flags.  Class ids are canonical:
/// classes are numbered by their minimum element index.
struct GreenStructure {
  int n = 0;
  std::vector<int> rOf, lOf, jOf, hOf;  // class id per element
  std::vector<std::vector<int>> rClasses, lClasses, jClasses, hClasses;  // sorted element lists

  /// jLeq[a][b] holds iff J_a <=_J J_b (principal two-sided ideal containment).
  std::vector<std::vector<bool>> jLeq;
  /// Transitively reduced cover edges (lower, higher), sorted.
  std::vector<std::pair<int, int>> jOrderEdges;

  std::vector<bool> regular;        // per J-class
  std::vector<int> idempotents;     // sorted element indices
  std::vector<int> apexTransversal; // per J-class: minimum idempotent, -1 if none

  bool jBelowOrEqual(int a, int b) const { return jLeq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
};

/// Partitions from principal right/left/two-sided ideal equality; regularity
/// established twice (idempotent presence and J^2 meets J) and the two tests
/// must agree, otherwise InternalInconsistency.
GreenStructure greenStructure(const Semigroup& s);

/// I_J = {s | J not contained in S^1 s S^1}: everything not J-above J.
/// Sorted; verified to be a two-sided ideal.
std::vector<int> idealIJ(const Semigroup& s, const GreenStructure& g, int jClassId);

/// Maximal subgroup at an idempotent e, realized as eSe intersected with the
/// J-class of e.  Group axioms are verified during construction.
struct MaxSubgroup {
  int jClassId = -1;
  int identity = -1;          // e, a semigroup element index
  std::vector<int> elements;  // sorted semigroup element indices
  std::vector<int> inverse;   // parallel to elements, semigroup element indices
  std::vector<int> posOf;     // size n; position in `elements` or -1

  int order() const { return static_cast<int>(elements.size()); }
  int pos(int s) const { return posOf[static_cast<std::size_t>(s)]; }
};

MaxSubgroup maximalSubgroup(const Semigroup& s, const GreenStructure& g, int e);

/// Witness (x, x') with x in eSf, x' in fSe, xx' = e and x'x = f, or nullopt.
/// A witness exists iff e J f; this is cross-checked against the partition.
std::optional<std::pair<int, int>> idempotentsIsomorphic(const Semigroup& s,
                                                         const GreenStructure& g, int e, int f);

/// Everything the representation constructions need about one regular
/// J-class.  Transversals are ordered by minimum element index per orbit, so
/// all downstream matrix layouts are deterministic.
struct JClassData {
  int jClassId = -1;
  int eJ = -1;
  MaxSubgroup group;

  std::vector<int> rClassOfE;  // R_{e_J} = e_J S meet J, sorted
  std::vector<int> lClassOfE;  // L_{e_J} = S e_J meet J, sorted
  std::vector<int> lTransversal;  // T: one element of R_{e_J} per L-class of J (size nJ)
  std::vector<int> rTransversal;  // one element of L_{e_J} per R-class of J (size mJ)

  // x = rClassOfE[i] factors uniquely as g * t: factorR[i] = (pos of g in
  // group, index of t in lTransversal).  Likewise y = lClassOfE[i] = l * g:
  // factorL[i] = (index of l in rTransversal, pos of g in group).
  std::vector<std::pair<int, int>> factorR;
  std::vector<std::pair<int, int>> factorL;
  std::vector<int> rPosOf;  // size n; position in rClassOfE or -1
  std::vector<int> lPosOf;  // size n; position in lClassOfE or -1

  /// Sandwich matrix, mJ x nJ, row-major.  Entry (b, a) is the product
  /// lTransversal[a] * rTransversal[b], an element of e_J S e_J: stored as
  /// the semigroup index of the group element it equals, or -1 when the
  /// product falls into I_J.  Its blockwise phi-image is the map V^n -> V^m
  /// cutting out the radical (left null space) and the minimal submodule
  /// (row space) downstream.
  std::vector<int> sandwich;
  std::vector<int> ideal;  // I_J, sorted

  int mJ() const { return static_cast<int>(rTransversal.size()); }
  int nJ() const { return static_cast<int>(lTransversal.size()); }
  int sandwichAt(int b, int a) const { return sandwich[static_cast<std::size_t>(b) * nJ() + a]; }
};

/// Populates JClassData for a regular J-class; NotRegular otherwise.  The
/// idempotent defaults to the class transversal e_J (minimum index); pass
/// `chosenIdempotent` to rebase the construction at another idempotent of J.
JClassData jclassData(const Semigroup& s, const GreenStructure& g, int jClassId,
                      std::optional<int> chosenIdempotent = std::nullopt);

}  // namespace semirep
