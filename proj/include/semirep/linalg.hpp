#pragma once

#include <Eigen/Dense>

#include <vector>

#include "semirep/errors.hpp"
#include "semirep/field.hpp"

namespace semirep {

// Dense exact matrices.  Row-vector convention throughout: modules act on the
// right, v |-> v * A, and "null space" always means the left null space
// {v : v A = 0} of the acting matrix.

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class K>
using RowVec = Eigen::Matrix<K, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

template <class K>
Mat<K> zeros(const Field& f, Index rows, Index cols) {
  Mat<K> m(rows, cols);
  m.fill(FieldOps<K>::make(f, 0));
  return m;
}

template <class K>
Mat<K> identity(const Field& f, Index n) {
  Mat<K> m = zeros<K>(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = FieldOps<K>::make(f, 1);
  return m;
}

/// Builds a bound matrix from integer entries (row-major nested lists).
template <class K>
Mat<K> matFromInts(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows[0].size());
  Mat<K> m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c)
      internalError("ShapeMismatch", "ragged matrix literal");
    for (Index j = 0; j < c; ++j) m(i, j) = FieldOps<K>::make(f, rows[i][j]);
  }
  return m;
}

template <class K>
bool matEq(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class K>
bool isZeroMat(const Mat<K>& a) {
  const K zero(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == zero)) return false;
  return true;
}

template <class K>
bool isZeroRow(const RowVec<K>& v) {
  const K zero(0);
  for (Index j = 0; j < v.cols(); ++j)
    if (!(v(j) == zero)) return false;
  return true;
}

// Kernel bases start from 0/1 literals; for Fp those must be rebound to the
// modulus of the source matrix before they feed further arithmetic.
template <class K>
inline void bindEntriesLike(const Mat<K>&, Mat<K>&) {}

template <>
inline void bindEntriesLike<Fp>(const Mat<Fp>& src, Mat<Fp>& dst) {
  std::uint64_t p = 0;
  for (Index i = 0; i < src.rows() && p == 0; ++i)
    for (Index j = 0; j < src.cols(); ++j)
      if (src(i, j).bound()) { p = src(i, j).modulus(); break; }
  if (p == 0) return;
  for (Index i = 0; i < dst.rows(); ++i)
    for (Index j = 0; j < dst.cols(); ++j) dst(i, j) = dst(i, j).withModulus(p);
}

/// Reduced row echelon form with its pivot columns.  Unique per row space, so
/// equality of `mat` fields is the canonical subspace-equality test.
template <class K>
struct Rref {
  Mat<K> mat;                // rank x cols, zero rows dropped
  std::vector<Index> pivots; // ascending
  Index rank() const { return static_cast<Index>(pivots.size()); }
  Index cols() const { return mat.cols(); }
};

/// Reduces `v` modulo the rows of `b` in place; afterwards v has zeros at all
/// pivot columns of `b`.
template <class K>
void reduceRow(const Rref<K>& b, RowVec<K>& v) {
  const K zero(0);
  for (Index r = 0; r < b.rank(); ++r) {
    const K c = v(b.pivots[r]);
    if (!(c == zero)) v -= c * b.mat.row(r);
  }
}

/// Inserts a row into an rref basis, keeping it reduced.  Returns true when
/// the row enlarged the span.
template <class K>
bool rrefInsert(Rref<K>& b, RowVec<K> v) {
  if (b.mat.cols() == 0 && v.cols() > 0 && b.rank() == 0) b.mat.resize(0, v.cols());
  reduceRow(b, v);
  const K zero(0);
  Index lead = -1;
  for (Index j = 0; j < v.cols(); ++j)
    if (!(v(j) == zero)) { lead = j; break; }
  if (lead < 0) return false;
  v *= scalarInverse(v(lead));
  // clear the new pivot column from existing rows
  for (Index r = 0; r < b.rank(); ++r) {
    const K c = b.mat(r, lead);
    if (!(c == zero)) b.mat.row(r) -= c * v;
  }
  // splice in pivot order
  Index at = 0;
  while (at < b.rank() && b.pivots[at] < lead) ++at;
  Mat<K> next(b.rank() + 1, v.cols());
  for (Index r = 0; r < at; ++r) next.row(r) = b.mat.row(r);
  next.row(at) = v;
  for (Index r = at; r < b.rank(); ++r) next.row(r + 1) = b.mat.row(r);
  b.mat = std::move(next);
  b.pivots.insert(b.pivots.begin() + at, lead);
  return true;
}

template <class K>
Rref<K> rref(const Mat<K>& m) {
  Rref<K> b;
  b.mat.resize(0, m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    RowVec<K> v = m.row(i);
    rrefInsert(b, std::move(v));
  }
  return b;
}

template <class K>
Index rankOf(const Mat<K>& m) {
  return rref(m).rank();
}

/// Canonical basis (rref rows) of the row space.
template <class K>
Mat<K> rowSpaceBasis(const Mat<K>& m) {
  return rref(m).mat;
}

/// Rows x with m * x^T = 0, one per free column, in ascending free-column
/// order.  Deterministic.
template <class K>
Mat<K> rightKernelBasis(const Mat<K>& m) {
  const Rref<K> b = rref(m);
  const Index n = m.cols();
  std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
  for (Index p : b.pivots) isPivot[static_cast<std::size_t>(p)] = true;
  const Index dim = n - b.rank();
  Mat<K> out(dim, n);
  out.fill(K(0));
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (isPivot[static_cast<std::size_t>(f)]) continue;
    out(row, f) = K(1);
    for (Index r = 0; r < b.rank(); ++r) out(row, b.pivots[r]) = -b.mat(r, f);
    ++row;
  }
  bindEntriesLike(m, out);
  return out;
}

/// Rows v with v * m = 0 — the "null space" in this library's row convention.
template <class K>
Mat<K> leftNullBasis(const Mat<K>& m) {
  Mat<K> t = m.transpose();
  return rightKernelBasis(t);
}

template <class K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) internalError("ShapeMismatch", "vstack width mismatch");
  Mat<K> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

template <class K>
Mat<K> hstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) internalError("ShapeMismatch", "hstack height mismatch");
  Mat<K> out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

template <class K>
bool inRowSpace(const Rref<K>& b, RowVec<K> v) {
  reduceRow(b, v);
  return isZeroRow(v);
}

/// Coordinates of the rows of `m` in an rref basis; errors if a row is
/// outside the span.  For an rref basis the coordinate of row r is just the
/// entry at the r-th pivot column.
template <class K>
Mat<K> coordinatesIn(const Rref<K>& b, const Mat<K>& m) {
  Mat<K> coords(m.rows(), b.rank());
  for (Index i = 0; i < m.rows(); ++i) {
    RowVec<K> v = m.row(i);
    for (Index r = 0; r < b.rank(); ++r) coords(i, r) = v(b.pivots[r]);
    reduceRow(b, v);
    if (!isZeroRow(v)) internalError("NotInSpan", "vector outside subspace basis");
  }
  bindEntriesLike(b.mat, coords);
  return coords;
}

}  // namespace semirep
