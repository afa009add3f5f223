#pragma once

// Exact dense linear algebra over a field.
//
// Convention (project-wide): vectors are rows and a matrix acts on the right,
// v |-> v * M. A map from an n-dimensional space to an m-dimensional one is an
// n x m matrix whose i-th row is the image of the i-th basis vector, and the
// composite "g after f" is the product F * G.
//
// Everything here is templated on the scalar; the only requirements are the
// field operations plus free functions is_zero(s) and inverse(s).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace centext {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> reduced;
  Index rank = 0;
  std::vector<Index> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination (exact pivots).
template <typename Scalar>
RrefResult<Scalar> rref(MatrixX<Scalar> m) {
  RrefResult<Scalar> out;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Scalar inv = inverse(m(r, c));
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(const MatrixX<Scalar>& m) {
  return rref<Scalar>(m).rank;
}

template <typename Scalar>
bool is_zero_matrix(const MatrixX<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename Scalar>
bool is_zero_vector(const RowVectorX<Scalar>& v) {
  for (Index j = 0; j < v.size(); ++j) {
    if (!is_zero(v(j))) return false;
  }
  return true;
}

template <typename Scalar>
MatrixX<Scalar> vstack(const MatrixX<Scalar>& top, const MatrixX<Scalar>& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  MatrixX<Scalar> out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

/// v * m, skipping zero entries of v.
template <typename Scalar>
RowVectorX<Scalar> row_times(const RowVectorX<Scalar>& v, const MatrixX<Scalar>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
  RowVectorX<Scalar> out = RowVectorX<Scalar>::Constant(m.cols(), Scalar(0));
  for (Index k = 0; k < v.size(); ++k) {
    if (is_zero(v(k))) continue;
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(k, j))) out(j) += v(k) * m(k, j);
    }
  }
  return out;
}

/// a * b, skipping zero entries of a.
template <typename Scalar>
MatrixX<Scalar> sparse_times(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse_times: shape mismatch");
  MatrixX<Scalar> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) out.row(i) = row_times<Scalar>(a.row(i), b);
  return out;
}

/// A subspace of Scalar^n, stored canonically as an RREF basis without zero rows.
template <typename Scalar>
class BasicSubspace {
 public:
  BasicSubspace() = default;

  static BasicSubspace zero(Index ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = MatrixX<Scalar>(0, ambient);
    return s;
  }

  static BasicSubspace whole(Index ambient) {
    return span(ambient, MatrixX<Scalar>::Identity(ambient, ambient));
  }

  /// Row span of `rows`.
  static BasicSubspace span(Index ambient, const MatrixX<Scalar>& rows) {
    if (rows.cols() != ambient) throw std::invalid_argument("subspace: spanning rows have wrong length");
    auto r = rref<Scalar>(rows);
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_ = r.reduced.topRows(r.rank);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool empty() const { return basis_.rows() == 0; }
  bool is_whole() const { return basis_.rows() == ambient_; }
  const MatrixX<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Residue of v after eliminating against the basis; zero iff v lies in the subspace.
  RowVectorX<Scalar> reduce(RowVectorX<Scalar> v) const {
    check_length(v.size());
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = v(pivots_[i]);
      if (is_zero(c)) continue;
      for (Index j = 0; j < ambient_; ++j) {
        if (!is_zero(basis_(i, j))) v(j) -= c * basis_(i, j);
      }
    }
    return v;
  }

  bool contains(const RowVectorX<Scalar>& v) const { return is_zero_vector<Scalar>(reduce(v)); }

  /// Adds v to the span, keeping the basis in RREF. Returns false if v was already a member.
  bool extend(const RowVectorX<Scalar>& v) {
    RowVectorX<Scalar> r = reduce(v);
    Index lead = 0;
    while (lead < ambient_ && is_zero(r(lead))) ++lead;
    if (lead == ambient_) return false;
    const Scalar inv = Scalar(1) / r(lead);
    for (Index j = lead; j < ambient_; ++j) r(j) *= inv;
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = basis_(i, lead);
      if (is_zero(c)) continue;
      for (Index j = lead; j < ambient_; ++j) {
        if (!is_zero(r(j))) basis_(i, j) -= c * r(j);
      }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    MatrixX<Scalar> next(dim() + 1, ambient_);
    next.topRows(pos) = basis_.topRows(pos);
    next.row(pos) = r;
    next.bottomRows(dim() - pos) = basis_.bottomRows(dim() - pos);
    basis_ = std::move(next);
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
  }

  bool contains(const BasicSubspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: ambient dimension mismatch");
    for (Index i = 0; i < other.dim(); ++i) {
      if (!contains(RowVectorX<Scalar>(other.basis_.row(i)))) return false;
    }
    return true;
  }

  /// Coordinates of a member vector with respect to basis(); throws if v is not a member.
  RowVectorX<Scalar> coordinates(const RowVectorX<Scalar>& v) const {
    if (!contains(v)) throw std::invalid_argument("subspace: vector is not a member");
    RowVectorX<Scalar> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }

  /// Coordinates of each row of `rows` (all members) in basis().
  MatrixX<Scalar> coordinates(const MatrixX<Scalar>& rows) const {
    MatrixX<Scalar> out(rows.rows(), dim());
    for (Index i = 0; i < rows.rows(); ++i) out.row(i) = coordinates(RowVectorX<Scalar>(rows.row(i)));
    return out;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  void check_length(Index n) const {
    if (n != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
  }

  Index ambient_ = 0;
  MatrixX<Scalar> basis_;
  std::vector<Index> pivots_;
};

/// Accumulates a span from many vectors, reducing each against the basis so far.
template <typename Scalar>
class BasicSpanBuilder {
 public:
  explicit BasicSpanBuilder(Index ambient) : acc_(BasicSubspace<Scalar>::zero(ambient)) {}

  void add(const RowVectorX<Scalar>& v) {
    if (acc_.is_whole()) return;
    RowVectorX<Scalar> r = acc_.reduce(v);
    if (is_zero_vector<Scalar>(r)) return;
    pending_.push_back(std::move(r));
    if (static_cast<Index>(pending_.size()) >= std::max<Index>(8, acc_.ambient_dim() - acc_.dim())) flush();
  }

  bool full() {
    flush();
    return acc_.is_whole();
  }

  BasicSubspace<Scalar> result() {
    flush();
    return acc_;
  }

 private:
  void flush() {
    if (pending_.empty()) return;
    MatrixX<Scalar> m(acc_.dim() + static_cast<Index>(pending_.size()), acc_.ambient_dim());
    m.topRows(acc_.dim()) = acc_.basis();
    for (std::size_t i = 0; i < pending_.size(); ++i) m.row(acc_.dim() + static_cast<Index>(i)) = pending_[i];
    acc_ = BasicSubspace<Scalar>::span(acc_.ambient_dim(), m);
    pending_.clear();
  }

  BasicSubspace<Scalar> acc_;
  std::vector<RowVectorX<Scalar>> pending_;
};

/// {v : v * m = 0}, a subspace of the domain (dimension m.rows()).
template <typename Scalar>
BasicSubspace<Scalar> kernel(const MatrixX<Scalar>& m) {
  const Index n = m.rows();
  // v * m = 0  <=>  m^T * v^T = 0: solve the column null space of m^T.
  MatrixX<Scalar> t = m.transpose();
  auto r = rref<Scalar>(t);
  std::vector<bool> is_pivot(n, false);
  for (Index c : r.pivots) is_pivot[c] = true;
  MatrixX<Scalar> null(n - r.rank, n);
  Index row = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RowVectorX<Scalar> v = RowVectorX<Scalar>::Zero(n);
    v(free) = 1;
    for (Index i = 0; i < r.rank; ++i) v(r.pivots[i]) = -r.reduced(i, free);
    null.row(row++) = v;
  }
  return BasicSubspace<Scalar>::span(n, null);
}

/// Row span of m, a subspace of the codomain (dimension m.cols()).
template <typename Scalar>
BasicSubspace<Scalar> image(const MatrixX<Scalar>& m) {
  return BasicSubspace<Scalar>::span(m.cols(), m);
}

/// Image of a subspace under v |-> v * m.
template <typename Scalar>
BasicSubspace<Scalar> image(const BasicSubspace<Scalar>& s, const MatrixX<Scalar>& m) {
  if (s.ambient_dim() != m.rows()) throw std::invalid_argument("image: dimension mismatch");
  return BasicSubspace<Scalar>::span(m.cols(), MatrixX<Scalar>(s.basis() * m));
}

template <typename Scalar>
void require_same_ambient(const BasicSubspace<Scalar>& u, const BasicSubspace<Scalar>& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspaces live in different ambient spaces");
}

template <typename Scalar>
BasicSubspace<Scalar> subspace_sum(const BasicSubspace<Scalar>& u, const BasicSubspace<Scalar>& v) {
  require_same_ambient(u, v);
  return BasicSubspace<Scalar>::span(u.ambient_dim(), vstack<Scalar>(u.basis(), v.basis()));
}

/// Intersection via the null space of [U; -V]: x*U = y*V.
template <typename Scalar>
BasicSubspace<Scalar> subspace_intersect(const BasicSubspace<Scalar>& u, const BasicSubspace<Scalar>& v) {
  require_same_ambient(u, v);
  if (u.empty() || v.empty()) return BasicSubspace<Scalar>::zero(u.ambient_dim());
  MatrixX<Scalar> stacked = vstack<Scalar>(u.basis(), MatrixX<Scalar>(-v.basis()));
  auto null = kernel<Scalar>(stacked);
  MatrixX<Scalar> combos = null.basis().leftCols(u.dim());
  return BasicSubspace<Scalar>::span(u.ambient_dim(), MatrixX<Scalar>(combos * u.basis()));
}

template <typename Scalar>
bool subspace_contains(const BasicSubspace<Scalar>& u, const RowVectorX<Scalar>& v) {
  return u.contains(v);
}

template <typename Scalar>
struct QuotientMap {
  MatrixX<Scalar> proj;     // ambient x quotient, kernel exactly w
  MatrixX<Scalar> section;  // quotient x ambient, section * proj = I
  std::vector<Index> complement;  // ambient coordinates lifted by the section
};

/// Projection onto ambient/w along the standard complement of w's pivot columns.
template <typename Scalar>
QuotientMap<Scalar> quotient_map(Index ambient, const BasicSubspace<Scalar>& w) {
  if (w.ambient_dim() != ambient) throw std::invalid_argument("quotient_map: ambient mismatch");
  std::vector<bool> is_pivot(ambient, false);
  for (Index c : w.pivots()) is_pivot[c] = true;
  QuotientMap<Scalar> q;
  for (Index j = 0; j < ambient; ++j) {
    if (!is_pivot[j]) q.complement.push_back(j);
  }
  const Index qdim = static_cast<Index>(q.complement.size());
  q.section = MatrixX<Scalar>::Zero(qdim, ambient);
  for (Index i = 0; i < qdim; ++i) q.section(i, q.complement[i]) = 1;
  // v = sum_i v[piv_i] w_i + residue; residue lives on the complement columns.
  q.proj = MatrixX<Scalar>::Zero(ambient, qdim);
  for (Index j = 0; j < ambient; ++j) {
    RowVectorX<Scalar> e = RowVectorX<Scalar>::Zero(ambient);
    e(j) = 1;
    RowVectorX<Scalar> res = w.reduce(e);
    for (Index i = 0; i < qdim; ++i) q.proj(j, i) = res(q.complement[i]);
  }
  return q;
}

/// Preimage {v : v * m in target}.
template <typename Scalar>
BasicSubspace<Scalar> preimage(const MatrixX<Scalar>& m, const BasicSubspace<Scalar>& target) {
  if (target.ambient_dim() != m.cols()) throw std::invalid_argument("preimage: dimension mismatch");
  return kernel<Scalar>(MatrixX<Scalar>(m * quotient_map<Scalar>(m.cols(), target).proj));
}

/// Some x with x * m = rhs (free coordinates set to zero), or nothing.
template <typename Scalar>
bool solve_left(const MatrixX<Scalar>& m, const RowVectorX<Scalar>& rhs, RowVectorX<Scalar>& x) {
  if (rhs.size() != m.cols()) throw std::invalid_argument("solve_left: dimension mismatch");
  // m^T x^T = rhs^T, augmented system.
  MatrixX<Scalar> aug(m.cols(), m.rows() + 1);
  aug.leftCols(m.rows()) = m.transpose();
  aug.col(m.rows()) = rhs.transpose();
  auto r = rref<Scalar>(aug);
  x = RowVectorX<Scalar>::Zero(m.rows());
  for (Index i = 0; i < r.rank; ++i) {
    const Index c = r.pivots[i];
    if (c == m.rows()) return false;
    x(c) = r.reduced(i, m.rows());
  }
  return true;
}

/// Row-wise solve: X with X * m = rhs; throws std::domain_error if inconsistent.
template <typename Scalar>
MatrixX<Scalar> solve_left(const MatrixX<Scalar>& m, const MatrixX<Scalar>& rhs) {
  MatrixX<Scalar> out(rhs.rows(), m.rows());
  for (Index i = 0; i < rhs.rows(); ++i) {
    RowVectorX<Scalar> x;
    if (!solve_left<Scalar>(m, RowVectorX<Scalar>(rhs.row(i)), x)) {
      throw std::domain_error("solve_left: system is inconsistent");
    }
    out.row(i) = x;
  }
  return out;
}

/// Inverse of a square matrix; throws std::domain_error if singular.
template <typename Scalar>
MatrixX<Scalar> invert(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  auto r = rref<Scalar>(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) throw std::domain_error("invert: matrix is singular");
  return r.reduced.rightCols(n);
}

/// Row vector Kronecker product (u (x) v)[i*len(v)+j] = u[i]*v[j].
template <typename Scalar>
RowVectorX<Scalar> kron(const RowVectorX<Scalar>& u, const RowVectorX<Scalar>& v) {
  RowVectorX<Scalar> out = RowVectorX<Scalar>::Zero(u.size() * v.size());
  for (Index i = 0; i < u.size(); ++i) {
    if (is_zero(u(i))) continue;
    for (Index j = 0; j < v.size(); ++j) {
      if (!is_zero(v(j))) out(i * v.size() + j) = u(i) * v(j);
    }
  }
  return out;
}

}  // namespace centext
