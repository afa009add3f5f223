#include "centext/types.hpp"

namespace centext {

Matrix normalized(const Matrix& m, const Field& field) {
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = field.coerce(m(i, j));
  }
  return out;
}

RowVector normalized(const RowVector& v, const Field& field) {
  RowVector out(v.size());
  for (Index j = 0; j < v.size(); ++j) out(j) = field.coerce(v(j));
  return out;
}

RowVector unit_vector(Index n, Index i, const Field& field) {
  RowVector v = RowVector::Constant(n, field.zero());
  v(i) = field.one();
  return v;
}

Matrix identity_matrix(Index n, const Field& field) {
  Matrix m = Matrix::Constant(n, n, field.zero());
  for (Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix zero_matrix(Index rows, Index cols, const Field& field) {
  return Matrix::Constant(rows, cols, field.zero());
}

}  // namespace centext
