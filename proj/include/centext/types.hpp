#pragma once

#include "centext/linalg.hpp"
#include "centext/scalar.hpp"

namespace centext {

using Scalar = FieldScalar;
using Matrix = MatrixX<Scalar>;
using RowVector = RowVectorX<Scalar>;
using Subspace = BasicSubspace<Scalar>;
using SpanBuilder = BasicSpanBuilder<Scalar>;

/// Coerces every entry into `field`.
Matrix normalized(const Matrix& m, const Field& field);
RowVector normalized(const RowVector& v, const Field& field);

RowVector unit_vector(Index n, Index i, const Field& field);
Matrix identity_matrix(Index n, const Field& field);
Matrix zero_matrix(Index rows, Index cols, const Field& field);

}  // namespace centext
