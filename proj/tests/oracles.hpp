#pragma once

#include "centext/algebra.hpp"

namespace centext::testing {

/// For abelian coefficients: the ideal generated by [k, b] and [b, k] over basis vectors.
inline Subspace vect_commutator_oracle(const Algebra& b, const Subspace& k) {
  const Index n = b.dim();
  std::vector<RowVector> rows;
  for (Index i = 0; i < k.dim(); ++i) {
    const RowVector kv = k.basis().row(i);
    for (Index j = 0; j < n; ++j) {
      rows.push_back(bracket(b, kv, b.basis_vector(j)));
      rows.push_back(bracket(b, b.basis_vector(j), kv));
    }
  }
  Matrix m(static_cast<Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r];
  return ideal_generated(b, Subspace::span(n, m)).subspace;
}

/// Chevalley-Eilenberg H_2 with trivial coefficients: dim ker(d2) - rank(d3) on exterior powers.
inline Index chevalley_eilenberg_h2(const Algebra& g) {
  const Index n = g.dim();
  const Field& field = g.field();
  std::vector<std::pair<Index, Index>> pairs;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const Index p2 = static_cast<Index>(pairs.size());
  // x ^ y for coordinate vectors x, y in the basis {e_i ^ e_j : i < j}.
  auto wedge = [&](const RowVector& x, const RowVector& y) {
    RowVector w = RowVector::Constant(p2, field.zero());
    for (Index k = 0; k < p2; ++k) {
      const auto [i, j] = pairs[static_cast<std::size_t>(k)];
      w(k) = x(i) * y(j) - x(j) * y(i);
    }
    return w;
  };
  Matrix d2(p2, n);
  for (Index k = 0; k < p2; ++k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    d2.row(k) = g.product(i, j);
  }
  std::vector<RowVector> d3_rows;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        const RowVector ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        d3_rows.push_back(wedge(g.product(i, j), ek) - wedge(g.product(i, k), ej) + wedge(g.product(j, k), ei));
      }
    }
  }
  Matrix d3(static_cast<Index>(d3_rows.size()), p2);
  for (std::size_t r = 0; r < d3_rows.size(); ++r) d3.row(static_cast<Index>(r)) = d3_rows[r];
  const Matrix d3n = normalized(d3, field);
  if (!is_zero_matrix<Scalar>(Matrix(d3n * d2))) throw std::logic_error("d2 d3 != 0");
  return kernel<Scalar>(normalized(d2, field)).dim() - (d3n.rows() ? rank<Scalar>(d3n) : 0);
}

}  // namespace centext::testing
