#pragma once

#include "centext/algebra.hpp"

namespace centext::catalog {

/// The non-associative counterexample: A (2-dim), B (3-dim), C (4-dim) with
/// g: C -> B and f: B -> A, both central over Vect but with non-central composite.
struct NonAssociativeTower {
  Algebra a, b, c;
  LinearMap f;  // B -> A: (b1, b2, b3) |-> (0, a1, a2)
  LinearMap g;  // C -> B: (c1, c2, c3, c4) |-> (0, b1, b2, b3)
};

NonAssociativeTower nonassociative_tower(const Field& field = Field::rationals());

/// sl2 in the basis e, h, f.
Algebra sl2(const Field& field = Field::rationals());
/// The cross-product algebra on e1, e2, e3.
Algebra so3(const Field& field = Field::rationals());
/// Heisenberg algebra [x, y] = z.
Algebra heisenberg(const Field& field = Field::rationals());
/// Two-dimensional non-abelian Lie algebra [x, y] = y.
Algebra affine_line(const Field& field = Field::rationals());
/// sl2 acting on its 2-dimensional standard module (perfect, 5-dim).
Algebra sl2_standard_module(const Field& field = Field::rationals());
/// Leibniz algebra on e1, e2 with [e1, e1] = e2 (not Lie).
Algebra leibniz_square(const Field& field = Field::rationals());

}  // namespace centext::catalog
