#pragma once

#include <random>

#include "centext/algebra.hpp"
#include "centext/varieties.hpp"

/// Seeded generators for property tests and the (UCE) search. All draws go
/// through the caller's engine, so a seed fixes every output.
namespace centext::random {

using Rng = std::mt19937_64;

/// Over Q: integers in [-range, range]; over F_p: uniform residues.
Scalar scalar(Rng& rng, const Field& field, int range = 2);
Scalar nonzero_scalar(Rng& rng, const Field& field, int range = 2);
/// Entries are nonzero with probability `density`.
Matrix matrix(Rng& rng, const Field& field, Index rows, Index cols, double density = 1.0);
Matrix invertible(Rng& rng, const Field& field, Index n);
/// A random subspace of `s` of dimension min(dim, s.dim()).
Subspace subspace_of(Rng& rng, const Field& field, const Subspace& s, Index dim);
Subspace subspace(Rng& rng, const Field& field, Index ambient, Index dim);

/// Sparse structure constants with no laws.
Algebra naalg(Rng& rng, const Field& field, Index dim, double density = 0.3);
/// [e_i, e_j] in span{e_k : k > max(i, j)}.
Algebra nilpotent_naalg(Rng& rng, const Field& field, Index dim, double density = 0.5);
/// Structure constants on a 2-dim space whose products span it.
Algebra perfect_naalg2(Rng& rng, const Field& field);

/// A Lie algebra of dimension <= max_dim assembled from catalog pieces, in a random basis.
Algebra lie(Rng& rng, const Field& field, Index max_dim);
/// A perfect Lie algebra of dimension <= max_dim (at least 3) in a random basis.
Algebra perfect_lie(Rng& rng, const Field& field, Index max_dim);
/// A Leibniz algebra of dimension <= max_dim, Lie or not.
Algebra leibniz(Rng& rng, const Field& field, Index max_dim);

/// An algebra of dimension <= max_dim lying in the given built-in variety.
Algebra member(Rng& rng, const Field& field, const Variety& v, Index max_dim);

/// The same algebra rewritten in a random basis.
Algebra rebased(Rng& rng, const Algebra& a);

/// A random ideal: the closure of a random subspace of dimension <= max_gen.
IdealWitness ideal(Rng& rng, const Algebra& a, Index max_gen = 2);
/// A random subspace of the centre (always an ideal).
IdealWitness central_ideal(Rng& rng, const Algebra& a);

/// A split epimorphism B -> A in NAAlg: B = A + M with A a subalgebra and M
/// an ideal, mixed products random. Returns (B -> A, section).
struct SplitEpi {
  LinearMap projection;
  LinearMap section;
};
SplitEpi semidirect_naalg(Rng& rng, const Algebra& a, Index module_dim, double density = 0.4);

/// A morphism into `a`: a subalgebra inclusion, a product projection from
/// a x (abelian), or a zero map from an abelian algebra.
LinearMap morphism_into(Rng& rng, const Algebra& a);

}  // namespace centext::random
