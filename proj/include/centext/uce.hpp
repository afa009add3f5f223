#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "centext/extensions.hpp"

namespace centext {

/// W_V inside A (x) A (coordinates i*dim+j): linearised law values
/// sum_i c_i eval(left_i) (x) eval(right_i) over basis tuples.
Subspace cocycle_relations(const Algebra& a, const Variety& v);

/// Universal central extension u: U -> A relative to abelian coefficients,
/// constructed as U = (A (x) A) / W_V inside the ambient variety v.
struct UceResult {
  Extension u;
  Subspace h2;  // kernel of u
  Index h1_dim = 0;
  std::vector<std::string> construction_log;
  Matrix tensor_section;  // dim U x dim^2: each basis vector of U as a tensor representative
  Matrix tensor_proj;     // dim^2 x dim U
  Subspace relations;     // W_V
};

enum class UceChecks { full, none };

/// Requires a perfect (with respect to abelian coefficients) and a in v.
/// UceChecks::none skips the post-construction assertion battery.
UceResult build_uce(const Algebra& a, const Variety& v, UceChecks checks = UceChecks::full);

/// dim H2 without building U: dim^2 - dim W_V - rank(multiplication).
Index h2_dimension(const Algebra& a, const Variety& v);

/// The unique morphism h: U -> dom(e) over A, for e central with codomain A.
LinearMap lift_universal(const UceResult& r, const Extension& e);

/// Dimension of the space of morphisms U -> dom(e) over A minus one point:
/// zero exactly when lift_universal's answer is unique.
Index lift_ambiguity_dimension(const UceResult& r, const Extension& e, const LinearMap& h);

struct TheoremCertificate {
  bool universal = false;
  Index h1_dim = 0;
  std::optional<Index> h2_dim;
  /// False when the ambient variety is not known to satisfy (UCE); the
  /// certificate is then reported but not meaningful.
  bool in_scope = false;
};

/// H1(U) = dim I(U) and, for perfect U, H2(U) via h2_dimension.
TheoremCertificate check_theorem_h1h2(const Extension& e);

/// Universality by construction: the lift from build_uce(A) is an isomorphism.
bool is_universal_direct(const Extension& e);

struct UceViolation {
  std::uint64_t trial = 0;
  std::uint64_t trial_seed = 0;  // 0 for the injected instance
  bool injected = false;
  Extension f;  // B -> A
  Extension g;  // C -> B
  Index commutator_dim = 0;
};

struct UceSearchOptions {
  Variety ambient;
  std::uint64_t trials = 0;
  Index dim_bound = 3;  // bound on dim A
  Field field = Field::rationals();
  std::uint64_t seed = 0;
  bool inject_known_counterexample = false;
};

/// Random composable pairs of central extensions A <- B <- C over perfect B;
/// reports every pair whose composite is not central.
std::vector<UceViolation> check_uce_condition(const UceSearchOptions& options);

/// Regenerates one trial from its recorded seed.
std::optional<UceViolation> replay_uce_trial(const UceSearchOptions& options, std::uint64_t trial,
                                             std::uint64_t trial_seed);

/// Seed of the given trial, a pure function of (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Requires both central and composable. Returns the common verdict for g and
/// the composite; throws AssertionFailure if they differ and PreconditionError
/// if the composite is not central.
bool composite_universality(const Extension& e_f, const Extension& e_g);

struct NestedReport {
  Index dim_b = 0;
  Index dim_u_leib = 0;
  Index dim_u_lie = 0;
  Index h2_leib = 0;
  Index h2_lie = 0;
  Index lie_verbal_of_u_leib = 0;  // dim [U,U]_Lie inside U_Leib
  Index h2_u_lie_in_leib = 0;      // dim H2(U_Lie) computed in Leib
  bool reflection_is_uce = false;
  bool exact_sequence_holds = false;
  bool refinement_holds = false;
};

/// Compares the Leibniz and Lie universal central extensions of a perfect Lie algebra.
NestedReport nested_compare(const Algebra& b);

}  // namespace centext
