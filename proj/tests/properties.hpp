#pragma once

#include <functional>
#include <string>
#include <vector>

#include "centext/random.hpp"
#include "centext/uce.hpp"
#include "oracles.hpp"

/// Seeded property checks shared by the property test binary and the acceptance binary.
namespace centext::properties {

struct Outcome {
  std::string name;
  int instances = 0;
  int failures = 0;
  int witnesses = 0;  // instances where the hypothesis was non-vacuous
  std::string first_failure;
  bool ok() const { return failures == 0 && instances > 0 && witnesses > 0; }
};

constexpr Index kMaxDim = 5;

/// One instance: returns false on a violated property; sets `witness` when the
/// property's hypothesis actually applied.
using Instance = std::function<bool(random::Rng&, const Field&, bool& witness)>;

inline random::Rng rng_for(const std::string& property, const Field& field, int instance) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : property) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return random::Rng(trial_seed(h ^ field.characteristic(), static_cast<std::uint64_t>(instance)));
}

/// Runs `per_field` instances over Q and over F_5. Exceptions count as failures.
inline Outcome run(const std::string& name, int per_field, const Instance& body) {
  Outcome out{name};
  for (const Field& field : {Field::rationals(), Field::prime(5)}) {
    for (int i = 0; i < per_field; ++i) {
      random::Rng rng = rng_for(name, field, i);
      bool witness = false;
      bool ok = false;
      std::string why = "property violated";
      try {
        ok = body(rng, field, witness);
      } catch (const std::exception& e) {
        why = e.what();
      }
      ++out.instances;
      out.witnesses += witness;
      if (!ok) {
        if (out.failures++ == 0) out.first_failure = field.name() + " instance " + std::to_string(i) + ": " + why;
      }
    }
  }
  return out;
}

struct Setting {
  Variety ambient;
  Variety coefficient;
};

inline Setting random_setting(random::Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return {naalg(), vect()};
    case 1:
      return {lie(), vect()};
    case 2:
      return {leib(), vect()};
    case 3:
      return {leib(), lie()};
    default:
      return {naalg(), leib()};
  }
}

inline Algebra random_member(random::Rng& rng, const Field& field, const Variety& ambient, Index max_dim = kMaxDim) {
  const bool leibniz_inside = ambient.name == "NAAlg" && std::bernoulli_distribution(0.3)(rng);
  return random::member(rng, field, leibniz_inside ? leib() : ambient, max_dim);
}

/// B -> B/K with K central, arbitrary, or an abelian product factor.
inline Extension random_extension(random::Rng& rng, const Field& field, const Setting& s) {
  const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
  if (kind == 2) {
    const Algebra a = random_member(rng, field, s.ambient, kMaxDim - 1);
    const Index extra = std::uniform_int_distribution<Index>(1, std::max<Index>(1, kMaxDim - a.dim()))(rng);
    const DirectProduct p = direct_product(a, Algebra::abelian(field, extra, "z"));
    return make_extension(p.p1, s.ambient, s.coefficient);
  }
  const Algebra b = random_member(rng, field, s.ambient);
  const IdealWitness k = kind == 0 ? random::central_ideal(rng, b) : random::ideal(rng, b);
  return make_extension(quotient_algebra(b, k).proj, s.ambient, s.coefficient);
}

inline Extension random_central_extension(random::Rng& rng, const Field& field, const Setting& s) {
  Extension e = random_extension(rng, field, s);
  return is_central(e) ? e : centralise(e).extension;
}

inline Outcome central_iff_normal(int n) {
  return run("central iff normal", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Extension e = random_extension(rng, field, random_setting(rng));
    witness = is_central(e);
    return witness == is_normal(e);
  });
}

inline Outcome trivial_implies_central(int n) {
  return run("trivial implies central", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Extension e = random_extension(rng, field, random_setting(rng));
    witness = is_trivial(e);
    return !witness || is_central(e);
  });
}

inline Outcome split_epi_trivial_iff_central(int n) {
  return run("split epi: trivial iff central", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Algebra a = random::member(rng, field, naalg(), 3);
    const Index m = std::uniform_int_distribution<Index>(1, kMaxDim - a.dim())(rng);
    const double density = std::bernoulli_distribution(0.4)(rng) ? 0.0 : 0.3;
    const random::SplitEpi s = random::semidirect_naalg(rng, a, m, density);
    const Extension e = make_extension(s.projection, naalg(), vect());
    // split_trivial_check itself asserts is_trivial == is_central.
    const bool trivial = split_trivial_check(e, s.section);
    witness = trivial;
    return trivial == is_central(e);
  });
}

inline Outcome pullback_stability(int n) {
  return run("pullback of central is central", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Setting s = random_setting(rng);
    const Extension e = random_central_extension(rng, field, s);
    const LinearMap g = random::morphism_into(rng, e.codomain());
    const Extension pb = pullback_extension(e, g);
    witness = pb.kernel.subspace.dim() > 0;
    return is_central(pb);
  });
}

inline Outcome sub_extension_central(int n) {
  return run("sub-extension of central is central", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Setting s = random_setting(rng);
    const Extension e = random_central_extension(rng, field, s);
    // Lifts of a basis of A plus part of the kernel, closed under the bracket.
    const Matrix lifts = solve_left<Scalar>(e.map.matrix(), identity_matrix(e.codomain().dim(), field));
    const Index keep = std::uniform_int_distribution<Index>(0, e.kernel.subspace.dim())(rng);
    const Subspace extra = random::subspace_of(rng, field, e.kernel.subspace, keep);
    const Subspace sub =
        subalgebra_generated(e.domain(), Subspace::span(e.domain().dim(), vstack<Scalar>(lifts, extra.basis())));
    witness = sub.dim() < e.domain().dim();
    return is_central(sub_extension(e, sub));
  });
}

inline Outcome centralisation(int n) {
  return run("centralisation is central and idempotent", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Extension e = random_extension(rng, field, random_setting(rng));
    const Centralisation c = centralise(e);
    witness = c.extension.domain().dim() < e.domain().dim();
    const Centralisation again = centralise(c.extension);
    return is_central(c.extension) &&
           c.extension.domain().dim() == e.domain().dim() - relative_commutator(e).dim() &&
           again.extension.domain().dim() == c.extension.domain().dim() && is_isomorphism(again.quot);
  });
}

inline Outcome commutator_matches_oracle(int n) {
  return run("relative commutator matches Vect oracle", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Setting s{random_setting(rng).ambient, vect()};
    const Extension e = random_extension(rng, field, s);
    const Subspace c = relative_commutator(e);
    witness = c.dim() > 0;
    return c == testing::vect_commutator_oracle(e.domain(), e.kernel.subspace);
  });
}

inline Outcome lattice_identity(int n) {
  return run("subspace lattice dimension identity", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Index d = std::uniform_int_distribution<Index>(0, kMaxDim)(rng);
    const auto pick = [&] { return std::uniform_int_distribution<Index>(0, d)(rng); };
    const Subspace u = random::subspace(rng, field, d, pick());
    const Subspace v = random::subspace(rng, field, d, pick());
    const Subspace sum = subspace_sum(u, v);
    const Subspace meet = subspace_intersect(u, v);
    witness = meet.dim() > 0 && sum.dim() > std::max(u.dim(), v.dim());
    return sum.dim() + meet.dim() == u.dim() + v.dim() && sum.contains(u) && sum.contains(v) && u.contains(meet) &&
           v.contains(meet);
  });
}

inline Outcome reflector_functoriality(int n) {
  return run("reflector functoriality", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Setting s = random_setting(rng);
    const Variety v = s.coefficient.name == "Vect" && std::bernoulli_distribution(0.5)(rng) ? lie() : s.coefficient;
    const Algebra a = random_member(rng, field, s.ambient, 4);
    const LinearMap f = random::morphism_into(rng, a);
    const LinearMap h = quotient_algebra(a, random::ideal(rng, a)).proj;
    const Reflection ra = reflect(a, v);
    witness = ra.algebra.dim() > 0;
    return reflect_map(compose(h, f), v).matrix() == reflect_map(f, v).matrix() * reflect_map(h, v).matrix() &&
           reflect_map(LinearMap::identity(a), v).matrix() == identity_matrix(ra.algebra.dim(), field);
  });
}

inline Outcome uce_lifts_unique(int n) {
  return run("universal lifts exist and are unique", n, [](random::Rng& rng, const Field& field, bool& witness) {
    const Variety ambient = std::bernoulli_distribution(0.5)(rng) ? lie() : leib();
    const Algebra p = random::perfect_lie(rng, field, kMaxDim);
    const UceResult r = build_uce(p, ambient, UceChecks::none);
    // A random central quotient of U over P.
    const Index kill = std::uniform_int_distribution<Index>(0, r.h2.dim())(rng);
    const Subspace l = random::subspace_of(rng, field, r.h2, kill);
    const QuotientAlgebra q = quotient_algebra(r.u.domain(), as_ideal(r.u.domain(), l));
    const Extension e = make_extension(LinearMap(q.algebra, p, q.section * r.u.map.matrix()), ambient, vect());
    witness = e.kernel.subspace.dim() > 0;
    const LinearMap h = lift_universal(r, e);
    return is_central(r.u) && is_central(e) && lift_ambiguity_dimension(r, e, h) == 0 &&
           h.matrix() * e.map.matrix() == r.u.map.matrix();
  });
}

/// Every property, `per_field` instances over each of Q and F_5.
inline std::vector<Outcome> all(int per_field) {
  return {central_iff_normal(per_field),     trivial_implies_central(per_field),
          split_epi_trivial_iff_central(per_field), pullback_stability(per_field),
          sub_extension_central(per_field),  centralisation(per_field),
          commutator_matches_oracle(per_field), lattice_identity(per_field),
          reflector_functoriality(per_field), uce_lifts_unique(per_field)};
}

}  // namespace centext::properties
