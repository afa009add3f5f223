#pragma once

#include "centext/algebra.hpp"
#include "centext/varieties.hpp"

namespace centext {

/// A surjective certified morphism f: B -> A with its kernel K, the variety
/// both objects live in, and the subvariety V against which centrality is measured.
struct Extension {
  LinearMap map;
  IdealWitness kernel;
  Variety ambient;
  Variety coefficient;

  const Algebra& domain() const { return map.domain(); }
  const Algebra& codomain() const { return map.codomain(); }
};

/// Validates surjectivity, membership in `ambient`, and that I(B) lies in `ambient`.
Extension make_extension(const LinearMap& f, Variety ambient, Variety coefficient);
Extension identity_extension(const Algebra& a, Variety ambient, Variety coefficient);

/// [K, B]_V = p2(W ∩ ker p1), W the V-verbal ideal of the kernel pair.
Subspace relative_commutator(const Extension& e);
bool is_central(const Extension& e);
/// The comparison B -> A x_{I(A)} I(B) is bijective.
bool is_trivial(const Extension& e);
/// A kernel-pair projection is trivial.
bool is_normal(const Extension& e);

struct Centralisation {
  Extension extension;  // B/[K,B]_V -> A
  LinearMap quot;       // B -> B/[K,B]_V
};

Centralisation centralise(const Extension& e);

/// g*(e): B x_A C -> C for g: C -> A.
Extension pullback_extension(const Extension& e, const LinearMap& g);
/// outer o inner; the two extensions must share varieties and the middle object.
Extension compose(const Extension& outer, const Extension& inner);
/// Restriction of e to a subalgebra that still maps onto the codomain.
Extension sub_extension(const Extension& e, const Subspace& sub);

bool is_perfect(const Algebra& a, const Variety& v);

/// Restriction of a central e to [B,B]_V, whose domain is perfect when A is.
Extension perfect_subobject(const Extension& e);

/// For a section s of e: returns is_trivial(e), asserting it equals is_central(e).
bool split_trivial_check(const Extension& e, const LinearMap& s);

/// The unique b: P -> B with f o b = a_map, for e trivial and P perfect.
LinearMap lift_along_trivial(const LinearMap& a_map, const Extension& e);

/// phi: dom(e1) -> dom(e2) is an isomorphism with e2.f o phi = e1.f.
bool is_extension_isomorphism(const LinearMap& phi, const Extension& e1, const Extension& e2);

bool same_variety(const Variety& a, const Variety& b);

}  // namespace centext
