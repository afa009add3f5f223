#include "centext/extensions.hpp"

namespace centext {

bool same_variety(const Variety& a, const Variety& b) { return a.laws == b.laws; }

Extension make_extension(const LinearMap& f, Variety ambient, Variety coefficient) {
  const LinearMap g = f.morphism_certified() ? f : f.certified();
  require(is_surjective(g), "extension map is not surjective");
  check_field_supported(ambient, g.domain().field());
  check_field_supported(coefficient, g.domain().field());
  require(satisfies(g.domain(), ambient), "extension domain does not satisfy " + ambient.name);
  require(satisfies(g.codomain(), ambient), "extension codomain does not satisfy " + ambient.name);
  require(satisfies(reflect(g.domain(), coefficient).algebra, ambient),
          coefficient.name + " is not contained in " + ambient.name);
  IdealWitness k = as_ideal(g.domain(), kernel(g.matrix()));
  return {g, std::move(k), std::move(ambient), std::move(coefficient)};
}

Extension identity_extension(const Algebra& a, Variety ambient, Variety coefficient) {
  return make_extension(LinearMap::identity(a), std::move(ambient), std::move(coefficient));
}

Subspace relative_commutator(const Extension& e) {
  const FibreProduct kp = kernel_pair(e.map);
  const Subspace w = verbal_subobject(kp.algebra, e.coefficient).subspace;
  const Subspace in_second = subspace_intersect(w, kernel(kp.p1.matrix()));
  Subspace comm = image(in_second, kp.p2.matrix());
  ensure(e.kernel.subspace.contains(comm), "relative commutator escapes the kernel");
  ensure(is_ideal(e.domain(), comm), "relative commutator is not an ideal");
  return comm;
}

bool is_central(const Extension& e) { return relative_commutator(e).empty(); }

bool is_trivial(const Extension& e) {
  const Reflection rb = reflect(e.domain(), e.coefficient);
  const Reflection ra = reflect(e.codomain(), e.coefficient);
  const Matrix if_ = rb.section * e.map.matrix() * ra.unit.matrix();
  // A x_{I(A)} I(B) = kernel of (a, x) |-> eta_A(a) - I(f)(x).
  const Subspace fibre = kernel(vstack<Scalar>(ra.unit.matrix(), -if_));
  Matrix comparison(e.domain().dim(), e.codomain().dim() + rb.algebra.dim());
  comparison << e.map.matrix(), rb.unit.matrix();
  ensure(fibre.contains(image(comparison)), "comparison map leaves the fibre product");
  return rank(comparison) == e.domain().dim() && fibre.dim() == e.domain().dim();
}

bool is_normal(const Extension& e) {
  const FibreProduct kp = kernel_pair(e.map);
  return is_trivial(make_extension(kp.p1, e.ambient, e.coefficient));
}

Centralisation centralise(const Extension& e) {
  const QuotientAlgebra q = quotient_algebra(e.domain(), as_ideal(e.domain(), relative_commutator(e)));
  const LinearMap induced(q.algebra, e.codomain(), q.section * e.map.matrix());
  Extension c = make_extension(expect_morphism(induced, "centralised extension"), e.ambient, e.coefficient);
  ensure(is_central(c), "centralisation is not central");
  return {std::move(c), q.proj};
}

Extension pullback_extension(const Extension& e, const LinearMap& g) {
  require(g.codomain().same_structure(e.codomain()), "pullback: map does not land in the extension's codomain");
  const FibreProduct fp = fibre_product(e.map, g.morphism_certified() ? g : g.certified());
  Extension p = make_extension(fp.p2, e.ambient, e.coefficient);
  if (is_central(e)) ensure(is_central(p), "pullback of a central extension is not central");
  return p;
}

Extension compose(const Extension& outer, const Extension& inner) {
  require(same_variety(outer.ambient, inner.ambient) && same_variety(outer.coefficient, inner.coefficient),
          "compose: extensions use different varieties");
  return make_extension(compose(outer.map, inner.map), outer.ambient, outer.coefficient);
}

Extension sub_extension(const Extension& e, const Subspace& sub) {
  const SubalgebraView view = subalgebra(e.domain(), sub);
  const LinearMap restricted = compose(e.map, view.inclusion);
  require(is_surjective(restricted), "sub_extension: subalgebra does not cover the codomain");
  Extension s = make_extension(restricted, e.ambient, e.coefficient);
  if (is_central(e)) ensure(is_central(s), "sub-extension of a central extension is not central");
  return s;
}

bool is_perfect(const Algebra& a, const Variety& v) { return verbal_subobject(a, v).subspace.is_whole(); }

Extension perfect_subobject(const Extension& e) {
  require(is_central(e), "perfect_subobject: extension is not central");
  require(is_perfect(e.codomain(), e.coefficient), "perfect_subobject: codomain is not perfect");
  const SubalgebraView view = subalgebra(e.domain(), verbal_subobject(e.domain(), e.coefficient).subspace);
  const LinearMap restricted = compose(e.map, view.inclusion);
  ensure(is_surjective(restricted), "restriction to the verbal ideal is not surjective");
  ensure(is_perfect(view.algebra, e.coefficient), "verbal ideal of a central extension is not perfect");
  return make_extension(restricted, e.ambient, e.coefficient);
}

bool split_trivial_check(const Extension& e, const LinearMap& s) {
  require(s.domain().same_structure(e.codomain()) && s.codomain().same_structure(e.domain()),
          "split_trivial_check: section has the wrong shape");
  require(is_morphism(s), "split_trivial_check: section is not a morphism");
  require(s.matrix() * e.map.matrix() == identity_matrix(e.codomain().dim(), e.domain().field()),
          "split_trivial_check: not a section");
  const bool trivial = is_trivial(e);
  ensure(trivial == is_central(e), "split epimorphism: trivial and central disagree");
  return trivial;
}

LinearMap lift_along_trivial(const LinearMap& a_map, const Extension& e) {
  require(a_map.codomain().same_structure(e.codomain()), "lift: map does not land in the extension's codomain");
  require(is_morphism(a_map), "lift: map is not a morphism");
  require(is_perfect(a_map.domain(), e.coefficient), "lift: domain is not perfect");
  require(is_trivial(e), "lift: extension is not trivial");
  // B = A x_{I(A)} I(B); a perfect P has I(P) = 0, so the lift is b(p) = (a(p), 0).
  const Reflection rb = reflect(e.domain(), e.coefficient);
  const Index m = e.codomain().dim();
  Matrix comparison(e.domain().dim(), m + rb.algebra.dim());
  comparison << e.map.matrix(), rb.unit.matrix();
  Matrix target = zero_matrix(a_map.domain().dim(), m + rb.algebra.dim(), e.domain().field());
  target.leftCols(m) = a_map.matrix();
  Matrix lift = solve_left(comparison, target);
  return expect_morphism(LinearMap(a_map.domain(), e.domain(), lift), "lift along trivial extension");
}

bool is_extension_isomorphism(const LinearMap& phi, const Extension& e1, const Extension& e2) {
  if (!phi.domain().same_structure(e1.domain()) || !phi.codomain().same_structure(e2.domain())) return false;
  if (!e1.codomain().same_structure(e2.codomain())) return false;
  return is_isomorphism(phi) && phi.matrix() * e2.map.matrix() == e1.map.matrix();
}

}  // namespace centext
