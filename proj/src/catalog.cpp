#include "centext/catalog.hpp"

namespace centext::catalog {

namespace {

using P = Algebra::Product;

// Adds [x, y] = sum c z and [y, x] = -sum c z.
void antisymmetric(std::vector<P>& out, Index x, Index y, Index z, long long c) {
  out.push_back({x, y, z, Scalar(c)});
  out.push_back({y, x, z, Scalar(-c)});
}

}  // namespace

NonAssociativeTower nonassociative_tower(const Field& field) {
  // [a2,a1]=a2, [a2,a2]=a1
  Algebra a = Algebra::from_products(field, {"a1", "a2"}, {{1, 0, 1, 1}, {1, 1, 0, 1}});
  // [b2,b2]=b1, [b3,b2]=b3, [b3,b3]=b2
  Algebra b = Algebra::from_products(field, {"b1", "b2", "b3"}, {{1, 1, 0, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}});
  // [c3,c2]=c1, [c3,c3]=c2, [c4,c3]=c4, [c4,c4]=c3
  Algebra c = Algebra::from_products(field, {"c1", "c2", "c3", "c4"},
                                     {{2, 1, 0, 1}, {2, 2, 1, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}});
  Matrix f = zero_matrix(3, 2, field);
  f(1, 0) = field.one();
  f(2, 1) = field.one();
  Matrix g = zero_matrix(4, 3, field);
  g(1, 0) = field.one();
  g(2, 1) = field.one();
  g(3, 2) = field.one();
  return {a, b, c, LinearMap(b, a, f).certified(), LinearMap(c, b, g).certified()};
}

Algebra sl2(const Field& field) {
  std::vector<P> p;
  antisymmetric(p, 1, 0, 0, 2);   // [h,e] = 2e
  antisymmetric(p, 1, 2, 2, -2);  // [h,f] = -2f
  antisymmetric(p, 0, 2, 1, 1);   // [e,f] = h
  return Algebra::from_products(field, {"e", "h", "f"}, p);
}

Algebra so3(const Field& field) {
  std::vector<P> p;
  antisymmetric(p, 0, 1, 2, 1);
  antisymmetric(p, 1, 2, 0, 1);
  antisymmetric(p, 2, 0, 1, 1);
  return Algebra::from_products(field, {"e1", "e2", "e3"}, p);
}

Algebra heisenberg(const Field& field) {
  std::vector<P> p;
  antisymmetric(p, 0, 1, 2, 1);
  return Algebra::from_products(field, {"x", "y", "z"}, p);
}

Algebra affine_line(const Field& field) {
  std::vector<P> p;
  antisymmetric(p, 0, 1, 1, 1);
  return Algebra::from_products(field, {"x", "y"}, p);
}

Algebra sl2_standard_module(const Field& field) {
  std::vector<P> p;
  antisymmetric(p, 1, 0, 0, 2);
  antisymmetric(p, 1, 2, 2, -2);
  antisymmetric(p, 0, 2, 1, 1);
  // e.v2 = v1, f.v1 = v2, h.v1 = v1, h.v2 = -v2
  antisymmetric(p, 0, 4, 3, 1);
  antisymmetric(p, 2, 3, 4, 1);
  antisymmetric(p, 1, 3, 3, 1);
  antisymmetric(p, 1, 4, 4, -1);
  return Algebra::from_products(field, {"e", "h", "f", "v1", "v2"}, p);
}

Algebra leibniz_square(const Field& field) {
  return Algebra::from_products(field, {"e1", "e2"}, {{0, 0, 1, 1}});
}

}  // namespace centext::catalog
