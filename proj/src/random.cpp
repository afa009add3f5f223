#include "centext/random.hpp"

#include <functional>

#include "centext/catalog.hpp"

namespace centext::random {

namespace {

Index uniform(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Algebra from_table(const Field& field, Index dim, const Matrix& table, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  for (Index i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return Algebra(field, std::move(labels), table);
}

/// [e_i, e_j] = a*e_k-style cross product with nonzero scalings; perfect for any nonzero a, b, c.
Algebra twisted_so3(Rng& rng, const Field& field) {
  const Scalar a = nonzero_scalar(rng, field), b = nonzero_scalar(rng, field), c = nonzero_scalar(rng, field);
  return Algebra::from_products(field, {"e1", "e2", "e3"},
                                {{0, 1, 2, a}, {1, 0, 2, -a}, {1, 2, 0, b}, {2, 1, 0, -b}, {2, 0, 1, c}, {0, 2, 1, -c}});
}

/// g + g' with [x, y] = [x, y]_g, [m, x] = [m, x]_g and [x, m] = [m, m'] = 0: Leibniz, not Lie unless g abelian.
Algebra hemisemidirect_adjoint(const Algebra& g) {
  const Index n = g.dim();
  const Index d = 2 * n;
  Matrix table = zero_matrix(d * d, d, g.field());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      table.row(i * d + j).head(n) = g.product(i, j);
      table.row((n + i) * d + j).tail(n) = g.product(i, j);
    }
  }
  return from_table(g.field(), d, table);
}

/// Zeroes the left action [x, v] of a Lie semidirect product on its module coordinates >= split.
Algebra hemisemidirect_module(const Algebra& l, Index split) {
  const Index d = l.dim();
  Matrix table = l.table();
  for (Index i = 0; i < split; ++i) {
    for (Index j = split; j < d; ++j) table.row(i * d + j).setConstant(l.field().zero());
  }
  return from_table(l.field(), d, table);
}

Algebra product_of(const std::vector<Algebra>& pieces, const Field& field) {
  Algebra acc = Algebra::zero(field);
  for (const Algebra& p : pieces) acc = direct_product(acc, p).algebra;
  return acc;
}

}  // namespace

Scalar scalar(Rng& rng, const Field& field, int range) {
  if (field.is_rational()) return field.from_int(std::uniform_int_distribution<int>(-range, range)(rng));
  const auto p = static_cast<long long>(field.characteristic());
  return field.from_int(std::uniform_int_distribution<long long>(0, p - 1)(rng));
}

Scalar nonzero_scalar(Rng& rng, const Field& field, int range) {
  while (true) {
    Scalar s = scalar(rng, field, range);
    if (!is_zero(s)) return s;
  }
}

Matrix matrix(Rng& rng, const Field& field, Index rows, Index cols, double density) {
  Matrix m = zero_matrix(rows, cols, field);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      if (coin(rng, density)) m(i, j) = scalar(rng, field);
    }
  }
  return m;
}

Matrix invertible(Rng& rng, const Field& field, Index n) {
  while (true) {
    Matrix m = matrix(rng, field, n, n, 0.7);
    if (rank(m) == n) return m;
  }
}

Subspace subspace_of(Rng& rng, const Field& field, const Subspace& s, Index dim) {
  const Index target = std::min(dim, s.dim());
  if (target == 0) return Subspace::zero(s.ambient_dim());
  while (true) {
    Matrix rows = matrix(rng, field, target, s.dim()) * s.basis();
    Subspace t = Subspace::span(s.ambient_dim(), normalized(rows, field));
    if (t.dim() == target) return t;
  }
}

Subspace subspace(Rng& rng, const Field& field, Index ambient, Index dim) {
  return subspace_of(rng, field, Subspace::whole(ambient), dim);
}

Algebra naalg(Rng& rng, const Field& field, Index dim, double density) {
  return from_table(field, dim, matrix(rng, field, dim * dim, dim, density));
}

Algebra nilpotent_naalg(Rng& rng, const Field& field, Index dim, double density) {
  Matrix table = zero_matrix(dim * dim, dim, field);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      for (Index k = std::max(i, j) + 1; k < dim; ++k) {
        if (coin(rng, density)) table(i * dim + j, k) = scalar(rng, field);
      }
    }
  }
  return from_table(field, dim, table);
}

Algebra perfect_naalg2(Rng& rng, const Field& field) {
  while (true) {
    Matrix table = matrix(rng, field, 4, 2, 0.5);
    if (rank(table) == 2) return from_table(field, 2, table);
  }
}

Algebra rebased(Rng& rng, const Algebra& a) {
  if (a.dim() == 0) return a;
  return change_basis(a, invertible(rng, a.field(), a.dim())).algebra;
}

Algebra lie(Rng& rng, const Field& field, Index max_dim) {
  using Maker = std::function<Algebra()>;
  const std::vector<std::pair<Index, Maker>> pieces = {
      {1, [&] { return Algebra::abelian(field, 1); }},
      {2, [&] { return catalog::affine_line(field); }},
      {3, [&] { return catalog::heisenberg(field); }},
      {3, [&] { return catalog::sl2(field); }},
      {3, [&] { return twisted_so3(rng, field); }},
      {5, [&] { return catalog::sl2_standard_module(field); }},
  };
  std::vector<Algebra> chosen;
  Index remaining = uniform(rng, 1, max_dim);
  while (remaining > 0) {
    std::vector<const Maker*> fits;
    for (const auto& [d, make] : pieces) {
      if (d <= remaining) fits.push_back(&make);
    }
    const Maker& make = *fits[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(fits.size()) - 1))];
    chosen.push_back(make());
    remaining -= chosen.back().dim();
    if (coin(rng, 0.4)) break;
  }
  return rebased(rng, product_of(chosen, field));
}

Algebra perfect_lie(Rng& rng, const Field& field, Index max_dim) {
  require(max_dim >= 3, "perfect_lie: no perfect Lie algebra below dimension 3");
  std::vector<std::function<Algebra()>> pool = {
      [&] { return catalog::sl2(field); },
      [&] { return catalog::so3(field); },
      [&] { return twisted_so3(rng, field); },
  };
  if (max_dim >= 5) pool.push_back([&] { return catalog::sl2_standard_module(field); });
  if (max_dim >= 6) pool.push_back([&] { return direct_product(catalog::sl2(field), twisted_so3(rng, field)).algebra; });
  return rebased(rng, pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(pool.size()) - 1))]());
}

Algebra leibniz(Rng& rng, const Field& field, Index max_dim) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return lie(rng, field, max_dim);
    case 1:
      if (max_dim >= 2) return rebased(rng, catalog::leibniz_square(field));
      break;
    case 2:
      if (max_dim >= 4) return rebased(rng, hemisemidirect_adjoint(catalog::affine_line(field)));
      break;
    default:
      if (max_dim >= 5) return rebased(rng, hemisemidirect_module(catalog::sl2_standard_module(field), 3));
      break;
  }
  return lie(rng, field, max_dim);
}

Algebra member(Rng& rng, const Field& field, const Variety& v, Index max_dim) {
  if (v.name == "Lie") return lie(rng, field, max_dim);
  if (v.name == "Leib") return leibniz(rng, field, max_dim);
  if (v.name == "Vect") return Algebra::abelian(field, uniform(rng, 0, max_dim));
  require(v.laws.empty(), "random::member: unsupported variety " + v.name);
  const Index d = uniform(rng, 1, max_dim);
  switch (uniform(rng, 0, 2)) {
    case 0:
      return naalg(rng, field, d);
    case 1:
      return nilpotent_naalg(rng, field, d);
    default:
      return max_dim >= 2 ? rebased(rng, perfect_naalg2(rng, field)) : naalg(rng, field, d);
  }
}

IdealWitness ideal(Rng& rng, const Algebra& a, Index max_gen) {
  const Index gens = uniform(rng, 0, std::min(max_gen, a.dim()));
  return ideal_generated(a, subspace(rng, a.field(), a.dim(), gens));
}

IdealWitness central_ideal(Rng& rng, const Algebra& a) {
  const Subspace z = centre(a);
  return as_ideal(a, subspace_of(rng, a.field(), z, uniform(rng, 0, z.dim())));
}

SplitEpi semidirect_naalg(Rng& rng, const Algebra& a, Index module_dim, double density) {
  const Field& field = a.field();
  const Index n = a.dim();
  const Index d = n + module_dim;
  Matrix table = zero_matrix(d * d, d, field);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      if (i < n && j < n) {
        table.row(i * d + j).head(n) = a.product(i, j);
      } else {
        table.row(i * d + j).tail(module_dim) = matrix(rng, field, 1, module_dim, density);
      }
    }
  }
  Algebra b = from_table(field, d, table, "b");
  Matrix proj = zero_matrix(d, n, field);
  proj.topRows(n) = identity_matrix(n, field);
  return {LinearMap(b, a, proj).certified(), LinearMap(a, b, proj.transpose()).certified()};
}

LinearMap morphism_into(Rng& rng, const Algebra& a) {
  switch (uniform(rng, 0, 2)) {
    case 0: {
      const Subspace s = subalgebra_generated(a, subspace(rng, a.field(), a.dim(), uniform(rng, 0, a.dim())));
      return subalgebra(a, s).inclusion;
    }
    case 1: {
      const DirectProduct p = direct_product(a, Algebra::abelian(a.field(), uniform(rng, 1, 2), "z"));
      return p.p1;
    }
    default:
      return LinearMap::zero(Algebra::abelian(a.field(), uniform(rng, 0, 2), "z"), a).certified();
  }
}

}  // namespace centext::random
