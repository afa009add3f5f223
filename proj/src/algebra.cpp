#include "centext/algebra.hpp"

#include <set>
#include <stdexcept>

#include "centext/errors.hpp"

namespace centext {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("algebra: empty basis label");
    if (!seen.insert(l).second) throw std::invalid_argument("algebra: duplicate basis label '" + l + "'");
  }
}

std::string term_string(const Scalar& c, const std::string& label, bool first) {
  std::string coeff = c.to_string();
  std::string sign;
  if (coeff[0] == '-') {
    sign = "-";
    coeff.erase(0, 1);
  } else if (!first) {
    sign = "+";
  }
  if (coeff == "1") return sign + label;
  return sign + coeff + "*" + label;
}

}  // namespace

Algebra::Algebra() : Algebra(Field::rationals(), {}, Matrix(0, 0)) {}

Algebra::Algebra(Field field, std::vector<std::string> labels, Matrix table) {
  check_labels(labels);
  const Index d = static_cast<Index>(labels.size());
  if (table.rows() != d * d || table.cols() != d) {
    throw std::invalid_argument("algebra: structure table must be dim^2 x dim");
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(labels), normalized(table, field)});
}

Algebra Algebra::from_products(Field field, std::vector<std::string> labels, const std::vector<Product>& products) {
  const Index d = static_cast<Index>(labels.size());
  Matrix table = zero_matrix(d * d, d, field);
  for (const auto& p : products) {
    if (p.left < 0 || p.left >= d || p.right < 0 || p.right >= d || p.target < 0 || p.target >= d) {
      throw std::invalid_argument("algebra: product index out of range");
    }
    table(p.left * d + p.right, p.target) += field.coerce(p.coefficient);
  }
  return Algebra(field, std::move(labels), std::move(table));
}

Algebra Algebra::zero(Field field) { return Algebra(field, {}, Matrix(0, 0)); }

Algebra Algebra::abelian(Field field, Index dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (Index i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return Algebra(field, std::move(labels), zero_matrix(dim * dim, dim, field));
}

Matrix Algebra::right_multiplication(Index j) const {
  const Index d = dim();
  Matrix m(d, d);
  for (Index k = 0; k < d; ++k) m.row(k) = table().row(k * d + j);
  return m;
}

Matrix Algebra::left_multiplication(Index i) const {
  const Index d = dim();
  return table().middleRows(i * d, d);
}

std::vector<Algebra::Product> Algebra::nonzero_products() const {
  std::vector<Product> out;
  const Index d = dim();
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < d; ++k) {
        const Scalar& c = table()(i * d + j, k);
        if (!c.is_zero()) out.push_back({i, j, k, c});
      }
    }
  }
  return out;
}

bool Algebra::same_structure(const Algebra& other) const {
  if (data_ == other.data_) return true;
  return field() == other.field() && dim() == other.dim() && table() == other.table();
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.same_structure(b) && a.labels() == b.labels();
}

RowVector bracket(const Algebra& a, const RowVector& u, const RowVector& v) {
  const Index d = a.dim();
  if (u.size() != d || v.size() != d) throw std::invalid_argument("bracket: vector length mismatch");
  RowVector out = a.zero_vector();
  for (Index i = 0; i < d; ++i) {
    if (u(i).is_zero()) continue;
    for (Index j = 0; j < d; ++j) {
      if (v(j).is_zero()) continue;
      const Scalar c = u(i) * v(j);
      for (Index k = 0; k < d; ++k) {
        const Scalar& t = a.table()(i * d + j, k);
        if (!t.is_zero()) out(k) += c * t;
      }
    }
  }
  return out;
}

LinearMap::LinearMap(Algebra domain, Algebra codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (!(domain_.field() == codomain_.field())) throw std::invalid_argument("linear map: field mismatch");
  if (matrix.rows() != domain_.dim() || matrix.cols() != codomain_.dim()) {
    throw std::invalid_argument("linear map: matrix must be dim(domain) x dim(codomain)");
  }
  matrix_ = normalized(matrix, domain_.field());
}

LinearMap LinearMap::identity(const Algebra& a) {
  LinearMap f(a, a, identity_matrix(a.dim(), a.field()));
  f.certified_ = true;
  return f;
}

LinearMap LinearMap::zero(const Algebra& domain, const Algebra& codomain) {
  LinearMap f(domain, codomain, zero_matrix(domain.dim(), codomain.dim(), domain.field()));
  f.certified_ = true;
  return f;
}

LinearMap LinearMap::certified() const {
  if (!is_morphism(*this)) throw PreconditionError("linear map is not an algebra morphism");
  LinearMap f = *this;
  f.certified_ = true;
  return f;
}

bool is_morphism(const LinearMap& f) {
  if (f.morphism_certified()) return true;
  const Algebra& a = f.domain();
  const Index d = a.dim();
  const Matrix& m = f.matrix();
  for (Index i = 0; i < d; ++i) {
    const RowVector fi = m.row(i);
    for (Index j = 0; j < d; ++j) {
      RowVector lhs = row_times<Scalar>(a.product(i, j), m);
      RowVector rhs = bracket(f.codomain(), fi, RowVector(m.row(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

LinearMap expect_morphism(const LinearMap& f, const std::string& what) {
  ensure(is_morphism(f), what + " is not an algebra morphism");
  return f.certified();
}

bool is_surjective(const LinearMap& f) { return rank<Scalar>(f.matrix()) == f.codomain().dim(); }

bool is_injective(const LinearMap& f) { return rank<Scalar>(f.matrix()) == f.domain().dim(); }

bool is_isomorphism(const LinearMap& f) {
  return f.domain().dim() == f.codomain().dim() && is_injective(f) && is_morphism(f);
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!f.codomain().same_structure(g.domain())) throw std::invalid_argument("compose: maps are not composable");
  LinearMap h(f.domain(), g.codomain(), f.matrix() * g.matrix());
  if (f.morphism_certified() && g.morphism_certified()) return expect_morphism(h, "composite of morphisms");
  return h;
}

namespace {

// [v, e_i] and [e_i, v], skipping zero coordinates of v.
RowVector bracket_with_basis(const Algebra& a, const RowVector& v, Index i, bool v_on_left) {
  const Index d = a.dim();
  RowVector out = a.zero_vector();
  for (Index k = 0; k < d; ++k) {
    if (v(k).is_zero()) continue;
    const Index row = v_on_left ? k * d + i : i * d + k;
    for (Index t = 0; t < d; ++t) {
      const Scalar& c = a.table()(row, t);
      if (!c.is_zero()) out(t) += v(k) * c;
    }
  }
  return out;
}

}  // namespace

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
  for (Index r = 0; r < s.dim(); ++r) {
    const RowVector v = s.basis().row(r);
    for (Index i = 0; i < a.dim(); ++i) {
      if (!s.contains(bracket_with_basis(a, v, i, true))) return false;
      if (!s.contains(bracket_with_basis(a, v, i, false))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw std::invalid_argument("is_subalgebra: ambient mismatch");
  for (Index i = 0; i < s.dim(); ++i) {
    for (Index j = 0; j < s.dim(); ++j) {
      if (!s.contains(bracket(a, s.basis().row(i), s.basis().row(j)))) return false;
    }
  }
  return true;
}

IdealWitness ideal_generated(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw std::invalid_argument("ideal_generated: ambient mismatch");
  // Worklist closure: each vector that enlarges the span is bracketed with the basis once.
  Subspace current = Subspace::zero(a.dim());
  std::vector<RowVector> pending;
  for (Index r = 0; r < s.dim(); ++r) {
    RowVector v = s.basis().row(r);
    if (current.extend(v)) pending.push_back(std::move(v));
  }
  while (!pending.empty()) {
    const RowVector v = std::move(pending.back());
    pending.pop_back();
    for (Index i = 0; i < a.dim() && !current.is_whole(); ++i) {
      for (bool left : {true, false}) {
        RowVector w = bracket_with_basis(a, v, i, left);
        if (current.extend(w)) pending.push_back(std::move(w));
      }
    }
  }
  ensure(is_ideal(a, current), "ideal closure did not stabilise on an ideal");
  return {current, true};
}

IdealWitness as_ideal(const Algebra& a, const Subspace& s) {
  require(is_ideal(a, s), "subspace is not an ideal");
  return {s, true};
}

Subspace subalgebra_generated(const Algebra& a, const Subspace& s) {
  Subspace current = s;
  for (Index round = 0; round <= a.dim(); ++round) {
    Matrix rows = current.basis();
    for (Index i = 0; i < current.dim(); ++i) {
      Matrix block(current.dim(), a.dim());
      for (Index j = 0; j < current.dim(); ++j) {
        block.row(j) = bracket(a, current.basis().row(i), current.basis().row(j));
      }
      rows = vstack<Scalar>(rows, block);
    }
    Subspace next = Subspace::span(a.dim(), rows);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
  throw AssertionFailure("subalgebra closure exceeded dim rounds");
}

std::vector<std::string> labels_for_rows(const std::vector<std::string>& names, const Matrix& rows,
                                         const std::string& prefix) {
  std::vector<std::string> labels;
  std::set<std::string> used;
  for (Index i = 0; i < rows.rows(); ++i) {
    std::string label;
    bool first = true;
    for (Index j = 0; j < rows.cols(); ++j) {
      if (rows(i, j).is_zero()) continue;
      label += term_string(rows(i, j), names[static_cast<std::size_t>(j)], first);
      first = false;
    }
    if (label.empty() || label.size() > 24) label = prefix + std::to_string(i + 1);
    while (!used.insert(label).second) label += "'";
    labels.push_back(label);
  }
  return labels;
}

std::vector<std::string> labels_for_rows(const Algebra& a, const Matrix& rows, const std::string& prefix) {
  return labels_for_rows(a.labels(), rows, prefix);
}

QuotientAlgebra quotient_algebra(const Algebra& a, const IdealWitness& ideal) {
  require(ideal.closure_certified, "quotient_algebra: ideal is not certified");
  const Field& field = a.field();
  auto q = quotient_map<Scalar>(a.dim(), ideal.subspace);
  const Matrix proj = normalized(q.proj, field);
  const Matrix section = normalized(q.section, field);
  const Index qd = section.rows();
  Matrix table(qd * qd, qd);
  for (Index i = 0; i < qd; ++i) {
    for (Index j = 0; j < qd; ++j) {
      table.row(i * qd + j) = row_times<Scalar>(bracket(a, section.row(i), section.row(j)), proj);
    }
  }
  std::vector<std::string> labels;
  for (Index c : q.complement) labels.push_back(a.labels()[c]);
  Algebra quotient(field, std::move(labels), std::move(table));
  LinearMap p = expect_morphism(LinearMap(a, quotient, proj), "quotient projection");
  return {quotient, p, section};
}

SubalgebraView subalgebra(const Algebra& a, const Subspace& s) {
  if (!is_subalgebra(a, s)) throw PreconditionError("subspace is not a subalgebra");
  const Index sd = s.dim();
  const Matrix basis = normalized(s.basis(), a.field());
  Matrix table(sd * sd, sd);
  for (Index i = 0; i < sd; ++i) {
    for (Index j = 0; j < sd; ++j) {
      table.row(i * sd + j) = s.coordinates(bracket(a, basis.row(i), basis.row(j)));
    }
  }
  Algebra sub(a.field(), labels_for_rows(a, basis), std::move(table));
  return {sub, expect_morphism(LinearMap(sub, a, basis), "subalgebra inclusion")};
}

DirectProduct direct_product(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_product: field mismatch");
  const Field& field = a.field();
  const Index m = a.dim();
  const Index n = b.dim();
  const Index d = m + n;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  Matrix table = zero_matrix(d * d, d, field);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) table.row(i * d + j).head(m) = a.product(i, j);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) table.row((m + i) * d + (m + j)).tail(n) = b.product(i, j);
  }
  Algebra prod(field, std::move(labels), std::move(table));
  Matrix p1 = zero_matrix(d, m, field);
  Matrix p2 = zero_matrix(d, n, field);
  p1.topRows(m) = identity_matrix(m, field);
  p2.bottomRows(n) = identity_matrix(n, field);
  return {prod,
          expect_morphism(LinearMap(prod, a, p1), "product projection"),
          expect_morphism(LinearMap(prod, b, p2), "product projection"),
          expect_morphism(LinearMap(a, prod, p1.transpose()), "product injection"),
          expect_morphism(LinearMap(b, prod, p2.transpose()), "product injection")};
}

FibreProduct fibre_product(const LinearMap& f, const LinearMap& g) {
  if (!f.codomain().same_structure(g.codomain())) throw PreconditionError("fibre_product: codomain mismatch");
  require(is_morphism(f) && is_morphism(g), "fibre_product: maps must be morphisms");
  const Algebra& b = f.domain();
  const Algebra& c = g.domain();
  const Index m = b.dim();
  const Index n = c.dim();
  // (x, y) * [F; -G] = f(x) - g(y). The product is componentwise, so the
  // table is computed without materialising B x C.
  const Subspace s = kernel<Scalar>(vstack<Scalar>(f.matrix(), Matrix(-g.matrix())));
  const Index k = s.dim();
  const Matrix basis = normalized(s.basis(), b.field());
  const Matrix left = basis.leftCols(m);
  const Matrix right = basis.rightCols(n);
  Matrix table(k * k, k);
  RowVector both(m + n);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      both.head(m) = bracket(b, left.row(i), left.row(j));
      both.tail(n) = bracket(c, right.row(i), right.row(j));
      table.row(i * k + j) = s.coordinates(both);
    }
  }
  std::vector<std::string> product_labels;
  for (const auto& l : b.labels()) product_labels.push_back("(" + l + ",0)");
  for (const auto& l : c.labels()) product_labels.push_back("(0," + l + ")");
  Algebra fibre(b.field(), labels_for_rows(product_labels, basis), std::move(table));
  return {fibre, expect_morphism(LinearMap(fibre, b, left), "fibre product projection"),
          expect_morphism(LinearMap(fibre, c, right), "fibre product projection"), std::nullopt};
}

FibreProduct kernel_pair(const LinearMap& f) {
  FibreProduct kp = fibre_product(f, f);
  const Algebra& b = f.domain();
  const Index n = b.dim();
  const Index kd = kp.algebra.dim();
  // Diagonal (b, b) in the coordinates of the fibre product's basis.
  Matrix diag_in_product(n, 2 * n);
  diag_in_product.leftCols(n) = identity_matrix(n, b.field());
  diag_in_product.rightCols(n) = identity_matrix(n, b.field());
  // The fibre product's basis, in coordinates of B x B.
  Matrix both(kd, 2 * n);
  both.leftCols(n) = kp.p1.matrix();
  both.rightCols(n) = kp.p2.matrix();
  Matrix coords = solve_left<Scalar>(both, diag_in_product);
  kp.diagonal = expect_morphism(LinearMap(b, kp.algebra, coords), "kernel pair diagonal");
  return kp;
}

Subspace centre(const Algebra& a) {
  const Index d = a.dim();
  Matrix conditions(d, 2 * d * d);
  for (Index i = 0; i < d; ++i) {
    conditions.middleCols(2 * i * d, d) = a.right_multiplication(i);
    conditions.middleCols((2 * i + 1) * d, d) = a.left_multiplication(i);
  }
  if (d == 0) return Subspace::zero(0);
  return kernel<Scalar>(conditions);
}

BasisChange change_basis(const Algebra& a, const Matrix& p, const std::string& prefix) {
  const Index d = a.dim();
  if (p.rows() != d || p.cols() != d) throw std::invalid_argument("change_basis: matrix must be dim x dim");
  const Matrix pn = normalized(p, a.field());
  const Matrix pinv = invert<Scalar>(pn);
  Matrix table(d * d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) table.row(i * d + j) = bracket(a, pn.row(i), pn.row(j)) * pinv;
  }
  std::vector<std::string> labels;
  for (Index i = 0; i < d; ++i) labels.push_back(prefix + std::to_string(i + 1));
  Algebra changed(a.field(), std::move(labels), std::move(table));
  return {changed, expect_morphism(LinearMap(changed, a, pn), "change of basis")};
}

}  // namespace centext
