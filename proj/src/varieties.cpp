#include "centext/varieties.hpp"

#include <sstream>

namespace centext {

LawTerm LawTerm::var(int index) {
  if (index < 1 || index > 9) throw InputError("variable index out of range 1..9");
  LawTerm t;
  t.variable = index;
  return t;
}

LawTerm LawTerm::bracket(LawTerm left, LawTerm right) {
  LawTerm t;
  t.children.reserve(2);
  t.children.push_back(std::move(left));
  t.children.push_back(std::move(right));
  return t;
}

int LawTerm::degree() const { return is_leaf() ? 1 : left().degree() + right().degree(); }

std::string LawTerm::to_string() const {
  if (is_leaf()) return "x" + std::to_string(variable);
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

std::string Law::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, t] : terms) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << "*";
    out << t.to_string();
    first = false;
  }
  return out.str();
}

namespace {

Variety from_strings(std::string name, std::initializer_list<const char*> laws, bool uce, bool char2) {
  Variety v{std::move(name), {}, uce, char2};
  for (const char* s : laws) v.laws.push_back(parse_law(s));
  return v;
}

Scalar coefficient_in(const Field& field, const Rational& c) {
  try {
    return field.from_rational(c);
  } catch (const std::domain_error&) {
    throw PreconditionError("law coefficient " + c.str() + " is not defined over " + field.name());
  }
}

}  // namespace

Variety naalg() { return {"NAAlg", {}, false, false}; }
Variety vect() { return from_strings("Vect", {"[x1,x2]"}, true, false); }
Variety leib() { return from_strings("Leib", {"[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]"}, true, false); }
Variety lie() {
  return from_strings("Lie", {"[x1,x2] + [x2,x1]", "[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]"}, true, true);
}

Variety parse_variety(std::string_view spec) {
  if (spec == "NAAlg") return naalg();
  if (spec == "Vect") return vect();
  if (spec == "Leib") return leib();
  if (spec == "Lie") return lie();
  if (spec.find_first_of("[0123456789") == std::string_view::npos) {
    throw InputError("unknown variety '" + std::string(spec) + "' (expected NAAlg, Vect, Leib, Lie or laws)");
  }
  Variety v{std::string(spec), {}, false, false};
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(';', start), spec.size());
    const std::string_view piece = spec.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        v.laws.push_back(parse_law(piece));
      } catch (const ParseError& e) {
        throw ParseError("in law '" + std::string(piece) + "': " + e.reason(), start + e.position());
      }
    }
    start = end + 1;
  }
  if (v.laws.empty()) throw InputError("unknown variety '" + std::string(spec) + "'");
  return v;
}

void check_field_supported(const Variety& v, const Field& field) {
  require(!(v.needs_char_not_2 && field.characteristic() == 2),
          v.name + " is only supported in characteristic other than 2");
}

RowVector evaluate(const Algebra& a, const LawTerm& term, std::span<const Index> assignment) {
  if (term.is_leaf()) return a.basis_vector(assignment[static_cast<std::size_t>(term.variable - 1)]);
  return bracket(a, evaluate(a, term.left(), assignment), evaluate(a, term.right(), assignment));
}

RowVector evaluate(const Algebra& a, const Law& law, std::span<const Index> assignment) {
  RowVector sum = a.zero_vector();
  for (const auto& [c, t] : law.terms) sum += coefficient_in(a.field(), c) * evaluate(a, t, assignment);
  return normalized(sum, a.field());
}

bool satisfies(const Algebra& a, const Variety& v) {
  for (const Law& law : v.laws) {
    bool ok = true;
    for_each_basis_tuple(a.dim(), law.degree, [&](std::span<const Index> idx) {
      if (ok && !is_zero_vector(evaluate(a, law, idx))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Subspace law_values(const Algebra& a, const Variety& v) {
  SpanBuilder span(a.dim());
  for (const Law& law : v.laws) {
    for_each_basis_tuple(a.dim(), law.degree, [&](std::span<const Index> idx) { span.add(evaluate(a, law, idx)); });
  }
  return span.result();
}

IdealWitness verbal_subobject(const Algebra& a, const Variety& v) {
  check_field_supported(v, a.field());
  return ideal_generated(a, law_values(a, v));
}

Reflection reflect(const Algebra& a, const Variety& v) {
  QuotientAlgebra q = quotient_algebra(a, verbal_subobject(a, v));
  ensure(satisfies(q.algebra, v), "reflection does not satisfy " + v.name);
  return {q.algebra, q.proj, q.section};
}

LinearMap reflect_map(const LinearMap& f, const Variety& v) {
  const LinearMap g = f.morphism_certified() ? f : f.certified();
  const Reflection rb = reflect(g.domain(), v);
  const Reflection ra = reflect(g.codomain(), v);
  const Matrix m = rb.section * g.matrix() * ra.unit.matrix();
  return expect_morphism(LinearMap(rb.algebra, ra.algebra, m), "reflected morphism");
}

bool contains_abelian(const Variety& v) {
  return satisfies(Algebra::abelian(Field::rationals(), 1), v);
}

bool is_abelian_variety(const Variety& v) {
  // Degree-2 laws a[x1,x2] + b[x2,x1] together with their swaps must span both coordinates.
  std::vector<RowVector> rows;
  const Field q = Field::rationals();
  for (const Law& law : v.laws) {
    if (law.degree == 1) return true;
    if (law.degree != 2) continue;
    Rational ab[2] = {0, 0};
    for (const auto& [c, t] : law.terms) ab[t.left().variable == 1 ? 0 : 1] += c;
    RowVector r(2), s(2);
    r << Scalar(ab[0]), Scalar(ab[1]);
    s << Scalar(ab[1]), Scalar(ab[0]);
    rows.push_back(r);
    rows.push_back(s);
  }
  if (rows.empty()) return false;
  Matrix m(static_cast<Index>(rows.size()), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i];
  return rank(normalized(m, q)) == 2;
}

}  // namespace centext
