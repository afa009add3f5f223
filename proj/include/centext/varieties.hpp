#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centext/algebra.hpp"
#include "centext/errors.hpp"

namespace centext {

/// A bracket expression in variables x1..x9: a leaf (variable > 0) or a
/// bracket of two subterms.
struct LawTerm {
  int variable = 0;
  std::vector<LawTerm> children;  // empty for leaves, two entries for brackets

  static LawTerm var(int index);
  static LawTerm bracket(LawTerm left, LawTerm right);

  bool is_leaf() const { return children.empty(); }
  const LawTerm& left() const { return children.at(0); }
  const LawTerm& right() const { return children.at(1); }
  int degree() const;
  std::string to_string() const;

  friend bool operator==(const LawTerm&, const LawTerm&) = default;
};

/// A multilinear identity sum_i c_i t_i = 0; every term uses each of x1..xd exactly once.
struct Law {
  int degree = 0;
  std::vector<std::pair<Rational, LawTerm>> terms;

  std::string to_string() const;
  friend bool operator==(const Law&, const Law&) = default;
};

/// Syntax or multilinearity error in a law string; `position` is a 0-based offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), reason_(what), position_(position) {}
  std::size_t position() const { return position_; }
  /// The message without the position suffix.
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

/// Grammar: law := ['+'|'-'] term (('+'|'-') term)*
///          term := [coefficient ['*']] expr,  coefficient := integer ['/' integer]
///          expr := 'x'[1-9] | '[' expr ',' expr ']'
Law parse_law(std::string_view src);

/// A Birkhoff subvariety of non-associative algebras given by multilinear laws.
struct Variety {
  std::string name;
  std::vector<Law> laws;
  /// Whether the variety, used as the ambient category, satisfies the
  /// composition condition on central extensions over perfect objects.
  /// Caller-asserted; there is no decision procedure.
  bool uce_condition = false;
  /// The multilinear form of the variety's laws is only equivalent to the
  /// intended one away from characteristic 2 (Lie).
  bool needs_char_not_2 = false;
};

Variety naalg();
Variety vect();
Variety leib();
Variety lie();

/// Built-in name (NAAlg, Vect, Leib, Lie) or ';'-separated laws in the DSL.
Variety parse_variety(std::string_view spec);

/// Throws PreconditionError for Lie-type varieties over characteristic 2.
void check_field_supported(const Variety& v, const Field& field);

/// Value of a term with x_k := e_{assignment[k-1]}.
RowVector evaluate(const Algebra& a, const LawTerm& term, std::span<const Index> assignment);
RowVector evaluate(const Algebra& a, const Law& law, std::span<const Index> assignment);

/// Calls fn(assignment) for every tuple of basis indices of length `degree`.
template <typename Fn>
void for_each_basis_tuple(Index dim, int degree, Fn&& fn) {
  if (dim == 0 && degree > 0) return;
  std::vector<Index> idx(static_cast<std::size_t>(degree), 0);
  while (true) {
    fn(std::span<const Index>(idx));
    int pos = 0;
    while (pos < degree && ++idx[pos] == dim) idx[pos++] = 0;
    if (pos == degree) return;
  }
}

bool satisfies(const Algebra& a, const Variety& v);

/// Span of all law values on basis tuples (before ideal closure).
Subspace law_values(const Algebra& a, const Variety& v);

/// [A, A]_V: the ideal generated by law values; the smallest ideal with quotient in V.
IdealWitness verbal_subobject(const Algebra& a, const Variety& v);

struct Reflection {
  Algebra algebra;  // I(A) = A / [A, A]_V
  LinearMap unit;   // eta_A: A -> I(A)
  Matrix section;
};

Reflection reflect(const Algebra& a, const Variety& v);

/// I(f): I(B) -> I(A) with I(f) o eta_B = eta_A o f.
LinearMap reflect_map(const LinearMap& f, const Variety& v);

/// True when every abelian algebra lies in v (no law of degree 1).
bool contains_abelian(const Variety& v);
/// True when v is the variety of abelian algebras (has the law [x1,x2] = 0 and no degree-1 law).
bool is_abelian_variety(const Variety& v);

}  // namespace centext
