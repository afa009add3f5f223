#include <cctype>
#include <set>

#include "centext/varieties.hpp"

namespace centext {

namespace {

class LawParser {
 public:
  explicit LawParser(std::string_view src) : src_(src) {}

  Law parse() {
    Law law;
    skip_ws();
    if (at_end()) fail("empty law");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const std::size_t term_start = pos_;
      Rational coeff = parse_coefficient();
      LawTerm term = parse_expr();
      law.terms.emplace_back(coeff * sign, std::move(term));
      check_multilinear(law.terms.back().second, term_start, law);
      first = false;
      skip_ws();
    }
    bool any_nonzero = false;
    for (const auto& [c, t] : law.terms) any_nonzero = any_nonzero || c != 0;
    if (!any_nonzero) fail("law has no nonzero coefficient", 0);
    return law;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(src_.substr(start, pos_ - start)));
  }

  Rational parse_coefficient() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return Rational(1);
    BigInt num = parse_digits();
    BigInt den = 1;
    if (peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = parse_digits();
      if (den == 0) fail("zero denominator", at);
    }
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
    }
    return Rational(num, den);
  }

  LawTerm parse_expr() {
    skip_ws();
    if (peek() == 'x') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())) || peek() == '0') fail("expected variable index 1-9");
      int index = peek() - '0';
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("variable index must be a single digit 1-9");
      return LawTerm::var(index);
    }
    if (peek() == '[') {
      ++pos_;
      LawTerm l = parse_expr();
      expect(',');
      LawTerm r = parse_expr();
      expect(']');
      return LawTerm::bracket(std::move(l), std::move(r));
    }
    fail("expected variable or '['");
  }

  static void collect(const LawTerm& t, std::vector<int>& vars) {
    if (t.is_leaf()) {
      vars.push_back(t.variable);
      return;
    }
    collect(t.left(), vars);
    collect(t.right(), vars);
  }

  void check_multilinear(const LawTerm& term, std::size_t at, Law& law) const {
    std::vector<int> vars;
    collect(term, vars);
    std::set<int> distinct(vars.begin(), vars.end());
    if (distinct.size() != vars.size()) fail("term is not multilinear (repeated variable)", at);
    const int d = static_cast<int>(vars.size());
    if (*distinct.rbegin() != d) fail("variables of a term must be exactly x1..x" + std::to_string(d), at);
    if (law.degree == 0) {
      law.degree = d;
    } else if (law.degree != d) {
      fail("all terms of a law must have the same variables", at);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Law parse_law(std::string_view src) { return LawParser(src).parse(); }

}  // namespace centext
