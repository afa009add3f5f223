#include "centext/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace centext {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t big_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

FieldScalar Field::zero() const { return p_ ? FieldScalar::residue(0, p_) : FieldScalar(0); }
FieldScalar Field::one() const { return p_ ? FieldScalar::residue(1, p_) : FieldScalar(1); }

FieldScalar Field::from_int(long long v) const { return coerce(FieldScalar(v)); }

FieldScalar Field::from_rational(const Rational& q) const { return coerce(FieldScalar(q)); }

FieldScalar Field::coerce(const FieldScalar& s) const {
  if (p_ == 0) {
    if (s.is_residue()) throw std::domain_error("residue cannot be coerced into Q");
    return s;
  }
  if (s.is_residue()) {
    if (s.modulus() != p_) throw std::domain_error("residue modulus mismatch");
    return s;
  }
  return s.reduced_mod(p_);
}

FieldScalar Field::parse(std::string_view text) const {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto to_big = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  }
  BigInt d = to_big(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return coerce(FieldScalar(Rational(to_big(num), d)));
}

FieldScalar FieldScalar::residue(std::uint64_t value, std::uint64_t p) {
  FieldScalar s;
  s.p_ = p;
  s.r_ = value % p;
  return s;
}

FieldScalar FieldScalar::reduced_mod(std::uint64_t p) const {
  if (p_) {
    if (p_ != p) throw std::domain_error("residue modulus mismatch");
    return *this;
  }
  std::uint64_t den = big_mod(boost::multiprecision::denominator(q_), p);
  if (den == 0) throw std::domain_error("denominator of " + to_string() + " vanishes mod " + std::to_string(p));
  std::uint64_t num = big_mod(boost::multiprecision::numerator(q_), p);
  return residue(mul_mod(num, pow_mod(den, p - 2, p), p), p);
}

void FieldScalar::unify(FieldScalar& a, FieldScalar& b) {
  if (a.p_ == b.p_) return;
  if (a.p_ && b.p_) throw std::domain_error("arithmetic between different prime fields");
  if (a.p_) {
    b = b.reduced_mod(a.p_);
  } else {
    a = a.reduced_mod(b.p_);
  }
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) return residue(pow_mod(r_, p_ - 2, p_), p_);
  return FieldScalar(Rational(1) / q_);
}

const Rational& FieldScalar::rational_one() {
  static const Rational one(1);
  return one;
}

FieldScalar FieldScalar::operator-() const {
  if (p_) return residue(r_ == 0 ? 0 : p_ - r_, p_);
  return FieldScalar(Rational(-q_));
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % p_);
    } else if (!o.q_.is_zero()) {
      if (q_.is_zero()) {
        q_ = o.q_;
      } else {
        q_ += o.q_;
      }
    }
    return *this;
  }
  FieldScalar b = o;
  unify(*this, b);
  return *this += b;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  if (o.is_zero()) return *this;
  return *this += -o;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ = mul_mod(r_, o.r_, p_);
    } else if (q_.is_zero() || o.q_.is_zero()) {
      q_ = 0;
    } else if (!o.is_one()) {
      q_ *= o.q_;
    }
    return *this;
  }
  FieldScalar b = o;
  unify(*this, b);
  return *this *= b;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  FieldScalar b = o;
  unify(*this, b);
  return *this *= b.inverse();
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  FieldScalar x = a;
  FieldScalar y = b;
  try {
    FieldScalar::unify(x, y);
  } catch (const std::domain_error&) {
    return false;
  }
  return x.r_ == y.r_;
}

std::string FieldScalar::to_string() const {
  if (p_) return std::to_string(r_);
  return q_.str();
}

}  // namespace centext
