#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace centext {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldScalar;

/// Ground field descriptor: the rationals, or the prime field F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  FieldScalar zero() const;
  FieldScalar one() const;
  FieldScalar from_int(long long v) const;
  FieldScalar from_rational(const Rational& q) const;
  /// Parses "3", "-2/7"; over F_p the value is reduced mod p.
  FieldScalar parse(std::string_view text) const;
  /// Brings a scalar into this field (rationals are reduced mod p).
  FieldScalar coerce(const FieldScalar& s) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact scalar: a reduced fraction, or a residue class mod a prime.
///
/// Untagged integer constants (what Eigen produces for Zero()/Identity())
/// are stored as rationals and adopt the modulus of whatever residue they
/// meet in arithmetic. Two residues with different moduli never mix.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(int v) : q_(v) {}  // NOLINT: Eigen needs implicit Scalar(0)/Scalar(1)
  FieldScalar(long long v) : q_(v) {}
  explicit FieldScalar(Rational q) : q_(std::move(q)) {}

  static FieldScalar residue(std::uint64_t value, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool is_residue() const { return p_ != 0; }
  const Rational& rational() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  bool is_zero() const { return p_ ? r_ == 0 : q_.is_zero(); }
  bool is_one() const { return p_ ? r_ == 1 : q_ == rational_one(); }

  /// Throws std::domain_error on zero.
  FieldScalar inverse() const;
  /// Reduces a rational mod p; throws std::domain_error if p divides the denominator.
  FieldScalar reduced_mod(std::uint64_t p) const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);
  friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

  /// "2/3", "-4" for rationals; the representative in [0, p) for residues.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldScalar& s) {
    return os << s.to_string();
  }

 private:
  static const Rational& rational_one();

  // Brings a and b to a common representation (both rational or both mod p).
  static void unify(FieldScalar& a, FieldScalar& b);

  Rational q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const FieldScalar& s) { return s.is_zero(); }
inline FieldScalar inverse(const FieldScalar& s) { return s.inverse(); }

}  // namespace centext

namespace Eigen {

template <>
struct NumTraits<centext::FieldScalar> : GenericNumTraits<centext::FieldScalar> {
  using Real = centext::FieldScalar;
  using NonInteger = centext::FieldScalar;
  using Literal = centext::FieldScalar;
  using Nested = centext::FieldScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
