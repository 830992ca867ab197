#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmlab {

/// Malformed textual input (bad model spec, bad scalar literal, bad JSON).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (bad characteristic, singular matrix,
/// non-semisimple operator where semisimplicity is required, ...).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Rationals, PrimeField };

/// The coefficient field: Q or F_q with q an odd prime.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;  // set iff kind == PrimeField

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint64_t q);

  /// Accepts "Q" or "F:<q>".
  static FieldSpec parse(const std::string& text);
  std::string str() const;

  bool operator==(const FieldSpec&) const = default;
};

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator over Q, or the least non-negative residue over F_q. Arithmetic
/// never approximates.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(long long v, const FieldSpec& f);
  /// num/den mapped into the field; den must be invertible there.
  static Scalar ratio(long long num, long long den, const FieldSpec& f);
  static Scalar of_rational(const Rational& r, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws MathError on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Canonical total order, used only for deterministic sorting.
  bool operator<(const Scalar& o) const;

  /// Canonical text: "-1/3", "7", "4".
  std::string str() const;

  /// Residue in [0, q); only valid over a prime field.
  std::uint64_t residue() const;
  /// Only valid over the rationals.
  const Rational& rational() const;

 private:
  FieldSpec field_ = FieldSpec::rationals();
  Rational rat_ = 0;       // used when field_.kind == Rationals
  std::uint64_t res_ = 0;  // used when field_.kind == PrimeField

  void check_same_field(const Scalar& o) const;
};

/// Parses "[-]int[/int]" into the given field. Over F_q the fraction is
/// resolved with a modular inverse; a denominator divisible by q is an error.
Scalar parse_scalar(const std::string& text, const FieldSpec& field);

bool is_prime(std::uint64_t n);

/// True iff 1, eta(p-2)+1, 1-eta, eta-1 are pairwise distinct in eta's field.
bool good_characteristic(int p, const Scalar& eta);

/// (eta(p-2)+1, 1-eta).
std::pair<Scalar, Scalar> lambda_params(int p, const Scalar& eta);

/// All d in the field with d^k = -1, in ascending canonical order. Over Q only
/// +-1 are candidates (a rational root of x^k = -1 is a rational root of an
/// integer monic polynomial, hence an integer dividing 1); over F_q the scan
/// is exhaustive.
std::vector<Scalar> roots_of_minus_one(const FieldSpec& field, long long k);

}  // namespace gmlab
