#include "gmlab/scalar.hpp"

#include <algorithm>

namespace gmlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t q) {
  if (!is_prime(q)) throw ParseError("field modulus " + std::to_string(q) + " is not prime");
  if (q == 2) throw ParseError("characteristic 2 is not supported");
  if (q >= (1ull << 31)) throw ParseError("field modulus too large");
  FieldSpec f;
  f.kind = FieldKind::PrimeField;
  f.modulus = q;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("F:", 0) == 0) {
    const std::string body = text.substr(2);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field spec '" + text + "'");
    return prime_field(std::stoull(body));
  }
  throw ParseError("bad field spec '" + text + "' (expected Q or F:<q>)");
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "Q" : "F:" + std::to_string(modulus);
}

namespace {

std::uint64_t mod_reduce(long long v, std::uint64_t q) {
  long long m = v % static_cast<long long>(q);
  if (m < 0) m += static_cast<long long>(q);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
  // Extended Euclid on (a, q); q prime, a != 0 mod q.
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(q), new_r = static_cast<long long>(a % q);
  while (new_r != 0) {
    const long long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw MathError("element not invertible mod " + std::to_string(q));
  if (t < 0) t += static_cast<long long>(q);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(1, f); }

Scalar Scalar::of_int(long long v, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals)
    s.rat_ = v;
  else
    s.res_ = mod_reduce(v, f.modulus);
  return s;
}

Scalar Scalar::ratio(long long num, long long den, const FieldSpec& f) {
  if (den == 0) throw MathError("zero denominator");
  return of_int(num, f) / of_int(den, f);
}

Scalar Scalar::of_rational(const Rational& r, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals) {
    s.rat_ = r;
    return s;
  }
  const BigInt q(f.modulus);
  const BigInt num_red = ((numerator(r) % q) + q) % q;
  const BigInt den_red = ((denominator(r) % q) + q) % q;
  if (den_red == 0) throw MathError("denominator divisible by field characteristic");
  const std::uint64_t num = num_red.convert_to<std::uint64_t>();
  const std::uint64_t den = den_red.convert_to<std::uint64_t>();
  s.res_ = (num * mod_inverse(den, f.modulus)) % f.modulus;
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw MathError("scalar arithmetic across distinct fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = -rat_;
  else if (res_ != 0)
    s.res_ = field_.modulus - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = (res_ + o.res_) % field_.modulus;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = (res_ * o.res_) % field_.modulus;  // modulus < 2^31, no overflow
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  Scalar s = *this;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = Rational(1) / rat_;
  else
    s.res_ = mod_inverse(res_, field_.modulus);
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (field_ != o.field_) {
    if (field_.kind != o.field_.kind) return field_.kind < o.field_.kind;
    return field_.modulus < o.field_.modulus;
  }
  return field_.kind == FieldKind::Rationals ? rat_ < o.rat_ : res_ < o.res_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldKind::PrimeField) return std::to_string(res_);
  const BigInt num = numerator(rat_);
  const BigInt den = denominator(rat_);
  std::string out = num.str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::uint64_t Scalar::residue() const {
  if (field_.kind != FieldKind::PrimeField) throw MathError("residue() outside a prime field");
  return res_;
}

const Rational& Scalar::rational() const {
  if (field_.kind != FieldKind::Rationals) throw MathError("rational() outside Q");
  return rat_;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t num_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_start) throw ParseError("bad scalar '" + text + "'");
  BigInt num(text.substr(num_start, pos - num_start));
  BigInt den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("bad scalar '" + text + "'");
    const std::size_t den_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) throw ParseError("bad scalar '" + text + "'");
    den = BigInt(text.substr(den_start));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  }
  if (negative) num = -num;
  try {
    return Scalar::of_rational(Rational(num, den), field);
  } catch (const MathError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

bool good_characteristic(int p, const Scalar& eta) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw MathError("p must be an odd prime");
  const FieldSpec& f = eta.field();
  const Scalar one = Scalar::one(f);
  const std::vector<Scalar> values = {
      one, eta * Scalar::of_int(p - 2, f) + one, one - eta, eta - one};
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) return false;
  return true;
}

std::pair<Scalar, Scalar> lambda_params(int p, const Scalar& eta) {
  const FieldSpec& f = eta.field();
  const Scalar one = Scalar::one(f);
  return {eta * Scalar::of_int(p - 2, f) + one, one - eta};
}

std::vector<Scalar> roots_of_minus_one(const FieldSpec& field, long long k) {
  if (k < 1) throw MathError("k must be positive");
  std::vector<Scalar> roots;
  const Scalar minus_one = -Scalar::one(field);
  if (field.kind == FieldKind::Rationals) {
    for (long long c : {-1, 1}) {
      const Scalar d = Scalar::of_int(c, field);
      if (d.pow(k) == minus_one) roots.push_back(d);
    }
  } else {
    for (std::uint64_t v = 0; v < field.modulus; ++v) {
      const Scalar d = Scalar::of_int(static_cast<long long>(v), field);
      if (d.pow(k) == minus_one) roots.push_back(d);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace gmlab
