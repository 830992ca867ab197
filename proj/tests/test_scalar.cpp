#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmlab/scalar.hpp"

using namespace gmlab;

namespace {

// Independent oracle: modular inverse by brute-force scan.
std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t q) {
  for (std::uint64_t x = 1; x < q; ++x)
    if ((a * x) % q == 1) return x;
  FAIL("no inverse found");
  return 0;
}

}  // namespace

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("F:13").modulus == 13);
  CHECK(FieldSpec::parse("F:13").str() == "F:13");
  CHECK_THROWS_AS(FieldSpec::parse("F:4"), ParseError);   // not prime
  CHECK_THROWS_AS(FieldSpec::parse("F:2"), ParseError);   // characteristic 2
  CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("F:"), ParseError);
}

TEST_CASE("rational parsing and canonical form") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(parse_scalar("-1/3", q).str() == "-1/3");
  CHECK(parse_scalar("2/4", q).str() == "1/2");
  CHECK(parse_scalar("+7", q).str() == "7");
  CHECK(parse_scalar("0/5", q).is_zero());
  CHECK(parse_scalar("-0", q).str() == "0");
  CHECK_THROWS_AS(parse_scalar("", q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/-3", q), ParseError);  // sign only leads
  CHECK_THROWS_AS(parse_scalar("a/3", q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5", q), ParseError);
}

TEST_CASE("prime field parsing resolves fractions by modular inverse") {
  const FieldSpec f13 = FieldSpec::prime_field(13);
  // Oracle: 3^{-1} = 9 by scan, so -1/3 = -9 = 4 (mod 13).
  CHECK(brute_inverse(3, 13) == 9);
  CHECK(parse_scalar("-1/3", f13) == Scalar::of_int(4, f13));
  CHECK(parse_scalar("-1/3", f13).str() == "4");
  CHECK(parse_scalar("26", f13).is_zero());
  CHECK_THROWS_AS(parse_scalar("1/13", f13), ParseError);  // denominator = 0 mod 13
  CHECK_THROWS_AS(parse_scalar("5/26", f13), ParseError);
}

TEST_CASE("round trip: parse(print(x)) = x") {
  std::mt19937 rng(7);
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f13 = FieldSpec::prime_field(13);
  for (int trial = 0; trial < 200; ++trial) {
    const long long num = static_cast<long long>(rng() % 2001) - 1000;
    const long long den = static_cast<long long>(rng() % 999) + 1;
    const Scalar x = Scalar::ratio(num, den, q);
    CHECK(parse_scalar(x.str(), q) == x);
    if (num % 13 != 0 || den % 13 != 0) {
      const Scalar y = Scalar::ratio(num, den % 13 == 0 ? den + 1 : den, f13);
      CHECK(parse_scalar(y.str(), f13) == y);
    }
  }
}

TEST_CASE("exact arithmetic") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar a = parse_scalar("-1/3", q);
  const Scalar b = parse_scalar("5/6", q);
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-5/18");
  CHECK((a - b).str() == "-7/6");
  CHECK((a / b).str() == "-2/5");
  CHECK(a.pow(3).str() == "-1/27");
  CHECK(a.pow(-2).str() == "9");
  CHECK_THROWS_AS(a / Scalar::zero(q), MathError);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), MathError);

  const FieldSpec f13 = FieldSpec::prime_field(13);
  const Scalar u = Scalar::of_int(7, f13);
  CHECK((u * u.inverse()).is_one());
  CHECK((u.pow(12)).is_one());  // Fermat
  CHECK_THROWS_AS(a + u, MathError);  // cross-field arithmetic
}

TEST_CASE("good characteristic") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(good_characteristic(5, parse_scalar("-1/3", q)));
  CHECK_FALSE(good_characteristic(5, Scalar::zero(q)));          // 1 = 1-eta
  CHECK_FALSE(good_characteristic(5, Scalar::of_int(2, q)));     // 1 = eta-1
  CHECK(good_characteristic(5, parse_scalar("1/2", q)));
  // Over F13, eta = 4 = -1/3 keeps 1, 0, 10, 3 distinct.
  const FieldSpec f13 = FieldSpec::prime_field(13);
  CHECK(good_characteristic(5, Scalar::of_int(4, f13)));
  CHECK_THROWS_AS(good_characteristic(4, Scalar::zero(q)), MathError);
}

TEST_CASE("lambda parameters") {
  const FieldSpec q = FieldSpec::rationals();
  auto check_pair = [&](int p, const char* eta, const char* l1, const char* l2) {
    const auto [lambda1, lambda2] = lambda_params(p, parse_scalar(eta, q));
    CHECK(lambda1 == parse_scalar(l1, q));
    CHECK(lambda2 == parse_scalar(l2, q));
  };
  check_pair(5, "-1/3", "0", "4/3");
  check_pair(7, "-1/5", "0", "6/5");
  check_pair(3, "-1", "0", "2");
  check_pair(5, "1/2", "5/2", "1/2");
}

TEST_CASE("roots of minus one") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(roots_of_minus_one(q, 2).empty());
  CHECK(roots_of_minus_one(q, 1) == std::vector<Scalar>{Scalar::of_int(-1, q)});
  CHECK(roots_of_minus_one(q, 3) == std::vector<Scalar>{Scalar::of_int(-1, q)});

  const FieldSpec f13 = FieldSpec::prime_field(13);
  const auto roots = roots_of_minus_one(f13, 2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Scalar::of_int(5, f13));
  CHECK(roots[1] == Scalar::of_int(8, f13));
  // Oracle: exhaustive recount.
  int count = 0;
  for (int d = 0; d < 13; ++d)
    if ((d * d) % 13 == 12) ++count;
  CHECK(count == 2);
  for (const Scalar& d : roots) CHECK(d * d == Scalar::of_int(-1, f13));
}
