#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gmlab/algebra.hpp"

using namespace gmlab;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

GMAlgebra dihedral5_third() {
  return build_algebra(construct_model("dihedral:5"), kQ, parse_scalar("-1/3", kQ));
}

Scalar coefficient(const ExactVector& v, int k) { return v[k]; }

}  // namespace

TEST_CASE("structure constants follow the defining rule") {
  const GMAlgebra alg = dihedral5_third();
  const Scalar eta = alg.eta;
  // e0 * e1 = e4 + eta (e0 + e1 + e2 + e3), since conj(1,0) = 4.
  const ExactVector prod =
      multiply(alg, unit_vector(kQ, 5, 0), unit_vector(kQ, 5, 1));
  CHECK(coefficient(prod, 4).is_one());
  for (int k = 0; k < 4; ++k) CHECK(coefficient(prod, k) == eta);

  for (int i = 0; i < 5; ++i) {
    const ExactVector sq =
        multiply(alg, unit_vector(kQ, 5, i), unit_vector(kQ, 5, i));
    CHECK(sq == unit_vector(kQ, 5, i));
  }
}

TEST_CASE("support law on a block model") {
  const GMAlgebra alg =
      build_algebra(construct_model("frobenius:5,2"), kQ, parse_scalar("-1/3", kQ));
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      if (i == j) continue;
      const auto& prod = alg.products[i][j];
      CHECK(prod.size() == 5);
      const auto seq = dihedral_set(alg.sys, i, j);
      const std::set<int> expected(seq.begin(), seq.end());
      int units = 0;
      for (const auto& [k, coeff] : prod) {
        CHECK(expected.count(k) == 1);
        if (coeff.is_one() && k == alg.sys.conj[j][i])
          ++units;
        else
          CHECK(coeff == alg.eta);
      }
      CHECK(units == 1);
    }
}

TEST_CASE("eta restrictions and characteristic gate") {
  const TranspositionSystem sys = construct_model("dihedral:5");
  CHECK_THROWS_AS(build_algebra(sys, kQ, Scalar::zero(kQ)), MathError);
  CHECK_THROWS_AS(build_algebra(sys, kQ, Scalar::one(kQ)), MathError);
  // eta = 2 collides 1 with eta-1 over Q.
  CHECK_THROWS_AS(build_algebra(sys, kQ, Scalar::of_int(2, kQ)), MathError);
  CHECK_NOTHROW(build_algebra(sys, kQ, Scalar::of_int(2, kQ), /*force=*/true));
  CHECK_NOTHROW(build_algebra(sys, kQ, parse_scalar("1/2", kQ)));
}

TEST_CASE("gamma products and the unit at eta = -1/(p-2)") {
  const GMAlgebra alg = dihedral5_third();
  ExactVector gamma = zero_vector(kQ, 5);
  for (int i = 0; i < 5; ++i) gamma[i] = Scalar::one(kQ);

  // gamma * gamma = (eta (p-1)^2 + p) gamma = -(1/3) gamma here.
  CHECK(multiply(alg, gamma, gamma) == scale(parse_scalar("-1/3", kQ), gamma));

  // a_i * gamma = gamma * a_i = (eta(p-2)+1) gamma + eta a_i, with the first
  // coefficient vanishing at this eta.
  for (int i = 0; i < 5; ++i) {
    const ExactVector e = unit_vector(kQ, 5, i);
    CHECK(multiply(alg, e, gamma) == scale(alg.eta, e));
    CHECK(multiply(alg, gamma, e) == scale(alg.eta, e));
  }

  // (2-p) gamma is the two-sided unit.
  const ExactVector unit = scale(Scalar::of_int(-3, kQ), gamma);
  for (int i = 0; i < 5; ++i) {
    const ExactVector e = unit_vector(kQ, 5, i);
    CHECK(multiply(alg, unit, e) == e);
    CHECK(multiply(alg, e, unit) == e);
  }
}

TEST_CASE("multiplication matrices match the classical display") {
  const GMAlgebra alg = dihedral5_third();
  const Scalar e = alg.eta;
  const Scalar one = Scalar::one(kQ), zero = Scalar::zero(kQ);
  const std::vector<ExactVector> display = {
      {one, zero, zero, zero, zero},
      {e, e, e, e, one},
      {e, e, e, one, e},
      {e, e, one, e, e},
      {e, one, e, e, e},
  };
  CHECK(mult_matrix(alg, 0, Side::Left) == ExactMatrix::from_rows(kQ, display));
  CHECK(mult_matrix(alg, 0, Side::Left).row(0) == display[0]);
  CHECK_FALSE(mult_matrix(alg, 0, Side::Right) == mult_matrix(alg, 0, Side::Left));

  // Operator form agrees with direct products.
  const ExactMatrix op = operator_matrix(alg, 0, Side::Left);
  for (int j = 0; j < 5; ++j)
    CHECK(op.apply(unit_vector(kQ, 5, j)) ==
          multiply(alg, unit_vector(kQ, 5, 0), unit_vector(kQ, 5, j)));
}

TEST_CASE("commutativity exactly for p = 3") {
  const GMAlgebra p3 =
      build_algebra(construct_model("frobenius:3,2"), kQ, Scalar::of_int(-1, kQ));
  for (int i = 0; i < p3.dim(); ++i)
    for (int j = 0; j < p3.dim(); ++j)
      CHECK(multiply(p3, unit_vector(kQ, 9, i), unit_vector(kQ, 9, j)) ==
            multiply(p3, unit_vector(kQ, 9, j), unit_vector(kQ, 9, i)));

  const GMAlgebra p5 = dihedral5_third();
  CHECK_FALSE(multiply(p5, unit_vector(kQ, 5, 0), unit_vector(kQ, 5, 1)) ==
              multiply(p5, unit_vector(kQ, 5, 1), unit_vector(kQ, 5, 0)));
}

TEST_CASE("conjugation equivariance of the product") {
  const GMAlgebra alg =
      build_algebra(construct_model("frobenius:3,2"), kQ, Scalar::of_int(-1, kQ));
  const int n = alg.dim();
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const ExactVector prod =
            multiply(alg, unit_vector(kQ, n, i), unit_vector(kQ, n, j));
        ExactVector permuted = zero_vector(kQ, n);
        for (int k = 0; k < n; ++k) permuted[alg.sys.conj[k][a]] = prod[k];
        CHECK(permuted == multiply(alg, unit_vector(kQ, n, alg.sys.conj[i][a]),
                                   unit_vector(kQ, n, alg.sys.conj[j][a])));
      }
}

TEST_CASE("subalgebra closures") {
  const GMAlgebra alg =
      build_algebra(construct_model("frobenius:5,2"), kQ, parse_scalar("-1/3", kQ));
  const auto e = [&](int i) { return unit_vector(kQ, 25, i); };

  const ClosureResult single = subalgebra_closure(alg, {e(3)}, 25);
  CHECK(single.closed);
  CHECK(single.basis.size() == 1);  // an idempotent spans its own closure

  const ClosureResult pair = subalgebra_closure(alg, {e(0), e(1)}, 25);
  CHECK(pair.closed);
  CHECK(pair.basis.size() == 5);

  const ClosureResult capped = subalgebra_closure(alg, {e(0), e(1), e(5)}, 3);
  CHECK_FALSE(capped.closed);  // explicit partial result

  CHECK_THROWS_AS(subalgebra_closure(alg, {}, 25), std::invalid_argument);
  CHECK_THROWS_AS(subalgebra_closure(alg, {zero_vector(kQ, 25)}, 25),
                  std::invalid_argument);
}

TEST_CASE("right ideal closures reach the whole algebra") {
  const GMAlgebra alg = dihedral5_third();
  CHECK(right_ideal_closure(alg, unit_vector(kQ, 5, 0)).size() == 5);
  CHECK_THROWS_AS(right_ideal_closure(alg, zero_vector(kQ, 5)), std::invalid_argument);
}
