#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmlab/forms.hpp"
#include "gmlab/spectral.hpp"

using namespace gmlab;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

GMAlgebra make(const std::string& model, const char* eta) {
  return build_algebra(construct_model(model), kQ, parse_scalar(eta, kQ));
}

}  // namespace

TEST_CASE("Gram data of dihedral:5 at eta = -1/3") {
  const GramData data = gram(make("dihedral:5", "-1/3"));
  CHECK(data.determinant == parse_scalar("-256/243", kQ));
  CHECK(data.radical_basis.empty());
  CHECK(data.matrix.at(0, 0).is_one());
  CHECK(data.matrix.at(0, 1) == parse_scalar("-1/3", kQ));
  CHECK(data.matrix.at(1, 0) == data.matrix.at(0, 1));
}

TEST_CASE("degenerate Gram at eta = -1/4, n = 5") {
  const GramData data = gram(make("dihedral:5", "-1/4"));
  CHECK(data.determinant.is_zero());
  REQUIRE(data.radical_basis.size() == 1);
  // The radical vector pairs to zero with everything.
  const GMAlgebra alg = make("dihedral:5", "-1/4");
  for (int i = 0; i < 5; ++i)
    CHECK(form_value(alg, data.radical_basis[0], unit_vector(kQ, 5, i)).is_zero());
}

TEST_CASE("determinant closed form across models and parameters") {
  for (const char* model : {"dihedral:3", "dihedral:7", "frobenius:3,2", "burnside23"}) {
    const TranspositionSystem sys = construct_model(model);
    for (const Scalar& eta : {Scalar::ratio(-1, sys.p - 2, kQ), parse_scalar("1/2", kQ)}) {
      const GMAlgebra alg = build_algebra(sys, kQ, eta);
      const GramData data = gram(alg);
      const Scalar expected = (Scalar::one(kQ) - eta).pow(sys.n - 1) *
                              (Scalar::one(kQ) + Scalar::of_int(sys.n - 1, kQ) * eta);
      CHECK(data.determinant == expected);
      CHECK(radical(alg).size() == (expected.is_zero() ? 1 : 0));
    }
  }
}

TEST_CASE("form symmetry") {
  const GMAlgebra alg = make("dihedral:7", "1/2");
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    ExactVector x(7, Scalar::zero(kQ)), y(7, Scalar::zero(kQ));
    for (int i = 0; i < 7; ++i) {
      x[i] = Scalar::of_int(static_cast<long long>(rng() % 7) - 3, kQ);
      y[i] = Scalar::of_int(static_cast<long long>(rng() % 7) - 3, kQ);
    }
    CHECK(form_value(alg, x, y) == form_value(alg, y, x));
  }
}

TEST_CASE("Frobenius defect is empty exactly at eta = -1/(p-2)") {
  for (const char* model : {"dihedral:5", "dihedral:7", "frobenius:3,2"}) {
    const TranspositionSystem sys = construct_model(model);
    const GMAlgebra at_special =
        build_algebra(sys, kQ, Scalar::ratio(-1, sys.p - 2, kQ));
    CHECK(frobenius_defect(at_special).empty());

    const GMAlgebra generic = build_algebra(sys, kQ, parse_scalar("1/2", kQ));
    const auto defects = frobenius_defect(generic);
    CHECK_FALSE(defects.empty());
    for (const auto& d : defects) CHECK(d.left_value != d.right_value);
  }
}

TEST_CASE("an explicit violating triple at eta = 1/2") {
  const GMAlgebra alg = make("dihedral:5", "1/2");
  // (a*b, a) = 2 eta + 3 eta^2 while (b, a*a) = eta; distinct unless
  // eta (eta(p-2)+1) = 0.
  const auto defects = frobenius_defect(alg);
  bool found = false;
  for (const auto& d : defects)
    if (d.a == 0 && d.b == 1 && d.c == 0) {
      found = true;
      CHECK(d.left_value == parse_scalar("7/4", kQ));
      CHECK(d.right_value == parse_scalar("1/2", kQ));
    }
  CHECK(found);
}

TEST_CASE("the form is tau-invariant at the Frobenius parameter") {
  const GMAlgebra alg = make("dihedral:5", "-1/3");
  const ExactMatrix tau = tau_matrix(alg, 2);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const ExactVector ti = tau.apply(unit_vector(kQ, 5, i));
      const ExactVector tj = tau.apply(unit_vector(kQ, 5, j));
      CHECK(form_value(alg, ti, tj) ==
            form_value(alg, unit_vector(kQ, 5, i), unit_vector(kQ, 5, j)));
    }
}
