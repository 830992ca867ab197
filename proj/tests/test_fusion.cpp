#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmlab/fusion.hpp"

using namespace gmlab;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

GMAlgebra make(const std::string& model, const char* eta) {
  return build_algebra(construct_model(model), kQ, parse_scalar(eta, kQ));
}

std::vector<Scalar> cell_values(const FusionLaw& law, const Scalar& mu, const Scalar& nu) {
  const auto find = [&](const Scalar& v) {
    for (std::size_t i = 0; i < law.values.size(); ++i)
      if (law.values[i] == v) return static_cast<int>(i);
    return -1;
  };
  const int i = find(mu), j = find(nu);
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  std::vector<Scalar> out;
  for (int idx : law.cell(i, j)) out.push_back(law.values[idx]);
  return out;
}

}  // namespace

TEST_CASE("law tables") {
  const Scalar alpha = parse_scalar("4/3", kQ), beta = parse_scalar("-4/3", kQ);
  const Scalar one = Scalar::one(kQ), zero = Scalar::zero(kQ);
  const FusionLaw m = monster_law(alpha, beta);
  CHECK(m.name == "M(4/3,-4/3)");
  CHECK(cell_values(m, alpha, beta) == std::vector<Scalar>{beta});
  CHECK(cell_values(m, one, zero).empty());
  CHECK(cell_values(m, zero, zero) == std::vector<Scalar>{zero});
  CHECK(cell_values(m, alpha, alpha) == std::vector<Scalar>{one, zero});
  CHECK(cell_values(m, beta, beta) == std::vector<Scalar>{one, zero, alpha});

  const FusionLaw gm = generalized_monster_law(alpha, beta);
  CHECK(cell_values(gm, zero, zero) == std::vector<Scalar>{one, zero});
  CHECK(cell_values(gm, alpha, alpha) == std::vector<Scalar>{one, zero, alpha});

  CHECK_THROWS_AS(monster_law(alpha, alpha), MathError);
  CHECK_THROWS_AS(generalized_monster_law(one, beta), MathError);
}

TEST_CASE("custom laws") {
  const Scalar alpha = parse_scalar("4/3", kQ), beta = parse_scalar("-4/3", kQ);
  const FusionLaw m = monster_law(alpha, beta);
  const FusionLaw rebuilt = custom_law(m.values, m.table, "rebuilt");
  CHECK(rebuilt.table == m.table);

  const GMAlgebra alg = make("dihedral:5", "-1/3");
  CHECK(verify_axis(alg, 0, rebuilt, Side::Left).pass);

  CHECK_THROWS_AS(custom_law({alpha, alpha}, {{{0}, {1}}, {{1}, {0}}}, "dup"), MathError);
  CHECK_THROWS_AS(custom_law({alpha, beta}, {{{0}}}, "ragged"), MathError);
  CHECK_THROWS_AS(custom_law({alpha, beta}, {{{0}, {5}}, {{1}, {0}}}, "range"), MathError);
}

TEST_CASE("Monster law verification at p = 5") {
  const GMAlgebra alg = make("dihedral:5", "-1/3");
  const FusionLaw law = monster_law(parse_scalar("4/3", kQ), parse_scalar("-4/3", kQ));
  for (int axis = 0; axis < 5; ++axis) {
    const FusionReport report = verify_axis(alg, axis, law, Side::Left);
    CHECK(report.semisimple);
    CHECK(report.pass);
    CHECK(report.violations.empty());
    CHECK(report.uncovered.empty());
  }
}

TEST_CASE("p = 7 passes the generalized law and fails the Monster law in alpha*alpha") {
  const GMAlgebra alg = make("dihedral:7", "-1/5");
  const Scalar alpha = parse_scalar("6/5", kQ);
  CHECK(verify_axis(alg, 0, generalized_monster_law(alpha, -alpha), Side::Left).pass);

  const FusionReport report = verify_axis(alg, 0, monster_law(alpha, -alpha), Side::Left);
  CHECK_FALSE(report.pass);
  REQUIRE_FALSE(report.violations.empty());
  for (const auto& v : report.violations) {
    CHECK(v.mu == alpha);
    CHECK(v.nu == alpha);
    CHECK(v.offending == alpha);
  }
}

TEST_CASE("uncovered spectrum values fail the axis property") {
  const GMAlgebra alg = make("dihedral:5", "1/2");  // lambda1 = 5/2 here
  const auto [lambda1, lambda2] = lambda_params(5, alg.eta);
  const FusionLaw law = monster_law(lambda2, -lambda2);
  const FusionReport report = verify_axis(alg, 0, law, Side::Left);
  CHECK_FALSE(report.pass);
  REQUIRE(report.uncovered.size() == 1);
  CHECK(report.uncovered[0] == lambda1);
}

TEST_CASE("inferred laws are minimal and self-consistent") {
  {
    const GMAlgebra alg = make("dihedral:5", "-1/3");
    const FusionLaw inferred = infer_law(alg, 0, Side::Left);
    // Contained cellwise in M(4/3,-4/3); the (1,1) cell is exactly {1}.
    const FusionLaw m = monster_law(parse_scalar("4/3", kQ), parse_scalar("-4/3", kQ));
    REQUIRE(inferred.values == m.values);
    for (std::size_t i = 0; i < inferred.values.size(); ++i)
      for (std::size_t j = 0; j < inferred.values.size(); ++j)
        for (int idx : inferred.cell(i, j))
          CHECK(std::find(m.cell(i, j).begin(), m.cell(i, j).end(), idx) !=
                m.cell(i, j).end());
    CHECK(cell_values(inferred, Scalar::one(kQ), Scalar::one(kQ)) ==
          std::vector<Scalar>{Scalar::one(kQ)});
    CHECK(verify_axis(alg, 0, inferred, Side::Left).pass);
  }
  {
    const GMAlgebra alg = make("dihedral:7", "-1/5");
    const FusionLaw inferred = infer_law(alg, 0, Side::Left);
    const Scalar alpha = parse_scalar("6/5", kQ);
    const auto aa = cell_values(inferred, alpha, alpha);
    CHECK(std::find(aa.begin(), aa.end(), alpha) != aa.end());
    CHECK(verify_axis(alg, 0, inferred, Side::Left).pass);
  }
}

TEST_CASE("inferred left laws carry the ({1, l1, l2}, {-l2}) grading") {
  for (const char* model : {"dihedral:5", "dihedral:7", "frobenius:3,2"}) {
    const TranspositionSystem sys = construct_model(model);
    const GMAlgebra alg = build_algebra(sys, kQ, Scalar::ratio(-1, sys.p - 2, kQ));
    const auto [lambda1, lambda2] = lambda_params(sys.p, alg.eta);
    const FusionLaw law = infer_law(alg, 0, Side::Left);
    auto sign_of = [&](const Scalar& v) { return v == -lambda2 ? -1 : +1; };
    for (std::size_t i = 0; i < law.values.size(); ++i)
      for (std::size_t j = 0; j < law.values.size(); ++j) {
        const int expected = sign_of(law.values[i]) * sign_of(law.values[j]);
        for (int idx : law.cell(i, j)) CHECK(sign_of(law.values[idx]) == expected);
      }
  }
}

TEST_CASE("non-semisimple sides are reported, not verified") {
  const GMAlgebra alg = make("dihedral:5", "-1/3");
  const FusionReport report = verify_axis(
      alg, 0, monster_law(parse_scalar("4/3", kQ), parse_scalar("-4/3", kQ)), Side::Right);
  CHECK_FALSE(report.semisimple);
  CHECK_FALSE(report.pass);
  CHECK_THROWS_AS(infer_law(alg, 0, Side::Right), MathError);
}

TEST_CASE("tau conjugation identity") {
  for (const char* model : {"dihedral:5", "frobenius:3,2"}) {
    const TranspositionSystem sys = construct_model(model);
    const GMAlgebra alg = build_algebra(sys, kQ, Scalar::ratio(-1, sys.p - 2, kQ));
    const MiyamotoResult miy = miyamoto_group(alg);
    for (int a = 0; a < sys.n; ++a)
      for (int b = 0; b < sys.n; ++b) {
        // tau_{b^a} = tau_a tau_b tau_a as permutations.
        const Permutation lhs = miy.taus[sys.conj[b][a]];
        const Permutation rhs =
            compose(miy.taus[a], compose(miy.taus[b], miy.taus[a]));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("Miyamoto group equals the conjugation image") {
  const GMAlgebra alg = make("dihedral:5", "-1/3");
  const MiyamotoResult miy = miyamoto_group(alg);
  CHECK(miy.complete);
  CHECK(miy.order == 10);
  CHECK(miy.conjugation_order == 10);
  CHECK(miy.matches_conjugation);
  const MiyamotoResult capped = miyamoto_group(alg, 4);
  CHECK_FALSE(capped.complete);
}

TEST_CASE("bounded eta scan finds no Monster law at p = 7") {
  const auto entries = monster_eta_scan(construct_model("dihedral:7"), 5);
  CHECK_FALSE(entries.empty());
  int structurally_possible = 0;
  for (const auto& e : entries) {
    CHECK_FALSE(e.passes);
    structurally_possible += e.structurally_possible ? 1 : 0;
    if (e.structurally_possible) CHECK(e.eta == parse_scalar("-1/5", kQ));
  }
  CHECK(structurally_possible == 1);
}
