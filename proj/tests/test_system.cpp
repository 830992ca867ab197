#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>

#include "gmlab/io.hpp"
#include "gmlab/system.hpp"

using namespace gmlab;

TEST_CASE("dihedral model reflection arithmetic") {
  const TranspositionSystem sys = construct_model("dihedral:5");
  CHECK(sys.n == 5);
  CHECK(sys.p == 5);
  CHECK(sys.conj[0][1] == 2);  // (r^0 s)^(r^1 s) = r^2 s
  CHECK(sys.conj[1][0] == 4);
  CHECK(validate_system(sys).ok());
}

TEST_CASE("frobenius model") {
  const TranspositionSystem sys = construct_model("frobenius:5,2");
  CHECK(sys.n == 25);
  CHECK(sys.labels[0] == "(0,0)t");
  CHECK(sys.labels[1] == "(1,0)t");
  CHECK(sys.labels[5] == "(0,1)t");
  CHECK(validate_system(sys).ok());
}

TEST_CASE("burnside23 model: 27 involutions, conjugation image of order 54") {
  const TranspositionSystem sys = construct_model("burnside23");
  CHECK(sys.n == 27);
  CHECK(sys.p == 3);
  CHECK(validate_system(sys).ok());
  const ConjugationGroup group = conjugation_group(sys);
  CHECK(group.complete);
  CHECK(group.order == 54);
  const BlockPartition part = blocks(sys, 0);
  CHECK(part.blocks.size() == 13);
  for (const auto& block : part.blocks) CHECK(block.size() == 2);
}

TEST_CASE("model spec errors") {
  CHECK_THROWS_AS(construct_model("dihedral:4"), ParseError);   // not prime
  CHECK_THROWS_AS(construct_model("dihedral:2"), ParseError);
  CHECK_THROWS_AS(construct_model("frobenius:5"), ParseError);  // missing d
  CHECK_THROWS_AS(construct_model("frobenius:9,2"), ParseError);
  CHECK_THROWS_AS(construct_model("pentagon"), ParseError);
  CHECK_THROWS_AS(construct_model("dihedral:"), ParseError);
}

TEST_CASE("dihedral_set ordering and errors") {
  const TranspositionSystem sys = construct_model("dihedral:5");
  CHECK(dihedral_set(sys, 0, 1) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(dihedral_set(sys, 1, 0) == std::vector<int>{1, 0, 4, 3, 2});
  CHECK_THROWS_AS(dihedral_set(sys, 2, 2), std::invalid_argument);

  // Same set either way.
  const auto a = dihedral_set(sys, 2, 4);
  const auto b = dihedral_set(sys, 4, 2);
  CHECK(std::set<int>(a.begin(), a.end()) == std::set<int>(b.begin(), b.end()));
}

TEST_CASE("dihedral sets are conjugation closed") {
  for (const char* spec : {"dihedral:7", "frobenius:3,2"}) {
    const TranspositionSystem sys = construct_model(spec);
    for (int i = 0; i < sys.n; ++i)
      for (int j = 0; j < sys.n; ++j) {
        if (i == j) continue;
        const auto seq = dihedral_set(sys, i, j);
        const std::set<int> members(seq.begin(), seq.end());
        for (int x : seq)
          for (int y : seq) CHECK(members.count(sys.conj[x][y]) == 1);
      }
  }
}

TEST_CASE("conjugation involution property") {
  for (const char* spec : {"dihedral:5", "frobenius:3,2", "burnside23"}) {
    const TranspositionSystem sys = construct_model(spec);
    for (int a = 0; a < sys.n; ++a) {
      CHECK(sys.conj[a][a] == a);
      for (int x = 0; x < sys.n; ++x) CHECK(sys.conj[sys.conj[x][a]][a] == x);
    }
  }
}

TEST_CASE("block partitions") {
  {
    const TranspositionSystem sys = construct_model("dihedral:5");
    const BlockPartition part = blocks(sys, 0);
    REQUIRE(part.blocks.size() == 1);
    CHECK(part.blocks[0] == std::vector<int>{1, 2, 3, 4});
  }
  {
    const TranspositionSystem sys = construct_model("frobenius:5,2");
    for (int axis = 0; axis < sys.n; ++axis) {
      const BlockPartition part = blocks(sys, axis);
      CHECK(part.blocks.size() == 6);
      std::set<int> seen{axis};
      for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        CHECK(part.blocks[b].size() == 4);
        for (int x : part.blocks[b]) CHECK(seen.insert(x).second);
        // Each block with the axis is the dihedral set of its representative.
        const auto seq = dihedral_set(sys, axis, part.representatives[b]);
        const std::set<int> expected(seq.begin(), seq.end());
        std::set<int> actual(part.blocks[b].begin(), part.blocks[b].end());
        actual.insert(axis);
        CHECK(actual == expected);
      }
      CHECK(seen.size() == static_cast<std::size_t>(sys.n));
    }
  }
}

TEST_CASE("conjugation group orders and the closure cap") {
  CHECK(conjugation_group(construct_model("dihedral:5")).order == 10);
  CHECK(conjugation_group(construct_model("dihedral:7")).order == 14);
  CHECK(conjugation_group(construct_model("frobenius:5,2")).order == 50);
  CHECK(conjugation_group(construct_model("frobenius:3,2")).order == 18);

  const ConjugationGroup capped = conjugation_group(construct_model("dihedral:7"), 5);
  CHECK_FALSE(capped.complete);
  CHECK(capped.order >= 5);  // explicit "order at least cap" outcome
}

TEST_CASE("the conjugation action is transitive and its order a multiple of n") {
  for (const char* spec : {"dihedral:5", "dihedral:7", "frobenius:3,2", "burnside23"}) {
    const TranspositionSystem sys = construct_model(spec);
    const ConjugationGroup group = conjugation_group(sys);
    REQUIRE(group.complete);
    CHECK(group.order % sys.n == 0);
    // Orbit of 0 under the generators reaches everything.
    std::set<int> orbit{0};
    for (bool grew = true; grew;) {
      grew = false;
      for (int x : std::set<int>(orbit))
        for (const Permutation& g : group.generators) grew |= orbit.insert(g[x]).second;
    }
    CHECK(orbit.size() == static_cast<std::size_t>(sys.n));
  }
}

TEST_CASE("validation pinpoints broken tables") {
  TranspositionSystem sys = construct_model("dihedral:5");
  sys.conj[2][2] = 0;
  const ValidationReport report = validate_system(sys);
  REQUIRE_FALSE(report.ok());
  CHECK(report.failures[0].check == "self-fix");
  CHECK(report.failures[0].detail.find("conj[2][2]") != std::string::npos);

  TranspositionSystem sys2 = construct_model("dihedral:5");
  sys2.conj[1][0] = 1;  // breaks the permutation/involution structure
  CHECK_FALSE(validate_system(sys2).ok());

  TranspositionSystem tiny;
  tiny.n = 2;
  tiny.p = 3;
  tiny.labels = {"a", "b"};
  tiny.conj = {{0, 0}, {1, 1}};
  const ValidationReport tiny_report = validate_system(tiny);
  REQUIRE_FALSE(tiny_report.ok());
  bool block_count_failure = false;
  for (const auto& f : tiny_report.failures) block_count_failure |= f.check == "block-count";
  CHECK(block_count_failure);
}

TEST_CASE("system files round trip and invalid files are rejected") {
  const TranspositionSystem sys = construct_model("dihedral:7");
  const std::string path = "test_system_roundtrip.json";
  write_text_file(path, system_to_json(sys).dump());
  const TranspositionSystem loaded = construct_model("file:" + path);
  CHECK(loaded.conj == sys.conj);
  CHECK(loaded.labels == sys.labels);

  TranspositionSystem bad = sys;
  bad.conj[3][4] = bad.conj[3][4] == 0 ? 1 : 0;
  write_text_file(path, system_to_json(bad).dump());
  CHECK_THROWS_AS(construct_model("file:" + path), MathError);
  write_text_file(path, "{not json");
  CHECK_THROWS_AS(construct_model("file:" + path), ParseError);
  std::remove(path.c_str());
}
