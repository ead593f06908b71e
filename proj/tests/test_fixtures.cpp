#include <doctest.h>

#include "oracle.hpp"
#include "qpf/fixtures.hpp"

using namespace qpf;

TEST_SUITE("fixtures") {

TEST_CASE("every fixture loads and verifies") {
  for (const auto& name : fixture_names()) {
    const auto r = run_fixture(name, 3);
    INFO(name << ": " << r.detail);
    CHECK(r.ok);
  }
  CHECK_FALSE(run_fixture("nope", 1).ok);
  CHECK_FALSE(run_fixture("abn", 0).ok);
}

TEST_CASE("abn matches a reference expansion") {
  const oracle::Orders o{0, 0};
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto id = abn(n);
    oracle::Raw lhs{{0, n}};
    for (auto i = n - 1; i >= 0; --i) lhs = oracle::cat({lhs, {{0, -i}, {1, 1}, {0, i}}});
    oracle::Raw rhs;
    for (std::int64_t i = 0; i < n; ++i) rhs = oracle::cat({rhs, {{0, 1}, {1, 1}}});
    CHECK(oracle::reduce(lhs, o) == oracle::reduce(rhs, o));
    CHECK(oracle::raw_of(id.lhs) == oracle::reduce(rhs, o));
  }
}

TEST_CASE("dihedral and torsion collapse") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto t = dihedral(n);
    CHECK(evaluate_mixed(t.lhs) == evaluate_quasiperiodic(t.rhs));
  }
  for (std::int64_t m = 2; m <= 3; ++m) CHECK(evaluate_quasiperiodic(torsion_collapse(m).rhs).empty());
  CHECK_THROWS_AS(torsion_collapse(1), FixtureError);
  CHECK_THROWS_AS(fig1(parse_context("Z,Z,Z")), FixtureError);
}

}  // TEST_SUITE
