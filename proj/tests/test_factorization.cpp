#include <doctest.h>

#include "oracle.hpp"
#include "qpf/enumerate.hpp"
#include "qpf/factorization.hpp"
#include "qpf/fixtures.hpp"
#include "qpf/serialize.hpp"

using namespace qpf;

namespace {

Word W(const ContextPtr& c, const char* s) { return parse_word(s, c); }

}  // namespace

TEST_SUITE("factorization") {

TEST_CASE("evaluate_mixed") {
  const auto c = parse_context("Z,Z");
  MixedFactorization f{c, {{W(c, "a"), W(c, "b")}}, {}};
  CHECK(evaluate_mixed(f) == W(c, "a^-1 b^-1 a b"));
  MixedFactorization g{c, {}, {{W(c, ""), Letter{0, 1}}, {W(c, ""), Letter{1, 1}}}};
  CHECK(evaluate_mixed(g) == W(c, "a b"));
  CHECK(g.score() == 2);
  MixedFactorization bad{c, {}, {{W(c, "a"), Letter{1, 0}}}};
  CHECK_THROWS_AS(evaluate_mixed(bad), InvalidWitness);
}

TEST_CASE("Culler identity, checked against a permutation representation") {
  const auto t = culler3();
  const auto& c = t.lhs.ctx;
  CHECK(evaluate_mixed(t.lhs) == power(commutator(W(c, "a"), W(c, "b")), 3));
  // Independent check: compare images in random permutation groups.
  std::mt19937_64 rng(1);
  const auto o = oracle::orders_of(*c);
  oracle::Raw lhs;
  for (const auto& [x, y] : t.lhs.commutator_pairs) {
    const auto rx = oracle::raw_of(x), ry = oracle::raw_of(y);
    lhs = oracle::cat({lhs, oracle::inv(rx), oracle::inv(ry), rx, ry});
  }
  const oracle::Raw ab{{0, -1}, {1, -1}, {0, 1}, {1, 1}};
  const auto rhs = oracle::cat({ab, ab, ab});
  CHECK(oracle::reduce(lhs, o) == oracle::reduce(rhs, o));
  for (int i = 0; i < 20; ++i) {
    oracle::PermRep rep(o, 9, rng);
    CHECK(rep.eval(lhs) == rep.eval(rhs));
  }
}

TEST_CASE("evaluate_quasiperiodic") {
  const auto c = parse_context("Z,Z");
  QuasiperiodicFactorization q{W(c, "a b"), {W(c, "")}, {3}};
  CHECK(evaluate_quasiperiodic(q) == W(c, "a b a b a b"));
  CHECK(q.score() == 2);
  QuasiperiodicFactorization q2{W(c, "a b"), {W(c, ""), W(c, "")}, {4, 2}};
  CHECK(evaluate_quasiperiodic(q2) == power(W(c, "a b"), 6));
  CHECK(q2.score() == 4);
  QuasiperiodicFactorization bad{W(c, "a^-1 b a"), {W(c, "")}, {2}};
  CHECK_THROWS_AS(evaluate_quasiperiodic(bad), InvalidWitness);
}

TEST_CASE("verify_theorem_instance") {
  const auto culler = verify_theorem_instance(culler3());
  CHECK(culler.equality_holds);
  CHECK(culler.hypotheses_hold());
  CHECK(culler.lhs_score == 4);
  CHECK(culler.rhs_score == 2);
  CHECK(culler.inequality_holds);
  CHECK_FALSE(culler.counterexample());

  const auto c = parse_context("Z,Z");
  TheoremInstance abn2{MixedFactorization{c, {}, {{W(c, ""), Letter{0, 2}}, {W(c, "a^-1"), Letter{1, 1}}, {W(c, ""), Letter{1, 1}}}},
                       QuasiperiodicFactorization{W(c, "a b"), {W(c, "")}, {2}}};
  const auto v = verify_theorem_instance(abn2);
  CHECK(v.equality_holds);
  CHECK(v.lhs_score == 3);
  CHECK(v.rhs_score == 1);
  CHECK(v.inequality_holds);

  const auto d = verify_theorem_instance(dihedral(2));
  CHECK(d.equality_holds);
  CHECK_FALSE(d.hypotheses.torsion_condition);
  CHECK_FALSE(d.hypotheses_hold());
  CHECK_FALSE(d.counterexample());

  TheoremInstance wrong{MixedFactorization{c, {{W(c, "a"), W(c, "b")}}, {}},
                        QuasiperiodicFactorization{W(c, "a b"), {W(c, "")}, {2}}};
  CHECK_FALSE(verify_theorem_instance(wrong).equality_holds);
}

TEST_CASE("torsion collapse") {
  for (std::int64_t m : {2, 3, 4, 5}) {
    const auto t = pos_infinity_fixture(m);
    CHECK(evaluate_quasiperiodic(t.rhs).empty());
    CHECK(evaluate_quasiperiodic(pos_infinity_fixture(m, 7).rhs).empty());
    CHECK(t.rhs.m() == m);
  }
  CHECK_THROWS(pos_infinity_fixture(1));
}

TEST_CASE("power identity witness evaluates to the factorization") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"Z,Z", "Z7,Z9", "Z,Z,Z"}) {
    const auto c = parse_context(spec);
    for (int t = 0; t < 100; ++t) {
      const auto q = random_quasiperiodic(c, rng);
      CHECK(evaluate_mixed(power_identity_witness(q)) == evaluate_quasiperiodic(q));
      for (const auto& f : constructive_mixed_witnesses(evaluate_quasiperiodic(q))) {
        CHECK(evaluate_mixed(f) == evaluate_quasiperiodic(q));
      }
    }
  }
}

TEST_CASE("json round trip") {
  const auto t = culler3();
  const auto back = theorem_instance_from_json(to_json(t));
  CHECK(evaluate_mixed(back.lhs) == evaluate_mixed(t.lhs));
  CHECK(back.rhs.exponents == t.rhs.exponents);
  CHECK(back.rhs.base == t.rhs.base);
  const auto m = mixed_from_json(to_json(t.lhs));
  CHECK(m.k() == 2);
  const auto q = quasiperiodic_from_json(to_json(t.rhs));
  CHECK(evaluate_quasiperiodic(q) == evaluate_quasiperiodic(t.rhs));
  CHECK_THROWS_AS(mixed_from_json("{not json"), ParseError);
  CHECK_THROWS_AS(mixed_from_json(R"({"schema_version":1,"factors":"Z,Z","mixed":{"commutators":[["a"]]}})"),
                  ParseError);
}

}  // TEST_SUITE
