#include <doctest.h>

#include "qpf/surgery.hpp"

using namespace qpf;

namespace {

Word W(const ContextPtr& c, const char* s) { return parse_word(s, c); }

SeedInput ab_seed() {
  const auto c = parse_context("Z,Z");
  return {{W(c, "a b")}, {W(c, "")}, MixedFactorization{c, {}, {{W(c, ""), Letter{0, 1}}, {W(c, ""), Letter{1, 1}}}}};
}

SeedInput commutator_seed() {
  const auto c = parse_context("Z,Z");
  return {{W(c, "a^-1 b^-1 a b")}, {W(c, "")}, MixedFactorization{c, {{W(c, "a"), W(c, "b")}}, {}}};
}

// Digon labeled ab beside a face b^-1 a^-1 carrying a spur with identity corners.
LabeledDiagram spur_diagram() {
  const auto c = parse_context("Z,Z");
  auto m = build_map({{0, 2, 4}, {1, 3}, {5}}, {{0, 1}, {2, 3}, {4, 5}});
  std::vector<Side> theta{Side::A, Side::B, Side::A, Side::B, Side::A, Side::B};
  std::vector<FactorElement> phi{{1, -1}, {0, 1}, {1, 1}, {0, -1}, {1, 0}, {0, 0}};
  return LabeledDiagram(c, m, theta, phi);
}

void check_pipeline(const SeedInput& s) {
  const auto r = lemma1_pipeline(s);
  CHECK(is_reduced(r.reduced));
  CHECK(validate_diagram(r.reduced).empty());
  CHECK(check_property_P(r.reduced, s.u_list));
  CHECK(r.reduced.map.faces().size() == s.u_list.size());
  for (const auto& u : s.u_list) {
    bool found = false;
    for (std::size_t f = 0; f < r.reduced.map.faces().size(); ++f) {
      found = found || equivalent_mod_identity(face_corners(r.reduced, f), u);
    }
    CHECK(found);
  }
  CHECK(r.eg == extended_genus(r.reduced));
  CHECK(r.eg <= s.mixed.score());
  for (const auto& step : r.trace.steps) {
    if (step.tau_before && step.tau_after) CHECK(*step.tau_after < *step.tau_before);
    if (step.eg_before && step.eg_after) CHECK(*step.eg_after <= *step.eg_before);
  }
}

}  // namespace

TEST_SUITE("surgery") {

TEST_CASE("seed diagrams") {
  const auto d0 = build_seed_diagram(ab_seed());
  CHECK(validate_diagram(d0).empty());
  CHECK_FALSE(d0.closed());
  std::size_t interior = 0;
  for (std::size_t f = 0; f < d0.map.faces().size(); ++f) interior += !d0.is_boundary_face(f);
  CHECK(interior == 1);
  const auto d1 = build_seed_diagram(commutator_seed());
  CHECK(validate_diagram(d1).empty());
  CHECK(d1.map.faces().size() == 2);

  auto bad = ab_seed();
  bad.u_list[0] = W(bad.mixed.ctx, "b a b");
  CHECK_THROWS_AS(build_seed_diagram(bad), SurgeryError);
  auto wrong = commutator_seed();
  wrong.u_list[0] = W(wrong.mixed.ctx, "a b a^-1 b^-1");
  CHECK_THROWS_AS(build_seed_diagram(wrong), SurgeryError);
}

TEST_CASE("identifications") {
  const auto s1 = ab_seed();
  const auto d = perform_identifications(build_seed_diagram(s1), s1);
  CHECK(d.closed());
  CHECK(d.map.euler_characteristic() == 2);
  CHECK(r0(d) == 2);
  CHECK(extended_genus(d) == 2);
  CHECK(check_property_P(d, s1.u_list));

  const auto s2 = commutator_seed();
  SurgeryTrace trace;
  const auto t = perform_identifications(build_seed_diagram(s2), s2, &trace);
  CHECK(t.map.euler_characteristic() == 0);
  CHECK(r0(t) == 0);
  CHECK(extended_genus(t) == 2);
  CHECK(check_property_P(t, s2.u_list));
  CHECK_FALSE(trace.steps.empty());
  CHECK(trace.steps.back().kind == SurgeryStep::Kind::cap);
}

TEST_CASE("reduction") {
  const auto c = parse_context("Z3,Z3");
  SurgeryTrace none;
  const auto f = reduce_diagram(
      LabeledDiagram(c, build_map({{0, 4, 2}, {1, 5, 3}}, {{0, 3}, {1, 4}, {2, 5}}),
                     {Side::B, Side::A, Side::B, Side::A, Side::B, Side::A},
                     {{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}}),
      {power(W(c, "a b"), 3)}, none);
  CHECK(none.steps.empty());
  CHECK(is_reduced(f));

  const auto spur = spur_diagram();
  REQUIRE(validate_diagram(spur).empty());
  const auto u = std::vector<Word>{W(spur.ctx, "a b")};
  REQUIRE(check_property_P(spur, u));
  SurgeryTrace trace;
  const auto r = reduce_diagram(spur, u, trace);
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].kind == SurgeryStep::Kind::spur);
  CHECK(r.map.edges() == spur.map.edges() - 1);
  CHECK(is_reduced(r));
  CHECK(extended_genus(r) == 0);

  const auto trivial = LabeledDiagram(parse_context("Z,Z"), build_map({{0}, {1}}, {{0, 1}}), {Side::A, Side::B},
                                      {{1, 0}, {0, 0}});
  CHECK_FALSE(check_property_P(trivial, u));
}

TEST_CASE("pipeline examples") {
  check_pipeline(ab_seed());
  check_pipeline(commutator_seed());
  const auto r = lemma1_pipeline(commutator_seed());
  CHECK(r.eg <= 2);
}

TEST_CASE("random seeds") {
  std::mt19937_64 rng(77);
  for (const char* spec : {"Z,Z", "Z3,Z5", "Z2,Z2", "Z2,Z"}) {
    const auto c = parse_context(spec);
    for (int t = 0; t < 40; ++t) check_pipeline(random_seed_input(c, rng));
  }
}

TEST_CASE("quasiperiodic bound replayed through surgery") {
  // For w = prod h_j^{n_j} with torsion-free factors: r0 >= chi + sum (n_j - 1).
  std::mt19937_64 rng(5);
  const auto c = parse_context("Z,Z");
  QuasiLimits lim;
  lim.max_core = 4;
  lim.max_total = 5;
  for (int t = 0; t < 30; ++t) {
    const auto q = random_quasiperiodic(c, rng, lim);
    const auto seed = seed_from_quasiperiodic(q, power_identity_witness(q));
    const auto r = lemma1_pipeline(seed);
    CHECK(r0(r.reduced) >= r.reduced.map.euler_characteristic() + q.score());
    CHECK(q.score() <= r.eg - 2);
  }
}

TEST_CASE("seed json round trip") {
  const auto s = commutator_seed();
  const auto back = seed_from_json(seed_to_json(s));
  CHECK(back.u_list == s.u_list);
  CHECK(back.s_list == s.s_list);
  CHECK(evaluate_mixed(back.mixed) == evaluate_mixed(s.mixed));
  const auto r = lemma1_pipeline(s);
  CHECK(trace_to_json(r.trace).find("schema_version") != std::string::npos);
}

}  // TEST_SUITE
