#include <doctest.h>

#include "qpf/car_motion.hpp"
#include "qpf/fixtures.hpp"
#include "qpf/surgery.hpp"

using namespace qpf;

namespace {

ContextPtr zz(std::int64_t n) { return make_context({FactorSpec{n}, FactorSpec{n}}); }

}  // namespace

TEST_SUITE("car_motion") {

TEST_CASE("uniform motion on the torus") {
  const auto d = fig1(zz(3));
  const auto m = uniform_motion(d.map, {3});
  REQUIRE(m.faces.size() == 1);
  CHECK(m.faces[0].cars() == 3);
  CHECK(m.faces[0].period == 2);
  CHECK(m.global_period == 2);
  CHECK(verify_motion(d.map, m));
  CHECK_THROWS_AS(uniform_motion(d.map, {4}), MotionError);
  CHECK_THROWS_AS(uniform_motion(d.map, {0}), MotionError);
  CHECK_THROWS_AS(uniform_motion(d.map, {1, 1}), MotionError);
}

TEST_CASE("standard motion on the torus") {
  const auto d = fig1(zz(3));
  const auto m = standard_motion(d, parse_word("a b", d.ctx), {3});
  CHECK(m.faces[0].cars() == 3);
  CHECK(m.faces[0].period == 2);
  CHECK(verify_motion(d.map, m));
  // Even times at B-vertices, odd times at A-vertices, all on the same label.
  for (std::int64_t t = 0; t < 6; ++t) {
    std::set<FactorElement> labels;
    for (auto o : m.faces[0].offsets) {
      const auto e = m.faces[0].cycle[static_cast<std::size_t>((o + t) % 6)];
      CHECK(d.vertex_side(d.map.head_vertex(e)) == (t % 2 == 0 ? Side::B : Side::A));
      labels.insert(d.phi[e]);
    }
    CHECK(labels.size() == 1);
  }
  // The same motion from u written starting with b.
  const auto m2 = standard_motion(d, parse_word("b a", d.ctx), {3});
  CHECK(m2.faces[0].offsets == m.faces[0].offsets);
  CHECK_THROWS_AS(standard_motion(d, parse_word("a b", d.ctx), {2}), MotionError);
  CHECK_THROWS_AS(standard_motion(d, parse_word("a b a^2 b", d.ctx), {1}), MotionError);
  CHECK_THROWS_AS(standard_motion(d, parse_word("a", d.ctx), {6}), MotionError);
}

TEST_CASE("collisions and the collision bound on the torus") {
  const auto d3 = fig1(zz(3));
  const auto m = standard_motion(d3, parse_word("a b", d3.ctx), {3});
  const auto rep = simulate(d3.map, m);
  CHECK(rep.total() >= 2);
  CHECK(rep.edge_points == 0);
  const auto c = check_lemma2(d3.map, m);
  CHECK(c.holds);
  CHECK(c.bound == 2);
  // Over Z3 the collision vertices are regular; over Z7 they are irregular.
  const auto k3 = classify_collisions(d3, rep);
  CHECK(k3.regular_vertex > 0);
  const auto d7 = relabel_context(d3, zz(7));
  const auto k7 = classify_collisions(d7, simulate(d7.map, standard_motion(d7, parse_word("a b", d7.ctx), {3})));
  CHECK(k7.regular_vertex == 0);
  CHECK(k7.edge_interior == 0);
  CHECK(k7.irregular_vertex == 2);
  CHECK(r0(d7) == 2);
}

TEST_CASE("single car never collides with itself on a long face") {
  // One edge sphere: face of length 2, one car; each vertex has degree 1.
  const auto m = build_map({{0}, {1}}, {{0, 1}});
  const auto one = uniform_motion(m, {1});
  const auto r = simulate(m, one);
  CHECK(r.vertex_points == 2);
  CHECK(check_lemma2(m, one).holds);
  // Two cars on the same face occupy different corners at every time.
  const auto two = uniform_motion(m, {2});
  CHECK(verify_motion(m, two));
  CHECK(check_lemma2(m, two).holds);
  CHECK(simulate(m, two).edge_points == 1);
}

TEST_CASE("collision bound on random maps, and additivity") {
  std::mt19937_64 rng(99);
  std::int64_t nontrivial = 0;
  for (int t = 0; t < 300; ++t) {
    const auto e = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    const auto m = random_closed_map(e, rng);
    const auto cars = random_admissible_cars(m, rng);
    for (auto x : cars) nontrivial += x > 1;
    const auto motion = uniform_motion(m, cars);
    CHECK(verify_motion(m, motion));
    const auto c = check_lemma2(m, motion);
    CHECK(c.holds);

    const auto m2 = random_closed_map(std::uniform_int_distribution<std::size_t>(1, 6)(rng), rng);
    const auto cars2 = random_admissible_cars(m2, rng);
    const auto u = disjoint_union(m, m2);
    auto both = cars;
    // Faces of the union are ordered by least dart; the second map's darts come after.
    both.insert(both.end(), cars2.begin(), cars2.end());
    const auto cu = check_lemma2(u, uniform_motion(u, both));
    const auto c2 = check_lemma2(m2, uniform_motion(m2, cars2));
    CHECK(cu.bound == c.bound + c2.bound);
    CHECK(cu.points == c.points + c2.points);
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("standard motions on surgery diagrams collide only at irregular vertices") {
  std::mt19937_64 rng(41);
  const auto c = zz(7);
  QuasiLimits lim;
  lim.max_total = 6;
  for (int t = 0; t < 20; ++t) {
    const auto q = random_quasiperiodic(c, rng, lim);
    const auto seed = seed_from_quasiperiodic(q, power_identity_witness(q));
    const auto d = lemma1_pipeline(seed).reduced;
    const auto core = cyclic_reduce(q.base).core;
    std::vector<std::int64_t> n;
    for (const auto& face : d.map.faces()) n.push_back(static_cast<std::int64_t>(face.size() / core.size()));
    const auto motion = standard_motion(d, core, n);
    CHECK(verify_motion(d.map, motion));
    const auto k = classify_collisions(d, simulate(d.map, motion));
    CHECK(k.regular_vertex == 0);
    CHECK(k.edge_interior == 0);
    CHECK(check_lemma2(d.map, motion).holds);
  }
}

TEST_CASE("collision report json") {
  const auto d = fig1(zz(3));
  const auto rep = simulate(d.map, uniform_motion(d.map, {3}));
  const auto text = to_json(rep, d.map);
  CHECK(text.find("\"vertex_points\"") != std::string::npos);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
}

}  // TEST_SUITE
