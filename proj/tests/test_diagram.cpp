#include <doctest.h>

#include <set>

#include "qpf/car_motion.hpp"
#include "qpf/diagram.hpp"
#include "qpf/fixtures.hpp"

using namespace qpf;

namespace {

ContextPtr zz(std::int64_t n) { return make_context({FactorSpec{n}, FactorSpec{n}}); }

// Orbit count of a permutation given as a table.
std::size_t orbits(const std::vector<Dart>& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++n;
    for (auto j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return n;
}

LabeledDiagram edge_sphere(const ContextPtr& c, FactorElement at0, FactorElement at1) {
  auto m = build_map({{0}, {1}}, {{0, 1}});
  return LabeledDiagram(c, m, {Side::A, Side::B}, {at0, at1});
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("closed map examples") {
  auto s = build_map({{0}, {1}}, {{0, 1}});
  CHECK(s.vertices().size() == 2);
  CHECK(s.edges() == 1);
  CHECK(s.faces().size() == 1);
  CHECK(s.euler_characteristic() == 2);
  auto loop = build_map({{0, 1}}, {{0, 1}});
  CHECK(loop.vertices().size() == 1);
  CHECK(loop.faces().size() == 2);
  CHECK(loop.euler_characteristic() == 2);
  const auto two = disjoint_union(s, s);
  CHECK(two.euler_characteristic() == 4);
  CHECK(two.component_euler_characteristics() == std::vector<std::int64_t>{2, 2});
  CHECK_THROWS_AS(ClosedMap({0, 1}, {0, 1}), MapError);
  CHECK_THROWS_AS(ClosedMap({1, 0}, {0, 0}), MapError);
}

TEST_CASE("one-face torus fixture") {
  const auto d3 = fig1(zz(3));
  CHECK(d3.map.vertices().size() == 2);
  CHECK(d3.map.edges() == 3);
  CHECK(d3.map.faces().size() == 1);
  CHECK(d3.map.euler_characteristic() == 0);
  CHECK(validate_diagram(d3).empty());
  CHECK(face_label(d3, 0) == parse_word("a b a b a b", d3.ctx));
  CHECK(r0(d3) == 0);
  CHECK(extended_genus(d3) == 2);
  CHECK(is_reduced(d3));
  CHECK(tau(d3) == Tau{0, 0, 3});
  for (std::size_t v = 0; v < 2; ++v) CHECK(vertex_label(d3, v).is_identity());

  const auto d5 = fig1(zz(5));
  CHECK(r0(d5) == 2);
  CHECK(extended_genus(d5) == 4);
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(vertex_label(d5, v).exponent == 3);
  }
}

TEST_CASE("(D1) and (D2) violations") {
  auto d = fig1(zz(3));
  auto all_a = d;
  std::fill(all_a.theta.begin(), all_a.theta.end(), Side::A);
  std::size_t d1 = 0;
  for (const auto& v : validate_diagram(all_a)) d1 += v.kind == Violation::Kind::d1;
  CHECK(d1 == 3);
  auto bad = d;
  for (Dart e = 0; e < 6; ++e) {
    if (bad.phi[e].factor == 0) {
      bad.phi[e] = FactorElement{1, 1};
      break;
    }
  }
  const auto v = validate_diagram(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::d2);
}

TEST_CASE("face and vertex labels") {
  const auto c = zz(kInfinite);
  const auto s = edge_sphere(c, FactorElement{1, 1}, FactorElement{0, 0});
  CHECK(validate_diagram(s).empty());
  CHECK(face_label(s, 0) == parse_word("b", c));
  CHECK(equivalent_mod_identity(face_corners(s, 0), parse_word("b", c)));
  CHECK_FALSE(is_reduced(s));
  CHECK(r0(s) == 1);

  const auto d = fig1(zz(7));
  const auto m = mirror(d);
  CHECK(validate_diagram(m).empty());
  CHECK(is_conjugate(face_label(m, 0), invert(face_label(d, 0))));

  // g and g^-1 at one vertex: regular.
  const auto c5 = zz(5);
  auto loop = build_map({{0, 1}, {2}, {3}}, {{0, 2}, {1, 3}});
  LabeledDiagram two(c5, loop, {Side::A, Side::A, Side::B, Side::B},
                     {FactorElement{1, 0}, FactorElement{1, 0}, FactorElement{0, 2}, FactorElement{0, 3}});
  REQUIRE(validate_diagram(two).empty());
  const auto a_vertex = two.map.vertex_of(0);
  CHECK(vertex_label(two, a_vertex).is_identity());
}

TEST_CASE("tau ordering") {
  CHECK(compare_tau(Tau{0, 0, 3}, Tau{0, 1, 2}) == std::strong_ordering::less);
  CHECK(compare_tau(Tau{-2, 5, 9}, Tau{0, 0, 0}) == std::strong_ordering::less);
  const auto s = edge_sphere(zz(kInfinite), FactorElement{1, 1}, FactorElement{0, 0});
  CHECK(tau(s) == Tau{-2, r0(s), 1});
}

TEST_CASE("json and dot") {
  const auto d = fig1(zz(3));
  const auto back = diagram_from_json(diagram_to_json(d));
  CHECK(back == d);
  CHECK(diagram_to_json(back) == diagram_to_json(d));
  const auto fixed = R"({"schema_version":1,"factors":"Z,Z","darts":2,"alpha":[[0,0]],
    "sigma":[[0],[1]],"theta":{"0":"A","1":"B"},"phi":{"0":"1","1":"1"}})";
  CHECK_THROWS_AS(diagram_from_json(fixed), Error);
  CHECK_THROWS_AS(diagram_from_json("[1,2"), ParseError);
  const auto dot = diagram_to_dot(edge_sphere(zz(kInfinite), FactorElement{1, 1}, FactorElement{0, 0}));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(dot.back() == '\n');
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}

TEST_CASE("random map invariants") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const auto e = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const auto m = random_closed_map(e, rng);
    std::vector<Dart> face_perm(m.darts());
    for (Dart d = 0; d < m.darts(); ++d) {
      face_perm[d] = m.sigma(m.alpha(d));
      CHECK(m.next(d) == face_perm[d]);
      CHECK(m.prev(m.next(d)) == d);
    }
    const auto v = orbits(m.sigma_table());
    const auto f = orbits(face_perm);
    CHECK(m.vertices().size() == v);
    CHECK(m.faces().size() == f);
    CHECK(m.euler_characteristic() ==
          static_cast<std::int64_t>(v) - static_cast<std::int64_t>(e) + static_cast<std::int64_t>(f));
    std::size_t total = 0;
    for (const auto& face : m.faces()) total += face.size();
    CHECK(total == 2 * e);
    for (auto chi : m.component_euler_characteristics()) {
      CHECK(chi <= 2);
      CHECK(chi % 2 == 0);
    }
  }
}

}  // TEST_SUITE
