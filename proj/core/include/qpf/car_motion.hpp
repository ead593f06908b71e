#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qpf/diagram.hpp"

namespace qpf {

class MotionError : public Error {
 public:
  using Error::Error;
};

/// Unit-speed cars on one face. A car with offset o sits at the corner keyed
/// by cycle[(o + t) mod L] at integer time t and traverses cycle[(o + t + 1) mod L]
/// during (t, t + 1).
struct FaceMotion {
  std::size_t face = 0;
  std::vector<Dart> cycle;
  std::int64_t period = 0;
  std::vector<std::int64_t> offsets;

  std::int64_t cars() const noexcept { return static_cast<std::int64_t>(offsets.size()); }
};

struct CarMotion {
  std::vector<FaceMotion> faces;
  /// lcm of the face periods.
  std::int64_t global_period = 1;
};

/// d[f] equally spaced cars on face f; d[f] must divide the face length.
CarMotion uniform_motion(const ClosedMap& m, const std::vector<std::int64_t>& cars_per_face);

/// n[f] cars on face f, whose label must be a rotation of u^{n[f]} with
/// u = a_1 b_1 ... a_r b_r (u is rotated to start with an A letter). Cars
/// start at the corners labeled b_r; the period is 2r.
CarMotion standard_motion(const LabeledDiagram& d, const Word& u, const std::vector<std::int64_t>& n);

/// Replays the motion: shifting by the period moves every car onto the next
/// one, and the arcs covered during one period partition the face boundary.
bool verify_motion(const ClosedMap& m, const CarMotion& motion);

struct CollisionPoint {
  enum class Kind : std::uint8_t { vertex, edge };
  Kind kind;
  std::size_t location;  // vertex index, or the lesser dart of the edge
  std::int64_t time;     // first witnessing time (edge: start of the unit interval)
  std::int64_t multiplicity;
};

struct CollisionReport {
  std::vector<CollisionPoint> points;
  std::int64_t vertex_points = 0;
  std::int64_t edge_points = 0;
  std::int64_t horizon = 0;

  std::int64_t total() const noexcept { return vertex_points + edge_points; }
};

/// Complete collisions over one global period; each point is counted once.
CollisionReport simulate(const ClosedMap& m, const CarMotion& motion);

struct Lemma2Check {
  bool holds = false;
  std::int64_t points = 0;
  std::int64_t bound = 0;  // chi + sum (d_F - 1)
  std::int64_t margin = 0;
};
Lemma2Check check_lemma2(const ClosedMap& m, const CarMotion& motion);

struct CollisionBreakdown {
  std::int64_t regular_vertex = 0;
  std::int64_t irregular_vertex = 0;
  std::int64_t edge_interior = 0;
};
CollisionBreakdown classify_collisions(const LabeledDiagram& d, const CollisionReport& report);

/// Uniform random fixed-point-free involution and permutation on 2E darts.
ClosedMap random_closed_map(std::size_t edges, std::mt19937_64& rng);
/// Random divisor of each face length.
std::vector<std::int64_t> random_admissible_cars(const ClosedMap& m, std::mt19937_64& rng);

std::string to_json(const CollisionReport& r, const ClosedMap& m);

}  // namespace qpf
