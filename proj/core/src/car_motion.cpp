#include "qpf/car_motion.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <set>

namespace qpf {

namespace {

Dart at(const FaceMotion& f, std::int64_t offset, std::int64_t t) {
  const auto len = static_cast<std::int64_t>(f.cycle.size());
  return f.cycle[static_cast<std::size_t>(((offset + t) % len + len) % len)];
}

std::int64_t lcm_of_periods(const std::vector<FaceMotion>& faces) {
  std::int64_t g = 1;
  for (const auto& f : faces) g = std::lcm(g, f.period);
  return g;
}

}  // namespace

CarMotion uniform_motion(const ClosedMap& m, const std::vector<std::int64_t>& cars_per_face) {
  if (cars_per_face.size() != m.faces().size()) throw MotionError("need one car count per face");
  CarMotion out;
  for (std::size_t f = 0; f < m.faces().size(); ++f) {
    const auto len = static_cast<std::int64_t>(m.faces()[f].size());
    const auto d = cars_per_face[f];
    if (d < 1) throw MotionError("every face needs at least one car");
    if (len % d != 0) {
      throw MotionError("face " + std::to_string(f) + " of length " + std::to_string(len) +
                        " cannot carry " + std::to_string(d) + " equally spaced cars");
    }
    FaceMotion fm{f, m.faces()[f], len / d, {}};
    for (std::int64_t j = 0; j < d; ++j) fm.offsets.push_back(j * fm.period);
    out.faces.push_back(std::move(fm));
  }
  out.global_period = lcm_of_periods(out.faces);
  return out;
}

CarMotion standard_motion(const LabeledDiagram& d, const Word& u_in, const std::vector<std::int64_t>& n) {
  if (u_in.size() < 2 || u_in.size() % 2 != 0 || !is_cyclically_reduced(u_in)) {
    throw MotionError("u must be a cyclically reduced word a_1 b_1 ... a_r b_r");
  }
  const auto u = u_in[0].factor == 0 ? u_in : rotate(u_in, 1);
  if (n.size() != d.map.faces().size()) throw MotionError("need one exponent per face");
  const auto period = static_cast<std::int64_t>(u.size());
  CarMotion out;
  for (std::size_t f = 0; f < d.map.faces().size(); ++f) {
    const auto& cycle = d.map.faces()[f];
    const auto len = static_cast<std::int64_t>(cycle.size());
    if (n[f] < 1 || len != n[f] * period) {
      throw MotionError("face " + std::to_string(f) + " is not labeled by u^" + std::to_string(n[f]));
    }
    std::optional<std::int64_t> shift;
    for (std::int64_t s = 0; s < period && !shift; ++s) {
      bool ok = true;
      for (std::int64_t i = 0; i < len && ok; ++i) {
        const auto& g = d.phi[cycle[static_cast<std::size_t>((s + i) % len)]];
        ok = g == u[static_cast<std::size_t>(i % period)];
      }
      if (ok) shift = s;
    }
    if (!shift) throw MotionError("face " + std::to_string(f) + " label is not a power of u");
    FaceMotion fm{f, cycle, period, {}};
    for (std::int64_t q = 0; q < n[f]; ++q) fm.offsets.push_back((*shift + q * period + period - 1) % len);
    out.faces.push_back(std::move(fm));
  }
  out.global_period = lcm_of_periods(out.faces);
  return out;
}

bool verify_motion(const ClosedMap& m, const CarMotion& motion) {
  for (const auto& f : motion.faces) {
    if (f.face >= m.faces().size() || f.cycle != m.faces()[f.face]) return false;
    const auto len = static_cast<std::int64_t>(f.cycle.size());
    const auto d = f.cars();
    if (d < 1 || f.period * d != len) return false;
    // (M1): car j shifted by one period is car j+1.
    for (std::int64_t j = 0; j < d; ++j) {
      const auto k = (j + 1) % d;
      for (std::int64_t t = 0; t < len; ++t) {
        if (at(f, f.offsets[static_cast<std::size_t>(j)], t + f.period) !=
            at(f, f.offsets[static_cast<std::size_t>(k)], t)) {
          return false;
        }
      }
    }
    // (M2): the arcs covered during [0, T] partition the boundary.
    std::vector<int> covered(f.cycle.size(), 0);
    for (auto o : f.offsets) {
      for (std::int64_t t = 0; t < f.period; ++t) {
        ++covered[static_cast<std::size_t>(((o + t + 1) % len + len) % len)];
      }
    }
    if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) return false;
  }
  return true;
}

CollisionReport simulate(const ClosedMap& m, const CarMotion& motion) {
  CollisionReport report;
  report.horizon = motion.global_period;
  std::vector<bool> vertex_hit(m.vertices().size(), false);
  std::vector<bool> edge_hit(m.darts(), false);
  std::vector<std::int64_t> occupancy(m.vertices().size());
  std::vector<bool> traversed(m.darts());
  for (std::int64_t t = 0; t < motion.global_period; ++t) {
    std::fill(occupancy.begin(), occupancy.end(), 0);
    std::fill(traversed.begin(), traversed.end(), false);
    for (const auto& f : motion.faces) {
      for (auto o : f.offsets) {
        ++occupancy[m.head_vertex(at(f, o, t))];
        traversed[at(f, o, t + 1)] = true;
      }
    }
    for (std::size_t v = 0; v < occupancy.size(); ++v) {
      if (!vertex_hit[v] && occupancy[v] == static_cast<std::int64_t>(m.degree(v))) {
        vertex_hit[v] = true;
        report.points.push_back({CollisionPoint::Kind::vertex, v, t, occupancy[v]});
        ++report.vertex_points;
      }
    }
    for (Dart x = 0; x < m.darts(); ++x) {
      const auto y = m.alpha(x);
      if (x < y && !edge_hit[x] && traversed[x] && traversed[y]) {
        edge_hit[x] = true;
        report.points.push_back({CollisionPoint::Kind::edge, x, t, 2});
        ++report.edge_points;
      }
    }
  }
  return report;
}

Lemma2Check check_lemma2(const ClosedMap& m, const CarMotion& motion) {
  Lemma2Check c;
  c.points = simulate(m, motion).total();
  c.bound = m.euler_characteristic();
  for (const auto& f : motion.faces) c.bound += f.cars() - 1;
  c.margin = c.points - c.bound;
  c.holds = c.margin >= 0;
  return c;
}

CollisionBreakdown classify_collisions(const LabeledDiagram& d, const CollisionReport& report) {
  CollisionBreakdown out;
  const auto irregular = irregular_vertices(d);
  const std::set<std::size_t> irr(irregular.begin(), irregular.end());
  for (const auto& p : report.points) {
    if (p.kind == CollisionPoint::Kind::edge) {
      ++out.edge_interior;
    } else if (irr.count(p.location)) {
      ++out.irregular_vertex;
    } else {
      ++out.regular_vertex;
    }
  }
  return out;
}

ClosedMap random_closed_map(std::size_t edges, std::mt19937_64& rng) {
  const auto n = 2 * edges;
  std::vector<Dart> darts(n);
  std::iota(darts.begin(), darts.end(), 0);
  std::shuffle(darts.begin(), darts.end(), rng);
  std::vector<Dart> alpha(n);
  for (std::size_t i = 0; i < n; i += 2) {
    alpha[darts[i]] = darts[i + 1];
    alpha[darts[i + 1]] = darts[i];
  }
  std::vector<Dart> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return ClosedMap(std::move(alpha), std::move(sigma));
}

std::vector<std::int64_t> random_admissible_cars(const ClosedMap& m, std::mt19937_64& rng) {
  std::vector<std::int64_t> out;
  for (const auto& f : m.faces()) {
    std::vector<std::int64_t> divisors;
    const auto len = static_cast<std::int64_t>(f.size());
    for (std::int64_t d = 1; d <= len; ++d) {
      if (len % d == 0) divisors.push_back(d);
    }
    out.push_back(divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)]);
  }
  return out;
}

std::string to_json(const CollisionReport& r, const ClosedMap& m) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : r.points) {
    const bool vertex = p.kind == CollisionPoint::Kind::vertex;
    points.push_back({{"kind", vertex ? "vertex" : "edge"},
                      {"location", vertex ? m.vertices()[p.location].front() : p.location},
                      {"time", p.time},
                      {"multiplicity", p.multiplicity}});
  }
  nlohmann::json out;
  out["schema_version"] = 1;
  out["horizon"] = r.horizon;
  out["vertex_points"] = r.vertex_points;
  out["edge_points"] = r.edge_points;
  out["points"] = points;
  return out.dump(2);
}

}  // namespace qpf
