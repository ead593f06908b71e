#include "qpf/diagram.hpp"

#include <algorithm>

namespace qpf {

char side_char(Side s) noexcept { return s == Side::A ? 'A' : 'B'; }

LabeledDiagram::LabeledDiagram(ContextPtr c, ClosedMap m, std::vector<Side> t,
                               std::vector<FactorElement> p, std::vector<bool> b)
    : ctx(std::move(c)), map(std::move(m)), theta(std::move(t)), phi(std::move(p)), boundary(std::move(b)) {
  if (boundary.empty()) boundary.assign(map.darts(), false);
}

bool LabeledDiagram::closed() const {
  return std::none_of(boundary.begin(), boundary.end(), [](bool b) { return b; });
}

bool LabeledDiagram::is_interior_vertex(std::size_t vertex) const {
  for (auto x : map.vertices().at(vertex)) {
    if (boundary[map.alpha(x)]) return false;
  }
  return true;
}

bool LabeledDiagram::operator==(const LabeledDiagram& o) const {
  return same_context(ctx, o.ctx) && map == o.map && theta == o.theta && phi == o.phi &&
         boundary == o.boundary;
}

std::vector<Violation> validate_diagram(const LabeledDiagram& d) {
  std::vector<Violation> out;
  const auto n = d.map.darts();
  if (!d.ctx || d.ctx->size() != 2) {
    out.push_back({Violation::Kind::structure, "diagram context must have exactly two factors"});
    return out;
  }
  if (d.theta.size() != n || d.phi.size() != n || d.boundary.size() != n) {
    out.push_back({Violation::Kind::structure, "label tables do not match the dart count"});
    return out;
  }
  for (std::size_t v = 0; v < d.map.vertices().size(); ++v) {
    const auto& orbit = d.map.vertices()[v];
    for (auto x : orbit) {
      if (d.theta[x] != d.theta[orbit.front()]) {
        out.push_back({Violation::Kind::structure,
                       "theta differs around vertex " + std::to_string(orbit.front())});
        break;
      }
    }
  }
  for (std::size_t f = 0; f < d.map.faces().size(); ++f) {
    const auto& cycle = d.map.faces()[f];
    for (auto e : cycle) {
      if (d.boundary[e] != d.boundary[cycle.front()]) {
        out.push_back({Violation::Kind::structure,
                       "boundary flag differs along face " + std::to_string(cycle.front())});
        break;
      }
    }
  }
  for (Dart e = 0; e < n; ++e) {
    const auto a = d.map.alpha(e);
    if (e < a && d.theta[e] == d.theta[a]) {
      out.push_back({Violation::Kind::d1, "edge " + std::to_string(e) + "/" + std::to_string(a) +
                                              " joins two " + side_char(d.theta[e]) + "-vertices"});
    }
  }
  for (Dart e = 0; e < n; ++e) {
    if (d.boundary[e]) continue;
    const auto& g = d.phi[e];
    if (g.factor >= 2) {
      out.push_back({Violation::Kind::structure, "corner " + std::to_string(e) + " names no factor"});
      continue;
    }
    if (d.ctx->canonical_exponent(g.factor, g.exponent) == 0) continue;
    const auto side = d.theta[d.map.alpha(e)];
    if (g.factor != side_factor(side)) {
      out.push_back({Violation::Kind::d2, "corner " + std::to_string(e) + " at a " + side_char(side) +
                                              "-vertex is labeled " + to_string(g, *d.ctx)});
    }
  }
  return out;
}

std::vector<FactorElement> face_corners(const LabeledDiagram& d, std::size_t face) {
  std::vector<FactorElement> out;
  for (auto e : d.map.faces().at(face)) out.push_back(d.phi[e]);
  return out;
}

Word face_label(const LabeledDiagram& d, std::size_t face) {
  if (d.is_boundary_face(face)) throw Error("face " + std::to_string(face) + " is a boundary face");
  return Word::normalize(face_corners(d, face), d.ctx);
}

bool equivalent_mod_identity(const std::vector<FactorElement>& corners, const Word& u) {
  std::vector<FactorElement> kept;
  for (const auto& g : corners) {
    if (u.ctx().canonical_exponent(g.factor, g.exponent) != 0) {
      kept.push_back({g.factor, u.ctx().canonical_exponent(g.factor, g.exponent)});
    }
  }
  if (kept.size() != u.size()) return false;
  if (kept.empty()) return true;
  for (std::size_t t = 0; t < kept.size(); ++t) {
    bool same = true;
    for (std::size_t i = 0; i < kept.size() && same; ++i) same = kept[(i + t) % kept.size()] == u[i];
    if (same) return true;
  }
  return false;
}

FactorElement vertex_label(const LabeledDiagram& d, std::size_t vertex) {
  if (!d.is_interior_vertex(vertex)) {
    throw Error("vertex " + std::to_string(vertex) + " lies on the boundary");
  }
  const auto f = side_factor(d.vertex_side(vertex));
  std::int64_t sum = 0;
  for (auto x : d.map.vertices()[vertex]) sum += d.phi[d.map.alpha(x)].exponent;
  return {f, d.ctx->canonical_exponent(f, sum)};
}

std::vector<std::size_t> irregular_vertices(const LabeledDiagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < d.map.vertices().size(); ++v) {
    if (d.is_interior_vertex(v) && !vertex_label(d, v).is_identity()) out.push_back(v);
  }
  return out;
}

std::int64_t r0(const LabeledDiagram& d) { return static_cast<std::int64_t>(irregular_vertices(d).size()); }

bool is_reduced(const LabeledDiagram& d) {
  for (Dart e = 0; e < d.map.darts(); ++e) {
    if (d.boundary[e]) continue;
    if (d.ctx->canonical_exponent(d.phi[e].factor, d.phi[e].exponent) == 0) return false;
  }
  return true;
}

std::int64_t extended_genus(const LabeledDiagram& d) {
  if (!d.closed()) throw Error("extended genus needs a closed diagram");
  return 2 - d.map.euler_characteristic() + r0(d);
}

Tau tau(const LabeledDiagram& d) {
  return {-d.map.euler_characteristic(), r0(d), static_cast<std::int64_t>(d.map.edges())};
}

std::strong_ordering compare_tau(const Tau& a, const Tau& b) { return a <=> b; }

std::string to_string(const Tau& t) {
  return "(" + std::to_string(t.neg_chi) + ", " + std::to_string(t.r0) + ", " +
         std::to_string(t.edge_count) + ")";
}

LabeledDiagram mirror(const LabeledDiagram& d) {
  const auto n = d.map.darts();
  std::vector<Dart> sigma(n);
  for (Dart x = 0; x < n; ++x) sigma[d.map.sigma(x)] = x;
  ClosedMap m(d.map.alpha_table(), std::move(sigma));
  std::vector<FactorElement> phi(n);
  std::vector<bool> boundary(n);
  for (Dart e = 0; e < n; ++e) {
    const auto target = d.map.alpha(d.map.next(e));
    const auto& g = d.phi[e];
    phi[target] = {g.factor, d.ctx->canonical_exponent(g.factor, -g.exponent)};
    boundary[target] = d.boundary[e];
  }
  return LabeledDiagram(d.ctx, std::move(m), d.theta, std::move(phi), std::move(boundary));
}

LabeledDiagram relabel_context(const LabeledDiagram& d, ContextPtr ctx) {
  if (!ctx || ctx->size() != 2) throw ContextMismatch("diagram context must have exactly two factors");
  auto out = d;
  out.ctx = std::move(ctx);
  for (auto& g : out.phi) g.exponent = out.ctx->canonical_exponent(g.factor, g.exponent);
  return out;
}

}  // namespace qpf
