#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qpf/closed_map.hpp"
#include "qpf/word.hpp"

namespace qpf {

/// Vertex side: A is factor 0 of the context, B is factor 1.
enum class Side : std::uint8_t { A, B };

inline std::uint32_t side_factor(Side s) noexcept { return s == Side::A ? 0u : 1u; }
inline Side other(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
char side_char(Side s) noexcept;

/// Diagram over A*B on a rotation system.
///
/// theta is stored per dart for the dart's origin vertex. phi[e] labels the
/// corner (e, next(e)) whose vertex is head(e); exponent 0 is the label 1.
/// Darts flagged in `boundary` belong to distinguished boundary faces whose
/// corners carry no labels.
struct LabeledDiagram {
  ContextPtr ctx;
  ClosedMap map;
  std::vector<Side> theta;
  std::vector<FactorElement> phi;
  std::vector<bool> boundary;

  LabeledDiagram() = default;
  LabeledDiagram(ContextPtr c, ClosedMap m, std::vector<Side> t, std::vector<FactorElement> p,
                 std::vector<bool> b = {});

  Side vertex_side(std::size_t vertex) const { return theta.at(map.vertices().at(vertex).front()); }
  bool is_boundary_face(std::size_t face) const { return boundary.at(map.faces().at(face).front()); }
  bool closed() const;
  /// A vertex is interior when none of its corners lies on a boundary face.
  bool is_interior_vertex(std::size_t vertex) const;

  bool operator==(const LabeledDiagram& o) const;
};

struct Violation {
  enum class Kind : std::uint8_t { structure, d1, d2 };
  Kind kind;
  std::string detail;
};

/// Structural problems plus one (D1) entry per edge with equal sides and one
/// (D2) entry per corner labeled outside its vertex's factor.
std::vector<Violation> validate_diagram(const LabeledDiagram& d);

/// Raw corner labels of a face starting at its least dart, identity included.
std::vector<FactorElement> face_corners(const LabeledDiagram& d, std::size_t face);
/// Product of the corner labels of an interior face, read counterclockwise from its least dart.
Word face_label(const LabeledDiagram& d, std::size_t face);

/// Whether a corner sequence equals a cyclic rotation of u after deleting identity letters.
bool equivalent_mod_identity(const std::vector<FactorElement>& corners, const Word& u);

/// Product of the corner labels at an interior vertex, as an element of its factor.
FactorElement vertex_label(const LabeledDiagram& d, std::size_t vertex);

std::vector<std::size_t> irregular_vertices(const LabeledDiagram& d);
std::int64_t r0(const LabeledDiagram& d);
/// No interior corner carries the label 1.
bool is_reduced(const LabeledDiagram& d);
/// 2 - chi + r0 for a closed diagram.
std::int64_t extended_genus(const LabeledDiagram& d);

struct Tau {
  std::int64_t neg_chi = 0;
  std::int64_t r0 = 0;
  std::int64_t edge_count = 0;

  auto operator<=>(const Tau&) const = default;
};
Tau tau(const LabeledDiagram& d);
std::strong_ordering compare_tau(const Tau& a, const Tau& b);
std::string to_string(const Tau& t);

/// Same diagram with reversed orientation and inverted labels; face labels become inverses.
LabeledDiagram mirror(const LabeledDiagram& d);

/// Same map and theta with the context replaced (e.g. Z3*Z3 -> Z5*Z5); labels are re-canonicalized.
LabeledDiagram relabel_context(const LabeledDiagram& d, ContextPtr ctx);

/// Diagram JSON (schema_version 1) and DOT rendering.
std::string diagram_to_json(const LabeledDiagram& d);
LabeledDiagram diagram_from_json(const std::string& text);
std::string diagram_to_dot(const LabeledDiagram& d);

}  // namespace qpf
