#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpf/context.hpp"

namespace qpf {

class MapError : public Error {
 public:
  using Error::Error;
};

using Dart = std::uint32_t;

/// Rotation system on darts 0..2E-1.
///
/// `alpha` pairs each dart with its reverse; `sigma` rotates darts
/// counterclockwise around their origin vertex. The face successor is
/// next(d) = sigma(alpha(d)), so faces are orbits of sigma o alpha and are
/// traversed counterclockwise. head(d) is the origin of alpha(d).
class ClosedMap {
 public:
  ClosedMap() = default;
  /// Validates that alpha is a fixed-point-free involution and sigma a permutation.
  ClosedMap(std::vector<Dart> alpha, std::vector<Dart> sigma);

  /// Builds the map from alpha and the face successor permutation.
  static ClosedMap from_faces(std::vector<Dart> alpha, const std::vector<Dart>& next);

  std::size_t darts() const noexcept { return alpha_.size(); }
  std::size_t edges() const noexcept { return alpha_.size() / 2; }

  Dart alpha(Dart d) const { return alpha_.at(d); }
  Dart sigma(Dart d) const { return sigma_.at(d); }
  Dart next(Dart d) const { return sigma_[alpha_.at(d)]; }
  Dart prev(Dart d) const { return alpha_[sigma_inv_.at(d)]; }

  const std::vector<Dart>& alpha_table() const noexcept { return alpha_; }
  const std::vector<Dart>& sigma_table() const noexcept { return sigma_; }

  /// Sigma orbits, each listed from its least dart; ordered by that dart.
  const std::vector<std::vector<Dart>>& vertices() const noexcept { return vertices_; }
  /// Face orbits, each listed from its least dart; ordered by that dart.
  const std::vector<std::vector<Dart>>& faces() const noexcept { return faces_; }

  /// Index of the origin vertex of d.
  std::size_t vertex_of(Dart d) const { return vertex_of_.at(d); }
  std::size_t head_vertex(Dart d) const { return vertex_of_[alpha(d)]; }
  std::size_t face_of(Dart d) const { return face_of_.at(d); }
  std::size_t degree(std::size_t vertex) const { return vertices_.at(vertex).size(); }

  std::int64_t euler_characteristic() const noexcept;

  /// Component index per dart (components numbered by least dart).
  const std::vector<std::size_t>& component_of() const noexcept { return component_of_; }
  std::size_t component_count() const noexcept { return component_count_; }
  std::vector<std::int64_t> component_euler_characteristics() const;

  bool operator==(const ClosedMap& o) const { return alpha_ == o.alpha_ && sigma_ == o.sigma_; }

 private:
  void derive();

  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<std::vector<Dart>> vertices_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> face_of_;
  std::vector<std::size_t> component_of_;
  std::size_t component_count_ = 0;
};

/// Map from explicit sigma cycles and alpha pairs.
ClosedMap build_map(const std::vector<std::vector<Dart>>& sigma_cycles,
                    const std::vector<std::pair<Dart, Dart>>& alpha_pairs);

/// Disjoint union; darts of `b` are shifted by a.darts().
ClosedMap disjoint_union(const ClosedMap& a, const ClosedMap& b);

}  // namespace qpf
