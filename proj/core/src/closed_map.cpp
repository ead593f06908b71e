#include "qpf/closed_map.hpp"

#include <numeric>
#include <string>

namespace qpf {

namespace {

std::vector<std::vector<Dart>> orbits(const std::vector<Dart>& perm, std::vector<std::size_t>& index) {
  std::vector<std::vector<Dart>> out;
  index.assign(perm.size(), perm.size());
  for (Dart d = 0; d < perm.size(); ++d) {
    if (index[d] != perm.size()) continue;
    std::vector<Dart> cycle;
    for (Dart x = d; index[x] == perm.size(); x = perm[x]) {
      index[x] = out.size();
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ClosedMap::ClosedMap(std::vector<Dart> alpha, std::vector<Dart> sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  const auto n = alpha_.size();
  if (n % 2 != 0) throw MapError("dart count must be even");
  if (sigma_.size() != n) throw MapError("alpha and sigma have different sizes");
  for (Dart d = 0; d < n; ++d) {
    if (alpha_[d] >= n) throw MapError("alpha maps dart " + std::to_string(d) + " out of range");
    if (alpha_[d] == d) throw MapError("alpha has a fixed point at dart " + std::to_string(d));
    if (alpha_[alpha_[d]] != d) throw MapError("alpha is not an involution at dart " + std::to_string(d));
  }
  sigma_inv_.assign(n, static_cast<Dart>(n));
  for (Dart d = 0; d < n; ++d) {
    if (sigma_[d] >= n) throw MapError("sigma maps dart " + std::to_string(d) + " out of range");
    if (sigma_inv_[sigma_[d]] != n) throw MapError("sigma is not a permutation");
    sigma_inv_[sigma_[d]] = d;
  }
  derive();
}

ClosedMap ClosedMap::from_faces(std::vector<Dart> alpha, const std::vector<Dart>& next) {
  if (next.size() != alpha.size()) throw MapError("alpha and face permutation differ in size");
  std::vector<Dart> sigma(alpha.size());
  for (Dart d = 0; d < alpha.size(); ++d) {
    if (alpha[d] >= alpha.size()) throw MapError("alpha maps out of range");
    sigma[d] = next[alpha[d]];
  }
  return ClosedMap(std::move(alpha), std::move(sigma));
}

void ClosedMap::derive() {
  vertices_ = orbits(sigma_, vertex_of_);
  std::vector<Dart> next(darts());
  for (Dart d = 0; d < darts(); ++d) next[d] = sigma_[alpha_[d]];
  faces_ = orbits(next, face_of_);

  std::vector<std::size_t> parent(darts());
  std::iota(parent.begin(), parent.end(), 0);
  for (Dart d = 0; d < darts(); ++d) {
    parent[find_root(parent, d)] = find_root(parent, alpha_[d]);
    parent[find_root(parent, d)] = find_root(parent, sigma_[d]);
  }
  component_of_.assign(darts(), darts());
  std::vector<std::size_t> id_of_root(darts(), darts());
  component_count_ = 0;
  for (Dart d = 0; d < darts(); ++d) {
    const auto r = find_root(parent, d);
    if (id_of_root[r] == darts()) id_of_root[r] = component_count_++;
    component_of_[d] = id_of_root[r];
  }
}

std::int64_t ClosedMap::euler_characteristic() const noexcept {
  return static_cast<std::int64_t>(vertices_.size()) - static_cast<std::int64_t>(edges()) +
         static_cast<std::int64_t>(faces_.size());
}

std::vector<std::int64_t> ClosedMap::component_euler_characteristics() const {
  std::vector<std::int64_t> chi(component_count_, 0);
  for (const auto& v : vertices_) ++chi[component_of_[v.front()]];
  for (const auto& f : faces_) ++chi[component_of_[f.front()]];
  for (Dart d = 0; d < darts(); ++d) {
    if (d < alpha_[d]) --chi[component_of_[d]];
  }
  return chi;
}

ClosedMap build_map(const std::vector<std::vector<Dart>>& sigma_cycles,
                    const std::vector<std::pair<Dart, Dart>>& alpha_pairs) {
  const auto n = 2 * alpha_pairs.size();
  std::vector<Dart> alpha(n, static_cast<Dart>(n));
  for (const auto& [i, j] : alpha_pairs) {
    if (i >= n || j >= n) throw MapError("alpha pair out of range");
    if (i == j) throw MapError("alpha has a fixed point at dart " + std::to_string(i));
    if (alpha[i] != n || alpha[j] != n) throw MapError("alpha pairs are not a perfect matching");
    alpha[i] = j;
    alpha[j] = i;
  }
  std::vector<Dart> sigma(n, static_cast<Dart>(n));
  std::size_t seen = 0;
  for (const auto& cycle : sigma_cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto d = cycle[i];
      if (d >= n || sigma[d] != n) throw MapError("sigma cycles are not a permutation of the darts");
      sigma[d] = cycle[(i + 1) % cycle.size()];
      ++seen;
    }
  }
  if (seen != n) throw MapError("sigma cycles do not cover every dart");
  return ClosedMap(std::move(alpha), std::move(sigma));
}

ClosedMap disjoint_union(const ClosedMap& a, const ClosedMap& b) {
  auto alpha = a.alpha_table();
  auto sigma = a.sigma_table();
  const auto shift = static_cast<Dart>(a.darts());
  for (auto d : b.alpha_table()) alpha.push_back(d + shift);
  for (auto d : b.sigma_table()) sigma.push_back(d + shift);
  return ClosedMap(std::move(alpha), std::move(sigma));
}

}  // namespace qpf
