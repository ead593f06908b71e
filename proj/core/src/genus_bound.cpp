#include <algorithm>
#include <numeric>

#include "qpf/factorization.hpp"

namespace qpf {

namespace {

constexpr std::size_t kMaxDiagramCore = 18;

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

struct MatchingScan {
  const Word& core;
  std::size_t half;
  std::vector<std::size_t> odd_of_even;  // dart 2i is glued to dart odd_of_even[i]
  std::vector<bool> used;
  std::int64_t best = -1;

  std::int64_t extended_genus() const {
    const auto n = core.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](std::size_t a, std::size_t b) {
      parent[find_root(parent, a)] = find_root(parent, b);
    };
    for (std::size_t i = 0; i < half; ++i) {
      const auto e = 2 * i;
      const auto o = odd_of_even[i];
      unite(e, (o + n - 1) % n);
      unite((e + n - 1) % n, o);
    }
    std::vector<std::int64_t> sum(n, 0);
    std::vector<bool> is_root(n, false);
    std::int64_t vertices = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto r = find_root(parent, c);
      if (!is_root[r]) {
        is_root[r] = true;
        ++vertices;
      }
      sum[r] += core[c].exponent;
    }
    std::int64_t irregular = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (is_root[c] && core.ctx().canonical_exponent(core[c].factor, sum[c]) != 0) ++irregular;
    }
    const auto chi = vertices - static_cast<std::int64_t>(half) + 1;
    return 2 - chi + irregular;
  }

  void run(std::size_t i) {
    if (i == half) {
      const auto eg = extended_genus();
      if (best < 0 || eg < best) best = eg;
      return;
    }
    for (std::size_t j = 0; j < half; ++j) {
      if (used[j]) continue;
      used[j] = true;
      odd_of_even[i] = 2 * j + 1;
      run(i + 1);
      used[j] = false;
    }
  }
};

}  // namespace

std::optional<std::int64_t> single_face_diagram_bound(const Word& core) {
  if (core.ctx().size() != 2) return std::nullopt;
  if (!is_cyclically_reduced(core) || core.size() > kMaxDiagramCore) return std::nullopt;
  // Two factors and cyclically reduced: corners alternate, so the length is even.
  MatchingScan scan{core, core.size() / 2, std::vector<std::size_t>(core.size() / 2),
                    std::vector<bool>(core.size() / 2, false)};
  scan.run(0);
  return scan.best;
}

std::int64_t mixed_genus_lower_bound(const Word& w, bool use_diagram_bound) {
  const auto core = cyclic_reduce(w).core;
  if (core.empty()) return 0;
  if (core.size() == 1) return 1;
  std::int64_t bound = 2;
  const auto sums = exponent_sums(w);
  const auto nonzero = std::count_if(sums.begin(), sums.end(), [](auto s) { return s != 0; });
  bound = std::max<std::int64_t>(bound, nonzero);
  if (use_diagram_bound) {
    if (auto d = single_face_diagram_bound(core)) bound = std::max(bound, *d);
  }
  return bound;
}

}  // namespace qpf
