#pragma once

// Reference implementations used only by tests. They work on raw
// (factor, exponent) sequences and share no code with the library.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "qpf/word.hpp"

namespace oracle {

using Raw = std::vector<std::pair<std::uint32_t, std::int64_t>>;
using Orders = std::vector<std::int64_t>;  // 0 = infinite

inline std::int64_t mod_exp(std::int64_t e, std::int64_t n) {
  if (n == 0) return e;
  return ((e % n) + n) % n;
}

// Stack reduction.
inline Raw reduce(const Raw& raw, const Orders& orders) {
  Raw st;
  for (auto [f, e] : raw) {
    e = mod_exp(e, orders[f]);
    if (e == 0) continue;
    if (!st.empty() && st.back().first == f) {
      const auto s = mod_exp(st.back().second + e, orders[f]);
      st.pop_back();
      if (s != 0) st.emplace_back(f, s);
    } else {
      st.emplace_back(f, e);
    }
  }
  return st;
}

inline Raw inv(const Raw& u) {
  Raw out;
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

inline Raw cat(std::initializer_list<Raw> parts) {
  Raw out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline Raw raw_of(const qpf::Word& w) {
  Raw out;
  for (const auto& g : w.letters()) out.emplace_back(g.factor, g.exponent);
  return out;
}

inline Orders orders_of(const qpf::FreeProductContext& ctx) {
  Orders o;
  for (const auto& f : ctx.factors()) o.push_back(f.order);
  return o;
}

inline Raw mul(const Raw& u, const Raw& v, const Orders& o) { return reduce(cat({u, v}), o); }
inline Raw comm(const Raw& x, const Raw& y, const Orders& o) { return reduce(cat({inv(x), inv(y), x, y}), o); }
inline Raw pow(const Raw& u, std::int64_t n, const Orders& o) {
  Raw out;
  for (std::int64_t i = 0; i < n; ++i) out.insert(out.end(), u.begin(), u.end());
  return reduce(out, o);
}

// All reduced words of length <= len with |e| <= max_exp on Z factors.
inline std::vector<Raw> words_up_to(const Orders& o, std::size_t len, std::int64_t max_exp) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> letters;
  for (std::uint32_t f = 0; f < o.size(); ++f) {
    if (o[f] == 0) {
      for (std::int64_t e = 1; e <= max_exp; ++e) {
        letters.emplace_back(f, e);
        letters.emplace_back(f, -e);
      }
    } else {
      for (std::int64_t e = 1; e < o[f]; ++e) letters.emplace_back(f, e);
    }
  }
  std::vector<Raw> out{{}};
  std::vector<Raw> frontier{{}};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Raw> next;
    for (const auto& w : frontier) {
      for (const auto& g : letters) {
        if (!w.empty() && w.back().first == g.first) continue;
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Permutation representation: each generator goes to a random permutation
// whose order divides the factor order.
struct PermRep {
  std::vector<std::vector<int>> gens;
  int degree = 0;

  PermRep(const Orders& o, int deg, std::mt19937_64& rng) : degree(deg) {
    for (auto n : o) {
      std::vector<int> p(static_cast<std::size_t>(deg));
      std::iota(p.begin(), p.end(), 0);
      if (n == 0) {
        std::shuffle(p.begin(), p.end(), rng);
      } else {
        // Disjoint n-cycles on a random subset.
        std::vector<int> pts(p);
        std::shuffle(pts.begin(), pts.end(), rng);
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= pts.size(); i += static_cast<std::size_t>(n)) {
          for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
            p[static_cast<std::size_t>(pts[i + j])] = pts[i + (j + 1) % static_cast<std::size_t>(n)];
          }
        }
      }
      gens.push_back(p);
    }
  }

  std::vector<int> eval(const Raw& w) const {
    std::vector<int> x(static_cast<std::size_t>(degree));
    std::iota(x.begin(), x.end(), 0);
    for (auto [f, e] : w) {
      const auto& g = gens[f];
      std::vector<int> ginv(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) ginv[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
      const auto& step = e > 0 ? g : ginv;
      for (std::int64_t r = 0; r < (e > 0 ? e : -e); ++r) {
        for (auto& v : x) v = step[static_cast<std::size_t>(v)];
      }
    }
    return x;
  }
};

}  // namespace oracle
