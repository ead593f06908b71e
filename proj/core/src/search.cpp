#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qpf/enumerate.hpp"
#include "qpf/factorization.hpp"

namespace qpf {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  // Returns false once the limit is exceeded.
  bool spend() {
    ++used_;
    return limit_ == 0 || used_ <= limit_;
  }
  bool exhausted() const noexcept { return limit_ != 0 && used_ > limit_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

std::int64_t abs_exponent_sum(const Word& w) {
  std::int64_t s = 0;
  for (const auto& g : w.letters()) s += std::abs(g.exponent);
  return s;
}

bool letter_in_bounds(const Letter& g, const FreeProductContext& ctx, std::size_t radius) {
  return ctx.factor(g.factor).finite() || std::abs(g.exponent) <= static_cast<std::int64_t>(radius);
}

// Least (in search order) word of the form left * gen^j * right within radius.
std::optional<Word> least_in_coset(const Word& left, const Word& gen, const Word& right,
                                   std::int64_t jmin, std::int64_t jmax, std::size_t radius) {
  std::optional<Word> best;
  for (std::int64_t j = jmin; j <= jmax; ++j) {
    auto cand = multiply(multiply(left, power(gen, j)), right);
    if (!within_radius(cand, radius)) continue;
    if (!best || search_order_less(cand, *best)) best = std::move(cand);
  }
  return best;
}

// Centralizer of a cyclically reduced nonempty word k: a generator and the
// admissible exponent window for candidates of size about `slack`.
struct Centralizer {
  Word generator;
  std::int64_t jmin;
  std::int64_t jmax;
};

Centralizer centralizer_of(const Word& k, std::int64_t slack) {
  const auto& ctx = k.context();
  if (k.size() == 1) {
    const auto f = k[0].factor;
    const auto n = ctx->factor(f).order;
    const auto gen = Word::letter(ctx, f, 1);
    if (n != kInfinite) return {gen, 0, n - 1};
    return {gen, -slack - 1, slack + 1};
  }
  const auto rho = primitive_root(k).root;
  const auto span = slack / static_cast<std::int64_t>(rho.size()) + 1;
  return {rho, -span, span};
}

// Offset t with rotate(k, t) == target, if any.
std::optional<std::size_t> rotation_offset(const Word& k, const Word& target) {
  if (k.size() != target.size()) return std::nullopt;
  for (std::size_t t = 0; t < std::max<std::size_t>(k.size(), 1); ++t) {
    if (rotate(k, t) == target) return t;
  }
  return std::nullopt;
}

Word prefix(const Word& w, std::size_t len) {
  std::vector<FactorElement> raw(w.letters().begin(),
                                 w.letters().begin() + static_cast<std::ptrdiff_t>(len));
  return Word::normalize(raw, w.context());
}

// Least s within radius with s * k * s^-1 == target, k cyclically reduced and nonempty.
std::optional<Word> solve_conjugator(const Word& target, const Word& k, std::size_t radius) {
  const auto [core, c] = cyclic_reduce(target);
  const auto t = rotation_offset(k, core);
  if (!t) return std::nullopt;
  // core = p^-1 k p with p the length-t prefix of k, so target = (c p^-1) k (c p^-1)^-1.
  const auto s0 = multiply(c, invert(prefix(k, *t)));
  const auto slack = static_cast<std::int64_t>(radius) + abs_exponent_sum(s0) +
                     static_cast<std::int64_t>(s0.size());
  const auto z = centralizer_of(k, slack);
  // s = s0 z^j for z in the centralizer of k.
  return least_in_coset(s0, z.generator, Word(k.context()), z.jmin, z.jmax, radius);
}

// Least y within radius with y^-1 x y == target, given x nonempty.
std::optional<Word> solve_conjugation_by(const Word& x, const Word& target, std::size_t radius) {
  const auto [k1, c1] = cyclic_reduce(x);
  const auto [k2, c2] = cyclic_reduce(target);
  const auto t = rotation_offset(k1, k2);
  if (!t) return std::nullopt;
  // k2 = p^-1 k1 p, so y0 = c1 p c2^-1 satisfies y0^-1 x y0 = target.
  const auto p = prefix(k1, *t);
  const auto y0 = multiply(multiply(c1, p), invert(c2));
  const auto slack = static_cast<std::int64_t>(radius) + 2 * abs_exponent_sum(c1) +
                     abs_exponent_sum(y0) + 2 * static_cast<std::int64_t>(c1.size()) +
                     static_cast<std::int64_t>(y0.size());
  const auto z = centralizer_of(k1, slack);
  // y = c1 z^j c1^-1 y0.
  return least_in_coset(c1, z.generator, multiply(invert(c1), y0), z.jmin, z.jmax, radius);
}

std::optional<std::pair<Word, Word>> solve_commutator(const Word& w, std::size_t radius,
                                                      Budget& budget) {
  const auto& ctx = w.context();
  const auto sums = exponent_sums(w);
  if (std::any_of(sums.begin(), sums.end(), [](auto s) { return s != 0; })) return std::nullopt;
  if (w.empty()) return std::make_pair(Word(ctx), Word(ctx));
  const auto alphabet = search_alphabet(*ctx, static_cast<std::int64_t>(radius));
  std::optional<std::pair<Word, Word>> found;
  for_each_word(ctx, alphabet, radius, [&](const Word& x) {
    if (!budget.spend()) return false;
    if (x.empty()) return true;
    // [x, y] = w  <=>  y^-1 x y = x w.
    if (auto y = solve_conjugation_by(x, multiply(x, w), radius)) {
      found = std::make_pair(x, std::move(*y));
      return false;
    }
    return true;
  });
  return found;
}

std::optional<ConjugatedLetter> solve_conjugated_letter(const Word& r, std::size_t radius) {
  const auto [core, c] = cyclic_reduce(r);
  if (core.size() != 1) return std::nullopt;
  if (!letter_in_bounds(core[0], r.ctx(), radius) || !within_radius(c, radius)) return std::nullopt;
  return ConjugatedLetter{c, core[0]};
}

bool witness_in_bounds(const MixedFactorization& f, std::size_t radius) {
  for (const auto& [x, y] : f.commutator_pairs) {
    if (!within_radius(x, radius) || !within_radius(y, radius)) return false;
  }
  for (const auto& d : f.conjugated_letters) {
    if (!within_radius(d.conjugator, radius)) return false;
    if (!letter_in_bounds(d.letter, *f.ctx, radius)) return false;
  }
  return true;
}

std::size_t count_nonzero(const std::vector<std::int64_t>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto s) { return s != 0; }));
}

// Enumerates mixed factorizations with k commutators and l conjugated letters
// whose free components have total length exactly `total`.
class MixedLevel {
 public:
  MixedLevel(const Word& w, std::size_t k, std::size_t l, std::size_t radius, Budget& budget)
      : w_(w),
        ctx_(w.context()),
        k_(k),
        l_(l),
        radius_(radius),
        budget_(budget),
        alphabet_(search_alphabet(*ctx_, static_cast<std::int64_t>(radius))),
        target_sums_(exponent_sums(w)) {
    free_pair_words_ = l_ >= 1 ? 2 * k_ : (k_ >= 1 ? 2 * (k_ - 1) : 0);
    free_letters_ = l_ >= 1 ? l_ - 1 : 0;
  }

  std::size_t max_total() const { return (free_pair_words_ + free_letters_) * radius_; }

  std::optional<MixedFactorization> run(std::size_t total) {
    result_.reset();
    words_.clear();
    letters_.clear();
    assign(0, total, Word(ctx_), target_sums_);
    return result_;
  }

 private:
  // Cached layer, or nullptr once layers grow past kMaxCached and must be streamed.
  const std::vector<Word>* words_of_length(std::size_t len) {
    while (!layers_too_big_ && by_length_.size() <= len) {
      std::vector<Word> layer;
      for_each_word_of_length(ctx_, alphabet_, by_length_.size(), [&](const Word& u) {
        layer.push_back(u);
        return layer.size() <= kMaxCached;
      });
      if (layer.size() > kMaxCached) {
        layers_too_big_ = true;
        break;
      }
      by_length_.push_back(std::move(layer));
    }
    return len < by_length_.size() ? &by_length_[len] : nullptr;
  }

  std::size_t slots() const { return free_pair_words_ + free_letters_; }

  // Residual exponent sums must still be reachable by the remaining letters.
  bool abelian_feasible(const std::vector<std::int64_t>& residual, std::size_t letters_left) const {
    const auto nz = count_nonzero(residual);
    return letters_left == 0 ? nz == 0 : nz <= letters_left;
  }

  bool assign(std::size_t slot, std::size_t remaining, const Word& product,
              const std::vector<std::int64_t>& residual) {
    if (result_ || budget_.exhausted()) return false;
    if (slot == slots()) {
      if (remaining != 0) return true;
      return leaf(product);
    }
    const bool last = slot + 1 == slots();
    const std::size_t lo = last ? remaining : 0;
    const std::size_t hi = std::min(remaining, radius_);
    for (std::size_t len = lo; len <= hi; ++len) {
      if (const auto* layer = words_of_length(len)) {
        for (const auto& u : *layer) {
          if (!place(slot, remaining - len, u, product, residual)) return false;
        }
        continue;
      }
      bool go_on = true;
      for_each_word_of_length(ctx_, alphabet_, len, [&](const Word& u) {
        go_on = place(slot, remaining - len, u, product, residual);
        return go_on;
      });
      if (!go_on) return false;
    }
    return true;
  }

  bool place(std::size_t slot, std::size_t remaining, const Word& u, const Word& product,
             const std::vector<std::int64_t>& residual) {
    if (!budget_.spend()) return false;
    if (slot < free_pair_words_) {
      words_.push_back(u);
      bool go_on = true;
      if (slot % 2 == 1) {
        const auto next = multiply(product, commutator(words_[slot - 1], u));
        go_on = assign(slot + 1, remaining, next, residual);
      } else {
        go_on = assign(slot + 1, remaining, product, residual);
      }
      words_.pop_back();
      return go_on;
    }
    // Conjugator for a free conjugated letter; the letter must not share its last factor.
    const auto letter_index = slot - free_pair_words_;
    for (const auto& g : alphabet_) {
      if (!u.empty() && u.letters().back().factor == g.factor) continue;
      auto next_residual = residual;
      next_residual[g.factor] = ctx_->canonical_exponent(g.factor, residual[g.factor] - g.exponent);
      if (!abelian_feasible(next_residual, l_ - letter_index - 1)) continue;
      letters_.push_back({u, g});
      const ConjugatedLetter& d = letters_.back();
      const auto value =
          multiply(multiply(d.conjugator, Word::letter(ctx_, g.factor, g.exponent)), invert(u));
      const bool go_on = assign(slot + 1, remaining, multiply(product, value), next_residual);
      letters_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool leaf(const Word& product) {
    if (!budget_.spend()) return false;
    const auto rest = multiply(invert(product), w_);
    MixedFactorization f{ctx_, {}, letters_};
    for (std::size_t i = 0; i + 1 < words_.size(); i += 2) f.commutator_pairs.emplace_back(words_[i], words_[i + 1]);
    if (l_ >= 1) {
      auto d = solve_conjugated_letter(rest, radius_);
      if (!d) return true;
      f.conjugated_letters.push_back(std::move(*d));
    } else if (k_ >= 1) {
      auto xy = solve_commutator(rest, radius_, budget_);
      if (!xy) return !budget_.exhausted();
      f.commutator_pairs.push_back(std::move(*xy));
    } else if (!rest.empty()) {
      return true;
    }
    result_ = std::move(f);
    return false;
  }

  const Word& w_;
  ContextPtr ctx_;
  std::size_t k_;
  std::size_t l_;
  std::size_t radius_;
  Budget& budget_;
  std::vector<Letter> alphabet_;
  std::vector<std::int64_t> target_sums_;
  std::size_t free_pair_words_ = 0;
  std::size_t free_letters_ = 0;
  std::vector<std::vector<Word>> by_length_;
  bool layers_too_big_ = false;
  static constexpr std::size_t kMaxCached = 1 << 16;
  std::vector<Word> words_;
  std::vector<ConjugatedLetter> letters_;
  std::optional<MixedFactorization> result_;
};

}  // namespace

MixedSearchResult mixed_genus_upper(const Word& w, const SearchOptions& opts) {
  MixedSearchResult res;
  res.lower_bound = mixed_genus_lower_bound(w, opts.use_diagram_bound);
  Budget budget(opts.budget);

  std::optional<MixedFactorization> best;
  if (opts.use_constructive) {
    for (auto& f : constructive_mixed_witnesses(w)) {
      if (f.score() > opts.cap || !witness_in_bounds(f, opts.radius)) continue;
      if (!best || f.score() < best->score()) best = std::move(f);
    }
  }
  const auto top = best ? std::min(opts.cap, best->score() - 1) : opts.cap;
  for (auto s = std::max<std::int64_t>(res.lower_bound, 0); s <= top; ++s) {
    for (std::int64_t k = 0; 2 * k <= s; ++k) {
      const auto l = s - 2 * k;
      const auto sums = exponent_sums(w);
      const auto nz = static_cast<std::int64_t>(count_nonzero(sums));
      if (nz > l) continue;
      MixedLevel level(w, static_cast<std::size_t>(k), static_cast<std::size_t>(l), opts.radius,
                       budget);
      for (std::size_t total = 0; total <= level.max_total(); ++total) {
        if (auto f = level.run(total)) {
          res.witness = std::move(f);
          res.score = s;
          res.exhaustive = !budget.exhausted();
          res.candidates = budget.used();
          return res;
        }
        if (budget.exhausted()) break;
      }
      if (budget.exhausted()) break;
    }
    if (budget.exhausted()) break;
  }
  res.exhaustive = !budget.exhausted();
  res.candidates = budget.used();
  if (best) {
    res.score = best->score();
    res.witness = std::move(best);
  }
  return res;
}

namespace {

// Exponent vectors of length m with entries >= 1 summing to total, largest first entry first.
void compositions(std::int64_t total, std::size_t m, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == m) {
    if (total >= 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  const auto left = static_cast<std::int64_t>(m - cur.size() - 1);
  for (auto first = total - left; first >= 1; --first) {
    cur.push_back(first);
    compositions(total - first, m, cur, out);
    cur.pop_back();
  }
}

bool base_sums_match(const std::vector<std::int64_t>& base_sums, const std::vector<std::int64_t>& target,
                     std::int64_t n, const FreeProductContext& ctx) {
  for (std::size_t f = 0; f < ctx.size(); ++f) {
    if (ctx.canonical_exponent(f, n * base_sums[f]) != target[f]) return false;
  }
  return true;
}

class QuasiLevel {
 public:
  QuasiLevel(const Word& w, std::size_t radius, Budget& budget)
      : w_(w), ctx_(w.context()), radius_(radius), budget_(budget),
        alphabet_(search_alphabet(*ctx_, static_cast<std::int64_t>(radius))),
        sums_(exponent_sums(w)) {}

  std::optional<QuasiperiodicFactorization> single(std::int64_t n) {
    const auto [core, c] = cyclic_reduce(w_);
    if (core.size() < 2) return std::nullopt;
    const auto root = primitive_root(core);
    if (root.exponent % n != 0) return std::nullopt;
    const auto q = power(root.root, root.exponent / n);
    std::vector<Word> rotations;
    for (std::size_t t = 0; t < q.size(); ++t) rotations.push_back(rotate(q, t));
    std::sort(rotations.begin(), rotations.end(), search_order_less);
    for (const auto& h : rotations) {
      if (!budget_.spend()) return std::nullopt;
      if (!within_radius(h, radius_)) continue;
      if (auto s = solve_conjugator(w_, power(h, n), radius_)) {
        return QuasiperiodicFactorization{h, {*s}, {n}};
      }
    }
    return std::nullopt;
  }

  std::optional<QuasiperiodicFactorization> multi(const std::vector<std::int64_t>& exps) {
    const auto total = std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
    std::optional<QuasiperiodicFactorization> found;
    for_each_word(ctx_, alphabet_, radius_, [&](const Word& h) {
      if (!is_cyclically_reduced(h)) return true;
      if (!base_sums_match(exponent_sums(h), sums_, total, *ctx_)) return true;
      exps_ = &exps;
      base_ = &h;
      conjugators_.clear();
      found = assign(0, Word(ctx_));
      return !found && !budget_.exhausted();
    });
    return found;
  }

 private:
  std::optional<QuasiperiodicFactorization> assign(std::size_t j, const Word& product) {
    const auto m = exps_->size();
    if (j + 1 == m) {
      if (!budget_.spend()) return std::nullopt;
      const auto rest = multiply(invert(product), w_);
      const auto s = solve_conjugator(rest, power(*base_, (*exps_)[j]), radius_);
      if (!s) return std::nullopt;
      auto conj = conjugators_;
      conj.push_back(*s);
      return QuasiperiodicFactorization{*base_, conj, *exps_};
    }
    std::optional<QuasiperiodicFactorization> found;
    for_each_word(ctx_, alphabet_, radius_, [&](const Word& s) {
      if (budget_.exhausted()) return false;
      const auto term = power(multiply(multiply(s, *base_), invert(s)), (*exps_)[j]);
      conjugators_.push_back(s);
      found = assign(j + 1, multiply(product, term));
      conjugators_.pop_back();
      return !found;
    });
    return found;
  }

  const Word& w_;
  ContextPtr ctx_;
  std::size_t radius_;
  Budget& budget_;
  std::vector<Letter> alphabet_;
  std::vector<std::int64_t> sums_;
  const std::vector<std::int64_t>* exps_ = nullptr;
  const Word* base_ = nullptr;
  std::vector<Word> conjugators_;
};

}  // namespace

QuasiperiodicSearchResult quasiperiodicity_lower(const Word& w, const SearchOptions& opts) {
  QuasiperiodicSearchResult res;
  Budget budget(opts.budget);
  const auto& ctx = w.ctx();
  const auto sums = exponent_sums(w);

  // N * ab(h) = ab(w) on every infinite factor, so N divides each nonzero sum.
  std::int64_t g = 0;
  for (std::size_t f = 0; f < ctx.size(); ++f) {
    if (!ctx.factor(f).finite()) g = std::gcd(g, std::abs(sums[f]));
  }
  if (g != 0) res.upper_bound = g - 1;

  const auto top = res.upper_bound ? std::min(opts.cap, *res.upper_bound) : opts.cap;
  QuasiLevel level(w, opts.radius, budget);
  for (auto r = top; r >= 0; --r) {
    for (std::size_t m = 1; m <= std::max<std::size_t>(opts.max_terms, 1); ++m) {
      const auto n = r + static_cast<std::int64_t>(m);
      if (g != 0 && g % n != 0) continue;
      std::optional<QuasiperiodicFactorization> found;
      if (m == 1) {
        found = level.single(n);
      } else {
        std::vector<std::vector<std::int64_t>> vectors;
        std::vector<std::int64_t> cur;
        compositions(n, m, cur, vectors);
        for (const auto& v : vectors) {
          found = level.multi(v);
          if (found || budget.exhausted()) break;
        }
      }
      if (found) {
        res.score = found->score();
        res.witness = std::move(found);
        res.exhaustive = !budget.exhausted();
        res.candidates = budget.used();
        return res;
      }
      if (budget.exhausted()) break;
    }
    if (budget.exhausted()) break;
  }
  res.exhaustive = !budget.exhausted();
  res.candidates = budget.used();
  return res;
}

std::optional<Word> search_root(const Word& w, std::int64_t n, std::size_t radius) {
  if (n < 1) throw Error("root exponent must be positive");
  const auto& ctx = w.context();
  if (w.empty()) return Word(ctx);
  const auto [core, c] = cyclic_reduce(w);
  if (core.size() >= 2) {
    // Roots of elements of infinite order are unique.
    const auto root = primitive_root(core);
    if (root.exponent % n != 0) return std::nullopt;
    auto z = multiply(multiply(c, power(root.root, root.exponent / n)), invert(c));
    if (!within_radius(z, radius)) return std::nullopt;
    return z;
  }
  const auto f = core[0].factor;
  const auto e = core[0].exponent;
  const auto order = ctx->factor(f).order;
  std::optional<Word> best;
  auto consider = [&](std::int64_t x) {
    if (ctx->canonical_exponent(f, x) == 0) return;
    auto z = multiply(multiply(c, Word::letter(ctx, f, x)), invert(c));
    if (!within_radius(z, radius)) return;
    if (!best || search_order_less(z, *best)) best = std::move(z);
  };
  if (order == kInfinite) {
    if (e % n == 0) consider(e / n);
  } else {
    for (std::int64_t x = 1; x < order; ++x) {
      if (ctx->canonical_exponent(f, n * x) == e) consider(x);
    }
  }
  return best;
}

std::optional<std::pair<Word, Word>> find_commutator_witness(const Word& w, std::size_t radius,
                                                             std::uint64_t budget) {
  Budget b(budget);
  return solve_commutator(w, radius, b);
}

}  // namespace qpf
