#include "qpf/enumerate.hpp"

#include <cstdlib>

namespace qpf {

std::vector<Letter> search_alphabet(const FreeProductContext& ctx, std::int64_t max_exponent) {
  std::vector<Letter> out;
  for (std::uint32_t f = 0; f < ctx.size(); ++f) {
    const auto n = ctx.factor(f).order;
    if (n == kInfinite) {
      for (std::int64_t e = 1; e <= max_exponent; ++e) {
        out.push_back({f, e});
        out.push_back({f, -e});
      }
    } else {
      for (std::int64_t e = 1; e < n; ++e) out.push_back({f, e});
    }
  }
  return out;
}

std::int64_t letter_rank(const Letter& g, const FreeProductContext& ctx) {
  // Rank within a factor block; blocks ordered by factor index.
  std::int64_t within = 0;
  if (ctx.factor(g.factor).finite()) {
    within = g.exponent - 1;
  } else {
    within = 2 * (std::abs(g.exponent) - 1) + (g.exponent < 0 ? 1 : 0);
  }
  return (static_cast<std::int64_t>(g.factor) << 40) + within;
}

bool search_order_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto ru = letter_rank(u[i], u.ctx());
    const auto rv = letter_rank(v[i], v.ctx());
    if (ru != rv) return ru < rv;
  }
  return false;
}

namespace {

bool extend(const ContextPtr& ctx, const std::vector<Letter>& alphabet, std::size_t length,
            std::vector<Letter>& prefix, const std::function<bool(const Word&)>& visit) {
  if (prefix.size() == length) return visit(Word::normalize(prefix, ctx));
  for (const auto& g : alphabet) {
    if (!prefix.empty() && prefix.back().factor == g.factor) continue;
    prefix.push_back(g);
    const bool go_on = extend(ctx, alphabet, length, prefix, visit);
    prefix.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool for_each_word_of_length(const ContextPtr& ctx, const std::vector<Letter>& alphabet,
                             std::size_t length, const std::function<bool(const Word&)>& visit) {
  std::vector<Letter> prefix;
  prefix.reserve(length);
  return extend(ctx, alphabet, length, prefix, visit);
}

bool for_each_word(const ContextPtr& ctx, const std::vector<Letter>& alphabet,
                   std::size_t max_length, const std::function<bool(const Word&)>& visit) {
  for (std::size_t len = 0; len <= max_length; ++len) {
    if (!for_each_word_of_length(ctx, alphabet, len, visit)) return false;
  }
  return true;
}

std::vector<Word> all_words(const ContextPtr& ctx, const std::vector<Letter>& alphabet,
                            std::size_t max_length) {
  std::vector<Word> out;
  for_each_word(ctx, alphabet, max_length, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::int64_t max_abs_exponent(const Word& w) {
  std::int64_t m = 0;
  for (const auto& g : w.letters()) m = std::max(m, std::abs(g.exponent));
  return m;
}

Word random_word(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t length, std::int64_t max_exponent) {
  if (ctx->size() < 2 && length > 1) throw Error("words of length > 1 need two factors");
  const auto alphabet = search_alphabet(*ctx, max_exponent);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<FactorElement> raw;
  while (raw.size() < length) {
    const auto g = alphabet[pick(rng)];
    if (!raw.empty() && raw.back().factor == g.factor) continue;
    raw.push_back(g);
  }
  return Word::normalize(raw, ctx);
}

}  // namespace qpf
