#include "qpf/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qpf {

namespace {

void check_factor(const FreeProductContext& ctx, std::uint32_t factor) {
  if (factor >= ctx.size()) {
    throw ContextMismatch("factor index " + std::to_string(factor) + " out of range for context " +
                          ctx.to_string());
  }
}

std::int64_t inverse_exponent(const FreeProductContext& ctx, const Letter& g) {
  return ctx.canonical_exponent(g.factor, -g.exponent);
}

}  // namespace

Word Word::normalize(std::span<const FactorElement> raw, ContextPtr ctx) {
  if (!ctx) throw ContextMismatch("word without context");
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const auto& g : raw) {
    check_factor(*ctx, g.factor);
    auto e = ctx->canonical_exponent(g.factor, g.exponent);
    if (e == 0) continue;
    if (!out.empty() && out.back().factor == g.factor) {
      auto merged = ctx->canonical_exponent(g.factor, out.back().exponent + e);
      if (merged == 0) {
        out.pop_back();
      } else {
        out.back().exponent = merged;
      }
    } else {
      out.push_back({g.factor, e});
    }
  }
  return Word(std::move(ctx), std::move(out));
}

Word Word::letter(ContextPtr ctx, std::uint32_t factor, std::int64_t exponent) {
  const FactorElement g{factor, exponent};
  return normalize(std::span(&g, 1), std::move(ctx));
}

bool Word::shortlex_less(const Word& other) const {
  if (letters_.size() != other.letters_.size()) return letters_.size() < other.letters_.size();
  return letters_ < other.letters_;
}

void require_same_context(const Word& u, const Word& v) {
  if (!same_context(u.context(), v.context())) {
    throw ContextMismatch("words live in different contexts: " + u.ctx().to_string() + " vs " +
                          v.ctx().to_string());
  }
}

Word multiply(const Word& u, const Word& v) {
  require_same_context(u, v);
  std::vector<FactorElement> raw(u.letters());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::normalize(raw, u.context());
}

Word multiply(std::span<const Word> factors, const ContextPtr& ctx) {
  std::vector<FactorElement> raw;
  for (const auto& w : factors) {
    if (!same_context(w.context(), ctx)) throw ContextMismatch("product across contexts");
    raw.insert(raw.end(), w.letters().begin(), w.letters().end());
  }
  return Word::normalize(raw, ctx);
}

Word invert(const Word& u) {
  std::vector<FactorElement> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    raw.push_back({it->factor, inverse_exponent(u.ctx(), *it)});
  }
  return Word::normalize(raw, u.context());
}

Word power(const Word& u, std::int64_t n) {
  if (n == 0 || u.empty()) return Word(u.context());
  if (n < 0) return power(invert(u), -n);
  // u = c k c^-1 with k cyclically reduced, so u^n = c k^n c^-1.
  auto [core, conj] = cyclic_reduce(u);
  std::vector<FactorElement> raw(conj.letters());
  if (core.size() == 1) {
    raw.push_back({core[0].factor, core[0].exponent * n});
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      raw.insert(raw.end(), core.letters().begin(), core.letters().end());
    }
  }
  const auto conj_inv = invert(conj);
  raw.insert(raw.end(), conj_inv.letters().begin(), conj_inv.letters().end());
  return Word::normalize(raw, u.context());
}

Word conjugate(const Word& u, const Word& s) {
  require_same_context(u, s);
  const Word parts[] = {invert(s), u, s};
  return multiply(parts, u.context());
}

Word commutator(const Word& x, const Word& y) {
  require_same_context(x, y);
  const Word parts[] = {invert(x), invert(y), x, y};
  return multiply(parts, x.context());
}

CyclicCore cyclic_reduce(const Word& u) {
  const auto& ctx = u.ctx();
  std::vector<Letter> core(u.letters());
  std::vector<FactorElement> conj;
  // Peel matching ends: core -> g^-1 core g for g the first letter.
  std::size_t lo = 0;
  std::size_t hi = core.size();
  std::vector<Letter> tail_merge;
  while (hi - lo >= 2 && core[lo].factor == core[hi - 1].factor) {
    const Letter first = core[lo];
    conj.push_back(first);
    const auto merged = ctx.canonical_exponent(first.factor, core[hi - 1].exponent + first.exponent);
    ++lo;
    if (merged == 0) {
      --hi;
    } else {
      core[hi - 1].exponent = merged;
      if (hi - lo == 1) break;
    }
  }
  std::vector<Letter> kept(core.begin() + static_cast<std::ptrdiff_t>(lo),
                           core.begin() + static_cast<std::ptrdiff_t>(hi));
  return {Word::normalize(kept, u.context()), Word::normalize(conj, u.context())};
}

bool is_cyclically_reduced(const Word& u) {
  return u.size() >= 2 && u.letters().front().factor != u.letters().back().factor;
}

Word rotate(const Word& u, std::size_t k) {
  if (u.empty()) return u;
  k %= u.size();
  std::vector<FactorElement> raw(u.letters().begin() + static_cast<std::ptrdiff_t>(k),
                                 u.letters().end());
  raw.insert(raw.end(), u.letters().begin(), u.letters().begin() + static_cast<std::ptrdiff_t>(k));
  return Word::normalize(raw, u.context());
}

bool is_rotation_of(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  const auto& a = u.letters();
  const auto& b = v.letters();
  const auto n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = a[(i + k) % n] == b[i];
    if (match) return true;
  }
  return false;
}

bool is_conjugate(const Word& u, const Word& v) {
  require_same_context(u, v);
  const auto cu = cyclic_reduce(u).core;
  const auto cv = cyclic_reduce(v).core;
  if (cu.size() != cv.size()) return false;
  if (cu.size() <= 1) return cu == cv;
  return is_rotation_of(cu, cv);
}

FactorConjugacy is_conjugate_into_factor(const Word& u) {
  const auto core = cyclic_reduce(u).core;
  if (core.empty()) return {FactorConjugacy::Kind::identity, 0};
  if (core.size() == 1) return {FactorConjugacy::Kind::factor, core[0].factor};
  return {FactorConjugacy::Kind::none, 0};
}

std::set<std::int64_t> letter_orders(const Word& u) {
  std::set<std::int64_t> out;
  const auto core = cyclic_reduce(u).core;
  for (const auto& g : core.letters()) {
    out.insert(u.ctx().element_order(g.factor, g.exponent));
  }
  return out;
}

std::vector<std::int64_t> exponent_sums(const Word& u) {
  std::vector<std::int64_t> sums(u.ctx().size(), 0);
  for (const auto& g : u.letters()) sums[g.factor] += g.exponent;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    sums[i] = u.ctx().canonical_exponent(i, sums[i]);
  }
  return sums;
}

CoreRoot primitive_root(const Word& w) {
  const auto n = w.size();
  const auto& a = w.letters();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = a[i] == a[i - p];
    if (periodic) {
      std::vector<FactorElement> raw(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p));
      return {Word::normalize(raw, w.context()), static_cast<std::int64_t>(n / p)};
    }
  }
  return {w, 1};
}

Word canonical_rotation(const Word& u) {
  auto core = cyclic_reduce(u).core;
  Word best = core;
  for (std::size_t k = 1; k < core.size(); ++k) {
    auto r = rotate(core, k);
    if (r.letters() < best.letters()) best = r;
  }
  return best;
}

std::string to_string(const FactorElement& g, const FreeProductContext& ctx) {
  if (g.exponent == 0) return "1";
  std::string s = ctx.name(g.factor);
  if (g.exponent != 1) s += "^" + std::to_string(g.exponent);
  return s;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i], w.ctx());
  }
  return out;
}

namespace {

FactorElement parse_token(std::string_view token, const FreeProductContext& ctx,
                          std::size_t offset) {
  auto caret = token.find('^');
  auto name = token.substr(0, caret);
  auto factor = ctx.find(name);
  if (factor == ctx.size()) {
    throw ParseError("unknown generator '" + std::string(name) + "'", offset);
  }
  std::int64_t exponent = 1;
  if (caret != std::string_view::npos) {
    auto digits = token.substr(caret + 1);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (digits.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("bad exponent in '" + std::string(token) + "'", offset + caret + 1);
    }
  }
  return {static_cast<std::uint32_t>(factor), exponent};
}

}  // namespace

FactorElement parse_factor_element(std::string_view token, const FreeProductContext& ctx) {
  auto g = parse_token(token, ctx, 0);
  g.exponent = ctx.canonical_exponent(g.factor, g.exponent);
  return g;
}

Word parse_word(std::string_view text, const ContextPtr& ctx) {
  std::vector<FactorElement> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    auto token = text.substr(i, j - i);
    if (token == "1") {
      i = j;
      continue;
    }
    auto g = parse_token(token, *ctx, i);
    if (g.exponent == 0) throw ParseError("exponent must be nonzero", i);
    raw.push_back(g);
    i = j;
  }
  return Word::normalize(raw, ctx);
}

}  // namespace qpf
