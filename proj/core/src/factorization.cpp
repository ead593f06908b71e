#include "qpf/factorization.hpp"

#include <cstdlib>

#include "qpf/enumerate.hpp"

namespace qpf {

namespace {

Word conjugated_letter_value(const ConjugatedLetter& d, const ContextPtr& ctx) {
  if (d.letter.factor >= ctx->size()) throw InvalidWitness("conjugated letter has no such factor");
  if (ctx->canonical_exponent(d.letter.factor, d.letter.exponent) == 0) {
    throw InvalidWitness("conjugated letter is the identity");
  }
  const auto g = Word::letter(ctx, d.letter.factor, d.letter.exponent);
  return multiply(multiply(d.conjugator, g), invert(d.conjugator));
}

void check_context(const Word& w, const ContextPtr& ctx) {
  if (!same_context(w.context(), ctx)) throw ContextMismatch("witness component from another context");
}

}  // namespace

std::int64_t QuasiperiodicFactorization::score() const noexcept {
  std::int64_t s = 0;
  for (auto n : exponents) s += n - 1;
  return s;
}

std::int64_t QuasiperiodicFactorization::exponent_total() const noexcept {
  std::int64_t s = 0;
  for (auto n : exponents) s += n;
  return s;
}

Word QuasiperiodicFactorization::term(std::size_t j) const {
  const auto& s = conjugators.at(j);
  return multiply(multiply(s, base), invert(s));
}

Word evaluate_mixed(const MixedFactorization& f) {
  if (!f.ctx) throw InvalidWitness("witness has no context");
  Word out(f.ctx);
  for (const auto& [x, y] : f.commutator_pairs) {
    check_context(x, f.ctx);
    check_context(y, f.ctx);
    out = multiply(out, commutator(x, y));
  }
  for (const auto& d : f.conjugated_letters) {
    check_context(d.conjugator, f.ctx);
    out = multiply(out, conjugated_letter_value(d, f.ctx));
  }
  return out;
}

Word evaluate_quasiperiodic(const QuasiperiodicFactorization& q) {
  if (q.exponents.empty()) throw InvalidWitness("quasiperiodic factorization needs m >= 1");
  if (q.conjugators.size() != q.exponents.size()) {
    throw InvalidWitness("conjugator and exponent counts differ");
  }
  if (is_conjugate_into_factor(q.base).conjugate_into_factor()) {
    throw InvalidWitness("base is conjugate into a free factor");
  }
  Word out(q.base.context());
  for (std::size_t j = 0; j < q.exponents.size(); ++j) {
    if (q.exponents[j] < 1) throw InvalidWitness("exponents must be positive");
    check_context(q.conjugators[j], q.base.context());
    out = multiply(out, power(q.term(j), q.exponents[j]));
  }
  return out;
}

VerdictReport verify_theorem_instance(const TheoremInstance& t) {
  VerdictReport r;
  r.lhs_score = t.lhs.score();
  r.rhs_score = t.rhs.score();

  const auto fc = is_conjugate_into_factor(t.rhs.base);
  r.hypotheses.not_conjugate_into_factor = !fc.conjugate_into_factor();
  r.hypotheses.mutually_conjugate =
      !t.rhs.exponents.empty() && t.rhs.conjugators.size() == t.rhs.exponents.size();

  const auto total = t.rhs.exponent_total();
  bool torsion = true;
  for (auto order : letter_orders(t.rhs.base)) {
    if (order != kInfinite && order <= total) torsion = false;
  }
  r.hypotheses.torsion_condition = torsion;

  try {
    const auto lhs = evaluate_mixed(t.lhs);
    Word rhs(t.rhs.base.context());
    for (std::size_t j = 0; j < t.rhs.exponents.size(); ++j) {
      rhs = multiply(rhs, power(t.rhs.term(j), t.rhs.exponents[j]));
    }
    r.equality_holds = lhs == rhs;
  } catch (const Error&) {
    r.equality_holds = false;
  }
  r.inequality_holds = r.rhs_score <= r.lhs_score - 2;
  return r;
}

bool within_radius(const Word& w, std::size_t radius) {
  if (w.size() > radius) return false;
  const auto bound = static_cast<std::int64_t>(radius);
  for (const auto& g : w.letters()) {
    if (!w.ctx().factor(g.factor).finite() && std::abs(g.exponent) > bound) return false;
  }
  return true;
}

std::vector<MixedFactorization> constructive_mixed_witnesses(const Word& w) {
  const auto& ctx = w.context();
  std::vector<MixedFactorization> out;

  MixedFactorization letterwise{ctx, {}, {}};
  for (const auto& g : w.letters()) letterwise.conjugated_letters.push_back({Word(ctx), g});
  out.push_back(letterwise);

  const auto [core, c] = cyclic_reduce(w);
  if (core.size() <= 1) {
    MixedFactorization f{ctx, {}, {}};
    if (core.size() == 1) f.conjugated_letters.push_back({c, core[0]});
    out.push_back(f);
    return out;
  }

  // core = (x y)^e with x the first letter of the primitive root.
  const auto root = primitive_root(core);
  const auto x = Word::letter(ctx, root.root[0].factor, root.root[0].exponent);
  const auto e = root.exponent;
  MixedFactorization f{ctx, {}, {}};
  const auto xe = power(x, e);
  if (!xe.empty()) f.conjugated_letters.push_back({c, xe[0]});
  for (std::int64_t i = e - 1; i >= 0; --i) {
    const auto s = multiply(c, power(x, -i));
    for (std::size_t t = 1; t < root.root.size(); ++t) {
      f.conjugated_letters.push_back({s, root.root[t]});
    }
  }
  out.push_back(f);
  return out;
}

MixedFactorization power_identity_witness(const QuasiperiodicFactorization& q) {
  const auto& ctx = q.base.context();
  MixedFactorization out{ctx, {}, {}};
  const auto [core, c] = cyclic_reduce(q.base);
  if (core.size() < 2) throw InvalidWitness("base is conjugate into a free factor");
  const auto x = Word::letter(ctx, core[0].factor, core[0].exponent);
  for (std::size_t j = 0; j < q.exponents.size(); ++j) {
    const auto cj = multiply(q.conjugators[j], c);
    const auto n = q.exponents[j];
    const auto xn = power(x, n);
    if (!xn.empty()) out.conjugated_letters.push_back({cj, xn[0]});
    for (std::int64_t i = n - 1; i >= 0; --i) {
      const auto s = multiply(cj, power(x, -i));
      for (std::size_t t = 1; t < core.size(); ++t) out.conjugated_letters.push_back({s, core[t]});
    }
  }
  return out;
}

TheoremInstance pos_infinity_fixture(std::int64_t m, std::int64_t repeat) {
  if (m < 2) throw Error("torsion-collapse fixture needs m >= 2");
  if (repeat < 1) throw Error("torsion-collapse repeat must be positive");
  const auto ctx = make_context({{m}, {kInfinite}});
  const auto a = Word::letter(ctx, 0, 1);
  const auto b = Word::letter(ctx, 1, 1);
  QuasiperiodicFactorization rhs{commutator(a, b), {}, {}};
  for (std::int64_t r = 0; r < repeat; ++r) {
    for (std::int64_t i = 0; i < m; ++i) {
      rhs.conjugators.push_back(power(a, i));
      rhs.exponents.push_back(1);
    }
  }
  return {MixedFactorization{ctx, {}, {}}, rhs};
}

QuasiperiodicFactorization random_quasiperiodic(const ContextPtr& ctx, std::mt19937_64& rng,
                                                const QuasiLimits& limits) {
  if (ctx->size() < 2 || limits.max_core < 2 || limits.min_core > limits.max_core) {
    throw Error("random_quasiperiodic needs two factors and a core length range within [2, max_core]");
  }
  if (limits.max_terms < 1 || limits.max_total < 1) throw Error("random_quasiperiodic needs m >= 1");
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  const auto lo = static_cast<std::int64_t>(std::max<std::size_t>(limits.min_core, 2));
  const auto hi = static_cast<std::int64_t>(limits.max_core);
  std::optional<Word> base;
  for (std::size_t tries = 0; !base; ++tries) {
    if (tries > 10000) throw Error("no cyclically reduced base in the requested length range");
    const auto h = random_word(ctx, rng, static_cast<std::size_t>(uniform(lo, hi)), limits.max_exponent);
    if (is_cyclically_reduced(h)) base = h;
  }
  QuasiperiodicFactorization q{*base, {}, {}};
  const auto m = uniform(1, std::min<std::int64_t>(static_cast<std::int64_t>(limits.max_terms), limits.max_total));
  auto spare = uniform(m, limits.max_total) - m;
  q.exponents.assign(static_cast<std::size_t>(m), 1);
  for (; spare > 0; --spare) ++q.exponents[static_cast<std::size_t>(uniform(0, m - 1))];
  for (std::int64_t j = 0; j < m; ++j) {
    const auto len = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(limits.max_conjugator)));
    q.conjugators.push_back(random_word(ctx, rng, len, limits.max_exponent));
  }
  return q;
}

}  // namespace qpf
