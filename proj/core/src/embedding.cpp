#include "qpf/embedding.hpp"

#include <algorithm>

namespace qpf {

namespace {

bool is_identity(const MuLetter& g) {
  return g.side == MuLetter::Side::a ? g.element.empty() : g.exponent == 0;
}

// Product of two letters of the same factor; the result may be the identity.
MuLetter merge(const MuLetter& x, const MuLetter& y) {
  MuLetter out = x;
  if (x.side == MuLetter::Side::a) {
    out.element = multiply(x.element, y.element);
  } else {
    out.exponent = x.exponent + y.exponent;
  }
  return out;
}

MuLetter inverse(const MuLetter& g) {
  MuLetter out = g;
  if (g.side == MuLetter::Side::a) {
    out.element = invert(g.element);
  } else {
    out.exponent = -g.exponent;
  }
  return out;
}

MuLetter a_letter(const Word& g) {
  MuLetter out{MuLetter::Side::a, g, 0, 0};
  return out;
}

MuLetter b_letter(const ContextPtr& source, std::uint32_t symbol, std::int64_t e) {
  MuLetter out{MuLetter::Side::b, Word(source), symbol, e};
  return out;
}

std::int64_t order_of(const MuLetter& g) {
  if (g.side == MuLetter::Side::b) return kInfinite;
  const auto core = cyclic_reduce(g.element).core;
  if (core.size() != 1) return kInfinite;
  return core.ctx().element_order(core[0].factor, core[0].exponent);
}

}  // namespace

MuWord MuWord::normalize(std::vector<MuLetter> raw, ContextPtr source) {
  MuWord w(std::move(source));
  for (auto& g : raw) {
    if (is_identity(g)) continue;
    if (!w.letters_.empty() && w.letters_.back().same_factor(g)) {
      auto m = merge(w.letters_.back(), g);
      if (is_identity(m)) {
        w.letters_.pop_back();
      } else {
        w.letters_.back() = std::move(m);
      }
    } else {
      w.letters_.push_back(std::move(g));
    }
  }
  return w;
}

MuWord multiply(const MuWord& u, const MuWord& v) {
  if (!same_context(u.source(), v.source())) throw ContextMismatch("A*B words over different sources");
  std::vector<MuLetter> raw(u.letters());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return MuWord::normalize(std::move(raw), u.source());
}

MuWord invert(const MuWord& u) {
  std::vector<MuLetter> raw;
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) raw.push_back(inverse(*it));
  return MuWord::normalize(std::move(raw), u.source());
}

MuCyclicCore cyclic_reduce(const MuWord& u) {
  MuWord core = u;
  MuWord conj(u.source());
  while (core.size() >= 2 && core.letters().front().same_factor(core.letters().back())) {
    MuWord first = MuWord::normalize({core.letters().front()}, u.source());
    conj = multiply(conj, first);
    core = multiply(multiply(invert(first), core), first);
  }
  return {core, conj};
}

bool is_reduced(const MuWord& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_identity(u.letters()[i])) return false;
    if (i && u.letters()[i - 1].same_factor(u.letters()[i])) return false;
  }
  return true;
}

bool is_conjugate_into_A_or_B(const MuWord& u) {
  const auto core = cyclic_reduce(u).core;
  if (core.size() <= 1) return true;
  return std::all_of(core.letters().begin(), core.letters().end(),
                     [](const MuLetter& g) { return g.side == MuLetter::Side::b; });
}

std::multiset<std::int64_t> letter_orders(const MuWord& u) {
  std::multiset<std::int64_t> out;
  const auto core = cyclic_reduce(u).core;
  for (const auto& g : core.letters()) out.insert(order_of(g));
  return out;
}

MuWord embed_mu(const Word& u) {
  if (u.ctx().size() < 2) throw ContextMismatch("embedding needs at least two factors");
  std::vector<MuLetter> raw;
  raw.reserve(3 * u.size());
  for (const auto& g : u.letters()) {
    raw.push_back(b_letter(u.context(), g.factor, -1));
    raw.push_back(a_letter(Word::letter(u.context(), g.factor, g.exponent)));
    raw.push_back(b_letter(u.context(), g.factor, 1));
  }
  return MuWord::normalize(std::move(raw), u.context());
}

std::string to_string(const MuWord& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& g = u.letters()[i];
    if (i) out += ' ';
    if (g.side == MuLetter::Side::a) {
      out += "[" + to_string(g.element) + "]";
    } else {
      out += "b_" + u.source()->name(g.symbol);
      if (g.exponent != 1) out += "^" + std::to_string(g.exponent);
    }
  }
  return out;
}

}  // namespace qpf
