#include <doctest.h>

#include "oracle.hpp"
#include "qpf/embedding.hpp"
#include "qpf/enumerate.hpp"

using namespace qpf;

namespace {

Word W(const ContextPtr& c, const char* s) { return parse_word(s, c); }

}  // namespace

TEST_SUITE("word") {

TEST_CASE("normalize") {
  const auto zz = parse_context("Z,Z");
  CHECK(Word::normalize(std::vector<FactorElement>{}, zz).empty());
  CHECK(Word::normalize(std::vector<FactorElement>{{0, 1}, {0, -1}}, zz).empty());
  const auto z2z = parse_context("Z2,Z");
  CHECK(Word::normalize(std::vector<FactorElement>{{0, 1}, {1, 1}, {1, 1}}, z2z) == W(z2z, "a b^2"));
  CHECK(Word::normalize(std::vector<FactorElement>{{0, 2}}, z2z).empty());
  CHECK(W(parse_context("Z5,Z"), "a^-1")[0].exponent == 4);
}

TEST_CASE("multiply, invert, power") {
  const auto c = parse_context("Z,Z");
  CHECK(multiply(W(c, "a b"), W(c, "b^-1 a^-1")).empty());
  CHECK(multiply(W(c, "a"), W(c, "b")) == W(c, "a b"));
  CHECK(multiply(W(c, "a b"), W(c, "a")) == W(c, "a b a"));
  CHECK(invert(W(c, "a b")) == W(c, "b^-1 a^-1"));
  CHECK(invert(W(c, "")).empty());
  CHECK(invert(W(c, "a^3")) == W(c, "a^-3"));
  CHECK(power(W(c, "a b"), 3) == W(c, "a b a b a b"));
  CHECK(power(W(c, "a b"), 0).empty());
  CHECK(power(W(parse_context("Z3,Z"), "a"), 3).empty());
  CHECK(power(W(c, "a b"), -2) == W(c, "b^-1 a^-1 b^-1 a^-1"));
}

TEST_CASE("conjugate and commutator") {
  const auto c = parse_context("Z,Z");
  CHECK(conjugate(W(c, "b"), W(c, "a")) == W(c, "a^-1 b a"));
  CHECK(conjugate(W(c, "a b"), W(c, "")) == W(c, "a b"));
  CHECK(conjugate(W(c, "a b"), W(c, "a b")) == W(c, "a b"));
  CHECK(commutator(W(c, "a"), W(c, "b")) == W(c, "a^-1 b^-1 a b"));
  CHECK(commutator(W(c, "a"), W(c, "a")).empty());
  CHECK(commutator(W(c, "a"), W(c, "")).empty());
}

TEST_CASE("cyclic_reduce") {
  const auto c = parse_context("Z,Z");
  auto r = cyclic_reduce(W(c, "a^-1 b a"));
  CHECK(r.core == W(c, "b"));
  CHECK(r.conjugator == W(c, "a^-1"));
  r = cyclic_reduce(W(c, "b a b"));
  CHECK(r.core == W(c, "a b^2"));
  CHECK(r.conjugator == W(c, "b"));
  CHECK(multiply(multiply(r.conjugator, r.core), invert(r.conjugator)) == W(c, "b a b"));
  r = cyclic_reduce(W(c, "a b"));
  CHECK(r.core == W(c, "a b"));
  CHECK(r.conjugator.empty());
}

TEST_CASE("conjugacy") {
  const auto c = parse_context("Z,Z");
  CHECK(is_conjugate(W(c, "a^-1 b a"), W(c, "b")));
  CHECK(is_conjugate(W(c, "a b"), W(c, "b a")));
  CHECK_FALSE(is_conjugate(W(c, "a b"), W(c, "a^-1 b")));
  auto f = is_conjugate_into_factor(W(c, "a^-1 b^2 a"));
  CHECK(f.kind == FactorConjugacy::Kind::factor);
  CHECK(f.factor == 1);
  CHECK_FALSE(is_conjugate_into_factor(W(c, "a b")).conjugate_into_factor());
  CHECK(is_conjugate_into_factor(W(c, "")).kind == FactorConjugacy::Kind::identity);
}

TEST_CASE("letter orders") {
  CHECK(letter_orders(W(parse_context("Z,Z"), "a b")) == std::set<std::int64_t>{kInfinite});
  CHECK(letter_orders(W(parse_context("Z3,Z5"), "a b")) == std::set<std::int64_t>{3, 5});
  CHECK(letter_orders(W(parse_context("Z4,Z"), "a^2 b")) == std::set<std::int64_t>{2, kInfinite});
}

TEST_CASE("parse errors carry positions") {
  const auto c = parse_context("Z,Z");
  CHECK_THROWS_AS(parse_word("a q", c), ParseError);
  CHECK_THROWS_AS(parse_word("a^", c), ParseError);
  CHECK_THROWS_AS(parse_context("Z,Q"), ParseError);
  try {
    parse_word("a b^x", c);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 2);
  }
  CHECK_THROWS_AS(multiply(W(c, "a"), W(parse_context("Z3,Z3"), "a")), ContextMismatch);
}

TEST_CASE("text round trip") {
  const auto c = parse_context("x=Z3,y=Z");
  const auto w = W(c, "x y^-2 x^2 y");
  CHECK(parse_word(to_string(w), c) == w);
  CHECK(parse_context(c->to_string())->to_string() == c->to_string());
}

TEST_CASE("normal form agrees with a stack reduction oracle") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"Z,Z", "Z3,Z5", "Z2,Z", "Z,Z4,Z3"}) {
    const auto c = parse_context(spec);
    const auto o = oracle::orders_of(*c);
    std::uniform_int_distribution<std::uint32_t> fac(0, static_cast<std::uint32_t>(c->size() - 1));
    std::uniform_int_distribution<std::int64_t> ex(-4, 4);
    for (int t = 0; t < 500; ++t) {
      std::vector<FactorElement> raw;
      oracle::Raw r;
      for (int i = 0; i < 12; ++i) {
        const auto f = fac(rng);
        const auto e = ex(rng);
        raw.push_back({f, e});
        r.emplace_back(f, e);
      }
      const auto w = Word::normalize(raw, c);
      CHECK(oracle::raw_of(w) == oracle::reduce(r, o));
      CHECK(Word::normalize(w.letters(), c) == w);
    }
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(5);
  const auto c = parse_context("Z,Z3");
  for (int t = 0; t < 2000; ++t) {
    const auto u = random_word(c, rng, 6, 2);
    const auto v = random_word(c, rng, 5, 2);
    const auto w = random_word(c, rng, 4, 2);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, invert(u)).empty());
    CHECK(multiply(invert(u), u).empty());
    const auto core = cyclic_reduce(u).core;
    CHECK(core.size() <= u.size());
    CHECK(cyclic_reduce(core).core == core);
    CHECK(is_conjugate(u, conjugate(u, v)));
    CHECK(is_conjugate(conjugate(u, v), u));
    CHECK(is_conjugate(conjugate(u, v), conjugate(conjugate(u, v), w)));
  }
}

TEST_CASE("exponent sums are conjugacy invariants and vanish on commutators") {
  std::mt19937_64 rng(8);
  const auto c = parse_context("Z,Z");
  for (int t = 0; t < 500; ++t) {
    const auto u = random_word(c, rng, 5, 3);
    const auto s = random_word(c, rng, 3, 3);
    CHECK(exponent_sums(conjugate(u, s)) == exponent_sums(u));
    CHECK(exponent_sums(commutator(u, s)) == std::vector<std::int64_t>{0, 0});
  }
}

TEST_CASE("conjugacy agrees with a rotation oracle") {
  std::mt19937_64 rng(21);
  const auto c = parse_context("Z,Z");
  const auto o = oracle::orders_of(*c);
  for (int t = 0; t < 300; ++t) {
    const auto u = random_word(c, rng, 4, 1);
    const auto v = random_word(c, rng, 4, 1);
    // Oracle: v ~ u iff some s with |s| <= 4 gives s^-1 u s = v.
    bool brute = false;
    for (const auto& s : oracle::words_up_to(o, 4, 1)) {
      if (oracle::reduce(oracle::cat({oracle::inv(s), oracle::raw_of(u), s}), o) == oracle::raw_of(v)) {
        brute = true;
        break;
      }
    }
    CHECK(is_conjugate(u, v) == brute);
  }
}

TEST_CASE("embed_mu examples") {
  const auto c = parse_context("Z3,Z,Z2");
  CHECK(embed_mu(W(c, "")).empty());
  const auto g = embed_mu(W(c, "a"));
  REQUIRE(g.size() == 3);
  CHECK(g.letters()[0].side == MuLetter::Side::b);
  CHECK(g.letters()[0].exponent == -1);
  CHECK(g.letters()[1].element == W(c, "a"));
  CHECK(g.letters()[2].exponent == 1);
  const auto gh = embed_mu(W(c, "a b"));
  CHECK(gh.size() == 6);
  CHECK(is_reduced(gh));
}

TEST_CASE("embed_mu preserves reducedness, finite orders and factor conjugacy") {
  std::mt19937_64 rng(3);
  for (const char* spec : {"Z3,Z,Z2", "Z5,Z7,Z", "Z,Z,Z,Z4"}) {
    const auto c = parse_context(spec);
    for (int t = 0; t < 300; ++t) {
      const auto len = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
      const auto u = random_word(c, rng, len, 2);
      const auto mu = embed_mu(u);
      CHECK(is_reduced(mu));
      std::multiset<std::int64_t> src, img;
      const auto core = cyclic_reduce(u).core;
      for (const auto& g : core.letters()) {
        const auto n = c->element_order(g.factor, g.exponent);
        if (n != kInfinite) src.insert(n);
      }
      for (auto n : letter_orders(mu)) {
        if (n != kInfinite) img.insert(n);
      }
      CHECK(src == img);
      CHECK(is_conjugate_into_factor(u).conjugate_into_factor() == is_conjugate_into_A_or_B(mu));
    }
  }
}

}  // TEST_SUITE
