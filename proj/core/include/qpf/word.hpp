#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpf/context.hpp"

namespace qpf {

/// Reduced word over a free product of cyclic groups.
///
/// Invariants: no letter is the identity, adjacent letters lie in distinct
/// factors, exponents are canonical for their factor. The empty word is 1.
/// Because the normal form is unique, `==` is equality in the group.
class Word {
 public:
  explicit Word(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// Reduces an arbitrary letter sequence (identity letters allowed).
  static Word normalize(std::span<const FactorElement> raw, ContextPtr ctx);
  static Word letter(ContextPtr ctx, std::uint32_t factor, std::int64_t exponent);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const ContextPtr& context() const noexcept { return ctx_; }
  const FreeProductContext& ctx() const noexcept { return *ctx_; }

  bool operator==(const Word& other) const {
    return letters_ == other.letters_ && same_context(ctx_, other.ctx_);
  }

  /// Shortlex comparison on (factor, exponent) letters; context is ignored.
  bool shortlex_less(const Word& other) const;

 private:
  Word(ContextPtr ctx, std::vector<Letter> letters)
      : ctx_(std::move(ctx)), letters_(std::move(letters)) {}

  ContextPtr ctx_;
  std::vector<Letter> letters_;
};

/// Conjugation decomposition: original = conjugator * core * conjugator^-1.
struct CyclicCore {
  Word core;
  Word conjugator;
};

/// Outcome of asking whether a word is conjugate into a free factor.
struct FactorConjugacy {
  enum class Kind { identity, factor, none };
  Kind kind = Kind::none;
  std::uint32_t factor = 0;

  bool conjugate_into_factor() const noexcept { return kind != Kind::none; }
  bool operator==(const FactorConjugacy&) const = default;
};

Word multiply(const Word& u, const Word& v);
Word multiply(std::span<const Word> factors, const ContextPtr& ctx);
Word invert(const Word& u);
Word power(const Word& u, std::int64_t n);
/// s^-1 u s.
Word conjugate(const Word& u, const Word& s);
/// x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);

CyclicCore cyclic_reduce(const Word& u);
/// Nonempty and w^2 reduced: at least two letters, first and last in distinct factors.
bool is_cyclically_reduced(const Word& u);
/// The core rotated to start at position k.
Word rotate(const Word& u, std::size_t k);
bool is_rotation_of(const Word& u, const Word& v);
bool is_conjugate(const Word& u, const Word& v);
FactorConjugacy is_conjugate_into_factor(const Word& u);

/// Orders of the letters of the cyclic core; kInfinite marks infinite order.
std::set<std::int64_t> letter_orders(const Word& u);

/// Sum of exponents per factor (reduced mod the order for finite factors).
std::vector<std::int64_t> exponent_sums(const Word& u);

/// Shortest q with q^e equal to the cyclic core, e maximal (primitive root of the core).
struct CoreRoot {
  Word root;
  std::int64_t exponent = 1;
};
CoreRoot primitive_root(const Word& cyclically_reduced);

/// Lexicographically least rotation; used for hashing only.
Word canonical_rotation(const Word& u);

/// Text grammar: whitespace separated `name` or `name^k` tokens; empty string is 1.
Word parse_word(std::string_view text, const ContextPtr& ctx);
std::string to_string(const Word& w);
std::string to_string(const FactorElement& g, const FreeProductContext& ctx);
FactorElement parse_factor_element(std::string_view token, const FreeProductContext& ctx);

void require_same_context(const Word& u, const Word& v);

}  // namespace qpf
