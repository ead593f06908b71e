#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qpf/word.hpp"

namespace qpf {

/// Letter of the two-factor target A*B of the embedding g -> b_i^-1 g b_i.
///
/// A-letters wrap nonidentity elements of the source free product (A is the
/// source group itself, compared by group equality). B is free on the symbols
/// b_i, one per source factor, and its letters are b_i^e with e != 0.
struct MuLetter {
  enum class Side : std::uint8_t { a, b };
  Side side = Side::a;
  Word element;          // valid when side == a
  std::uint32_t symbol = 0;  // valid when side == b
  std::int64_t exponent = 0; // valid when side == b

  bool same_factor(const MuLetter& o) const noexcept {
    if (side != o.side) return false;
    return side == Side::a || symbol == o.symbol;
  }
  bool operator==(const MuLetter& o) const {
    if (side != o.side) return false;
    if (side == Side::a) return element == o.element;
    return symbol == o.symbol && exponent == o.exponent;
  }
};

/// Reduced word in A*B where B is itself treated as a free product of infinite
/// cyclic groups <b_i>. A letter may never be adjacent to an A letter; B
/// letters on the same symbol are never adjacent.
class MuWord {
 public:
  explicit MuWord(ContextPtr source) : source_(std::move(source)) {}

  static MuWord normalize(std::vector<MuLetter> raw, ContextPtr source);

  const std::vector<MuLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const ContextPtr& source() const noexcept { return source_; }

  bool operator==(const MuWord& o) const { return letters_ == o.letters_; }

 private:
  ContextPtr source_;
  std::vector<MuLetter> letters_;
};

MuWord multiply(const MuWord& u, const MuWord& v);
MuWord invert(const MuWord& u);

struct MuCyclicCore {
  MuWord core;
  MuWord conjugator;
};
MuCyclicCore cyclic_reduce(const MuWord& u);

/// Reducedness in the A*B sense: no identity letters, no two adjacent A
/// letters, no two adjacent B-symbol letters of the same symbol.
bool is_reduced(const MuWord& u);

/// Whether u is conjugate into A or into B (B = free group on the b_i).
/// The identity counts as conjugate into a factor.
bool is_conjugate_into_A_or_B(const MuWord& u);

/// Orders of the letters of the cyclic core; kInfinite for infinite order.
std::multiset<std::int64_t> letter_orders(const MuWord& u);

/// Image of u under g -> b_i^-1 g b_i for g in factor i.
MuWord embed_mu(const Word& u);

std::string to_string(const MuWord& u);

}  // namespace qpf
