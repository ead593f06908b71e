#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qpf/word.hpp"

namespace qpf {

/// Letters admissible in bounded searches, in enumeration order: factor
/// index ascending, then exponent 1, -1, 2, -2, ... up to |e| <= max_exponent
/// for infinite factors and 1..n-1 for Z_n.
std::vector<Letter> search_alphabet(const FreeProductContext& ctx, std::int64_t max_exponent);

/// Position of a letter in search_alphabet order, used for tie-breaking.
std::int64_t letter_rank(const Letter& g, const FreeProductContext& ctx);

/// Shortlex order on words induced by letter_rank.
bool search_order_less(const Word& u, const Word& v);

/// Calls `visit` on every reduced word of length exactly `length` over the
/// alphabet, in search order. Stops early when `visit` returns false; returns
/// false in that case.
bool for_each_word_of_length(const ContextPtr& ctx, const std::vector<Letter>& alphabet,
                             std::size_t length, const std::function<bool(const Word&)>& visit);

/// Same for all lengths 0..max_length, shortest first.
bool for_each_word(const ContextPtr& ctx, const std::vector<Letter>& alphabet,
                   std::size_t max_length, const std::function<bool(const Word&)>& visit);

/// Materialized list of all words of length <= max_length in search order.
std::vector<Word> all_words(const ContextPtr& ctx, const std::vector<Letter>& alphabet,
                            std::size_t max_length);

/// Max |exponent| over the letters of w (0 for the empty word).
std::int64_t max_abs_exponent(const Word& w);

/// Uniformly drawn letters from search_alphabet(ctx, max_exponent), redrawn
/// until adjacent letters lie in distinct factors; the result has exactly `length` letters.
Word random_word(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t length, std::int64_t max_exponent = 1);

}  // namespace qpf
