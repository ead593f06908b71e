#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qpf/word.hpp"

namespace qpf {

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// s d s^-1 with d a nonidentity factor letter.
struct ConjugatedLetter {
  Word conjugator;
  Letter letter;
};

/// w = [x_1,y_1]...[x_k,y_k] d_1...d_l, score 2k + l.
struct MixedFactorization {
  ContextPtr ctx;
  std::vector<std::pair<Word, Word>> commutator_pairs;
  std::vector<ConjugatedLetter> conjugated_letters;

  std::int64_t k() const noexcept { return static_cast<std::int64_t>(commutator_pairs.size()); }
  std::int64_t l() const noexcept { return static_cast<std::int64_t>(conjugated_letters.size()); }
  std::int64_t score() const noexcept { return 2 * k() + l(); }
};

/// w = prod_j (s_j h s_j^-1)^{n_j}, score sum (n_j - 1).
struct QuasiperiodicFactorization {
  Word base;
  std::vector<Word> conjugators;
  std::vector<std::int64_t> exponents;

  std::int64_t m() const noexcept { return static_cast<std::int64_t>(exponents.size()); }
  std::int64_t score() const noexcept;
  std::int64_t exponent_total() const noexcept;
  /// h_j = s_j h s_j^-1.
  Word term(std::size_t j) const;
};

Word evaluate_mixed(const MixedFactorization& f);
Word evaluate_quasiperiodic(const QuasiperiodicFactorization& q);

/// c_1...c_k d_1...d_l = h_1^{n_1}...h_m^{n_m}.
struct TheoremInstance {
  MixedFactorization lhs;
  QuasiperiodicFactorization rhs;
};

struct VerdictReport {
  struct Hypotheses {
    bool torsion_condition = false;         // every letter order of h_1 exceeds sum n_j
    bool not_conjugate_into_factor = false; // h_j not conjugate into a free factor
    bool mutually_conjugate = false;        // h_j pairwise conjugate
  };

  bool equality_holds = false;
  Hypotheses hypotheses;
  std::int64_t lhs_score = 0;  // 2k + l
  std::int64_t rhs_score = 0;  // sum (n_j - 1)
  bool inequality_holds = false;

  bool hypotheses_hold() const noexcept {
    return hypotheses.torsion_condition && hypotheses.not_conjugate_into_factor &&
           hypotheses.mutually_conjugate;
  }
  /// The theorem applies (equality and hypotheses) but the inequality fails.
  bool counterexample() const noexcept {
    return equality_holds && hypotheses_hold() && !inequality_holds;
  }
};

VerdictReport verify_theorem_instance(const TheoremInstance& t);

/// Limits shared by the bounded searches.
///
/// `radius` bounds the letter length of every component word and |exponent|
/// of letters from infinite factors. `budget` caps the number of candidate
/// evaluations (0 = unlimited); a search that runs out reports
/// `exhaustive = false`.
struct SearchOptions {
  std::size_t radius = 2;
  std::int64_t cap = 6;
  std::uint64_t budget = 0;
  /// Skip scores below the single-face diagram bound (two-factor contexts).
  bool use_diagram_bound = true;
  /// Seed the search with constructive witnesses (letterwise, power identity).
  bool use_constructive = true;
  /// Upper limit on m for quasiperiodic factorizations.
  std::size_t max_terms = 4;
};

struct MixedSearchResult {
  std::optional<MixedFactorization> witness;
  std::int64_t score = -1;
  /// No in-bounds witness with a smaller score exists (or none at all when absent).
  bool exhaustive = false;
  /// Certified lower bound on mg, valid for every radius.
  std::int64_t lower_bound = 0;
  std::uint64_t candidates = 0;

  bool found() const noexcept { return witness.has_value(); }
};

MixedSearchResult mixed_genus_upper(const Word& w, const SearchOptions& opts);

struct QuasiperiodicSearchResult {
  std::optional<QuasiperiodicFactorization> witness;
  std::int64_t score = -1;
  /// No in-bounds factorization with a larger score <= cap exists.
  bool exhaustive = false;
  /// Certified upper bound on the score from exponent sums, if any.
  std::optional<std::int64_t> upper_bound;
  std::uint64_t candidates = 0;

  bool found() const noexcept { return witness.has_value(); }
};

QuasiperiodicSearchResult quasiperiodicity_lower(const Word& w, const SearchOptions& opts);

/// Some z with |z| <= radius and z^n = w; exact (roots are computed, not guessed).
std::optional<Word> search_root(const Word& w, std::int64_t n, std::size_t radius);

/// Some (x, y) with [x, y] = w, |x|, |y| <= radius; first x in search order wins.
std::optional<std::pair<Word, Word>> find_commutator_witness(const Word& w, std::size_t radius,
                                                             std::uint64_t budget = 0);

/// Certified lower bound on mg(w): trivial bounds, exponent sums and, in
/// two-factor contexts, the least extended genus over single-face reduced
/// diagrams whose face label is the cyclic core of w.
std::int64_t mixed_genus_lower_bound(const Word& w, bool use_diagram_bound = true);

/// min eg over reduced closed one-face diagrams labeled by `core` (two
/// factors, cyclically reduced, length <= 20). Absent when not applicable.
std::optional<std::int64_t> single_face_diagram_bound(const Word& core);

/// Witnesses built from identities rather than search: letter by letter and
/// (xy)^n = x^n y^{x^{n-1}} ... y^x y applied to the cyclic core.
std::vector<MixedFactorization> constructive_mixed_witnesses(const Word& w);

/// The (xy)^n identity for a quasiperiodic factorization, conjugate by conjugate.
MixedFactorization power_identity_witness(const QuasiperiodicFactorization& q);

/// 1 = [a,b][a,b]^{a^-1}...[a,b]^{a^{1-m}} in Z_m * Z, repeated `repeat` times.
TheoremInstance pos_infinity_fixture(std::int64_t m, std::int64_t repeat = 1);

/// Whether every letter of w has |exponent| <= radius (infinite factors) and |w| <= radius.
bool within_radius(const Word& w, std::size_t radius);

struct QuasiLimits {
  std::size_t min_core = 2;
  std::size_t max_core = 4;
  std::size_t max_terms = 3;
  std::int64_t max_total = 6;
  std::size_t max_conjugator = 2;
  std::int64_t max_exponent = 2;
};

/// Random factorization with a cyclically reduced base h, 1 <= m <= max_terms
/// and sum n_j <= max_total.
QuasiperiodicFactorization random_quasiperiodic(const ContextPtr& ctx, std::mt19937_64& rng,
                                                const QuasiLimits& limits = {});

}  // namespace qpf
