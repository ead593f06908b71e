#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qpf/diagram.hpp"
#include "qpf/factorization.hpp"

namespace qpf {

class SurgeryError : public Error {
 public:
  using Error::Error;
};

/// w0 = s_1 u_1 s_1^-1 ... s_m u_m s_m^-1 together with a mixed factorization of w0.
struct SeedInput {
  std::vector<Word> u_list;
  std::vector<Word> s_list;
  MixedFactorization mixed;
};

/// Throws SurgeryError unless the context has two factors, every u_i is
/// cyclically reduced and both sides agree.
void validate_seed(const SeedInput& input);

struct SurgeryStep {
  enum class Kind : std::uint8_t { identification, cap, spur, fold, cut };
  Kind kind;
  std::optional<Tau> tau_before;
  std::optional<Tau> tau_after;
  std::optional<std::int64_t> eg_before;
  std::optional<std::int64_t> eg_after;
  bool pruned_component = false;
  std::string note;
};
std::string to_string(SurgeryStep::Kind k);

struct SurgeryTrace {
  std::vector<SurgeryStep> steps;
};

/// Seed diagram: the single face H plus one boundary face.
LabeledDiagram build_seed_diagram(const SeedInput& input);

/// Folds the d_j paths, glues the s_i, v_i, t_i paths, fills the faces G_i and caps with G_0.
LabeledDiagram perform_identifications(const LabeledDiagram& d0, const SeedInput& input,
                                       SurgeryTrace* trace = nullptr);

/// Every component owns a face whose label is some u_i modulo identity letters.
bool check_property_P(const LabeledDiagram& d, const std::vector<Word>& u_list);

/// Removes identity corners by spur removal, folding and cutting until the
/// diagram is reduced. Checks at every step that tau strictly decreases, eg
/// does not increase, (D1)/(D2) and property (P) hold.
LabeledDiagram reduce_diagram(const LabeledDiagram& d, const std::vector<Word>& u_list,
                              SurgeryTrace& trace);

struct PipelineResult {
  LabeledDiagram closed;   // after identifications and the cap
  LabeledDiagram reduced;  // final diagram
  std::int64_t eg = 0;
  SurgeryTrace trace;
};

/// Full construction; the reduced diagram has exactly m faces labeled u_1, ..., u_m.
PipelineResult lemma1_pipeline(const SeedInput& input);

struct SeedLimits {
  std::size_t max_m = 2;
  std::size_t max_k = 2;
  std::size_t max_l = 2;
  std::size_t max_component = 3;
};

/// Random seed over a two-factor context: a random mixed factorization is
/// evaluated and its value split into conjugates of cyclically reduced words.
/// Draws until a seed with a valid split appears.
SeedInput random_seed_input(const ContextPtr& ctx, std::mt19937_64& rng, const SeedLimits& limits = {});

/// Seed for w = prod_j s_j h^{n_j} s_j^-1 with h = c core c^-1:
/// u_j = core^{n_j} and s_j becomes s_j c.
SeedInput seed_from_quasiperiodic(const QuasiperiodicFactorization& q, const MixedFactorization& mixed);

std::string seed_to_json(const SeedInput& input);
SeedInput seed_from_json(const std::string& text);
std::string trace_to_json(const SurgeryTrace& trace);

}  // namespace qpf
