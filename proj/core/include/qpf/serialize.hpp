#pragma once

#include <string>

#include "qpf/factorization.hpp"

namespace qpf {

/// JSON documents (schema_version 1). Words are stored in the text grammar
/// accepted by parse_word, so documents stay readable.
std::string to_json(const MixedFactorization& f);
std::string to_json(const QuasiperiodicFactorization& q);
std::string to_json(const TheoremInstance& t);
std::string to_json(const VerdictReport& r);
std::string to_json(const MixedSearchResult& r);
std::string to_json(const QuasiperiodicSearchResult& r);

MixedFactorization mixed_from_json(const std::string& text);
QuasiperiodicFactorization quasiperiodic_from_json(const std::string& text);
TheoremInstance theorem_instance_from_json(const std::string& text);

}  // namespace qpf
