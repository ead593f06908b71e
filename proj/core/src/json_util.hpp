#pragma once

#include <json.hpp>

#include "qpf/factorization.hpp"

namespace qpf::detail {

nlohmann::json word_json(const Word& w);
Word word_from_json(const nlohmann::json& j, const ContextPtr& ctx);

nlohmann::json mixed_json(const MixedFactorization& f);
MixedFactorization mixed_from_json(const nlohmann::json& j, const ContextPtr& ctx);

nlohmann::json quasi_json(const QuasiperiodicFactorization& q);
QuasiperiodicFactorization quasi_from_json(const nlohmann::json& j, const ContextPtr& ctx);

}  // namespace qpf::detail
