#include "qpf/serialize.hpp"

#include "json_util.hpp"

namespace qpf {

namespace detail {

using nlohmann::json;

json word_json(const Word& w) { return to_string(w); }

Word word_from_json(const json& j, const ContextPtr& ctx) {
  if (!j.is_string()) throw ParseError("expected a word string", 0);
  return parse_word(j.get<std::string>(), ctx);
}

json mixed_json(const MixedFactorization& f) {
  json out;
  json pairs = json::array();
  for (const auto& [x, y] : f.commutator_pairs) pairs.push_back({word_json(x), word_json(y)});
  json letters = json::array();
  for (const auto& d : f.conjugated_letters) {
    letters.push_back({{"conjugator", word_json(d.conjugator)}, {"letter", to_string(d.letter, *f.ctx)}});
  }
  out["commutators"] = pairs;
  out["letters"] = letters;
  out["k"] = f.k();
  out["l"] = f.l();
  out["score"] = f.score();
  return out;
}

MixedFactorization mixed_from_json(const json& j, const ContextPtr& ctx) {
  MixedFactorization f{ctx, {}, {}};
  for (const auto& p : j.value("commutators", json::array())) {
    if (!p.is_array() || p.size() != 2) throw ParseError("commutator entries must be [x, y]", 0);
    f.commutator_pairs.emplace_back(word_from_json(p[0], ctx), word_from_json(p[1], ctx));
  }
  for (const auto& d : j.value("letters", json::array())) {
    const auto g = parse_factor_element(d.at("letter").get<std::string>(), *ctx);
    f.conjugated_letters.push_back({word_from_json(d.value("conjugator", json("")), ctx), g});
  }
  return f;
}

json quasi_json(const QuasiperiodicFactorization& q) {
  json out;
  out["base"] = word_json(q.base);
  json conj = json::array();
  for (const auto& s : q.conjugators) conj.push_back(word_json(s));
  out["conjugators"] = conj;
  out["exponents"] = q.exponents;
  out["score"] = q.score();
  return out;
}

QuasiperiodicFactorization quasi_from_json(const json& j, const ContextPtr& ctx) {
  QuasiperiodicFactorization q{word_from_json(j.at("base"), ctx), {}, {}};
  for (const auto& s : j.at("conjugators")) q.conjugators.push_back(word_from_json(s, ctx));
  q.exponents = j.at("exponents").get<std::vector<std::int64_t>>();
  return q;
}

}  // namespace detail

namespace {

using nlohmann::json;

json envelope(const ContextPtr& ctx) {
  json out;
  out["schema_version"] = 1;
  out["factors"] = ctx->to_string();
  return out;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

template <typename F>
auto with_context(const std::string& text, F&& body) {
  const auto j = parse_document(text);
  try {
    const auto ctx = parse_context(j.at("factors").get<std::string>());
    return body(j, ctx);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what(), 0);
  }
}

}  // namespace

std::string to_json(const MixedFactorization& f) {
  auto out = envelope(f.ctx);
  out["mixed"] = detail::mixed_json(f);
  return out.dump(2);
}

std::string to_json(const QuasiperiodicFactorization& q) {
  auto out = envelope(q.base.context());
  out["quasiperiodic"] = detail::quasi_json(q);
  return out.dump(2);
}

std::string to_json(const TheoremInstance& t) {
  auto out = envelope(t.rhs.base.context());
  out["lhs"] = detail::mixed_json(t.lhs);
  out["rhs"] = detail::quasi_json(t.rhs);
  return out.dump(2);
}

std::string to_json(const VerdictReport& r) {
  json out;
  out["schema_version"] = 1;
  out["equality_holds"] = r.equality_holds;
  out["hypotheses"] = {{"torsion_condition", r.hypotheses.torsion_condition},
                       {"not_conjugate_into_factor", r.hypotheses.not_conjugate_into_factor},
                       {"mutually_conjugate", r.hypotheses.mutually_conjugate}};
  out["hypotheses_hold"] = r.hypotheses_hold();
  out["lhs_score"] = r.lhs_score;
  out["rhs_score"] = r.rhs_score;
  out["inequality_holds"] = r.inequality_holds;
  out["tight"] = r.rhs_score == r.lhs_score - 2;
  return out.dump(2);
}

std::string to_json(const MixedSearchResult& r) {
  json out;
  out["schema_version"] = 1;
  out["found"] = r.found();
  if (r.found()) {
    out["factors"] = r.witness->ctx->to_string();
    out["score"] = r.score;
    out["witness"] = detail::mixed_json(*r.witness);
  }
  out["exhaustive"] = r.exhaustive;
  out["lower_bound"] = r.lower_bound;
  out["candidates"] = r.candidates;
  return out.dump(2);
}

std::string to_json(const QuasiperiodicSearchResult& r) {
  json out;
  out["schema_version"] = 1;
  out["found"] = r.found();
  if (r.found()) {
    out["factors"] = r.witness->base.ctx().to_string();
    out["score"] = r.score;
    out["witness"] = detail::quasi_json(*r.witness);
  }
  out["exhaustive"] = r.exhaustive;
  if (r.upper_bound) out["upper_bound"] = *r.upper_bound;
  out["candidates"] = r.candidates;
  return out.dump(2);
}

MixedFactorization mixed_from_json(const std::string& text) {
  return with_context(text, [](const json& j, const ContextPtr& ctx) {
    return detail::mixed_from_json(j.at("mixed"), ctx);
  });
}

QuasiperiodicFactorization quasiperiodic_from_json(const std::string& text) {
  return with_context(text, [](const json& j, const ContextPtr& ctx) {
    return detail::quasi_from_json(j.at("quasiperiodic"), ctx);
  });
}

TheoremInstance theorem_instance_from_json(const std::string& text) {
  return with_context(text, [](const json& j, const ContextPtr& ctx) {
    return TheoremInstance{detail::mixed_from_json(j.at("lhs"), ctx),
                           detail::quasi_from_json(j.at("rhs"), ctx)};
  });
}

}  // namespace qpf
