#include <json.hpp>
#include <sstream>

#include "qpf/diagram.hpp"

namespace qpf {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

Dart to_dart(const json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer dart id", 0);
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw ParseError(std::string(what) + " dart " + std::to_string(v) + " out of range", 0);
  }
  return static_cast<Dart>(v);
}

Dart key_to_dart(const std::string& key, std::size_t n, const char* what) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || v < 0 || static_cast<std::size_t>(v) >= n) {
    throw ParseError(std::string(what) + " key '" + key + "' is not a dart id", 0);
  }
  return static_cast<Dart>(v);
}

}  // namespace

std::string diagram_to_json(const LabeledDiagram& d) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["factors"] = d.ctx->to_string();
  out["darts"] = d.map.darts();
  json alpha = json::array();
  for (Dart e = 0; e < d.map.darts(); ++e) {
    if (e < d.map.alpha(e)) alpha.push_back({e, d.map.alpha(e)});
  }
  out["alpha"] = alpha;
  json sigma = json::array();
  for (const auto& v : d.map.vertices()) sigma.push_back(v);
  out["sigma"] = sigma;
  json theta = json::object();
  for (const auto& v : d.map.vertices()) {
    theta[std::to_string(v.front())] = std::string(1, side_char(d.theta[v.front()]));
  }
  out["theta"] = theta;
  json phi = json::object();
  for (Dart e = 0; e < d.map.darts(); ++e) {
    if (!d.boundary[e]) phi[std::to_string(e)] = to_string(d.phi[e], *d.ctx);
  }
  out["phi"] = phi;
  json boundary = json::array();
  for (const auto& f : d.map.faces()) {
    if (d.boundary[f.front()]) boundary.push_back(f.front());
  }
  out["boundary"] = boundary;
  return out.dump(2);
}

LabeledDiagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed diagram JSON: ") + e.what(), e.byte);
  }
  try {
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported diagram schema_version", 0);
    }
    const auto ctx = parse_context(j.value("factors", std::string("Z,Z")));
    if (ctx->size() != 2) throw ParseError("diagram context must have exactly two factors", 0);
    const auto n = j.at("darts").get<std::size_t>();

    std::vector<std::pair<Dart, Dart>> pairs;
    for (const auto& p : j.at("alpha")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("alpha entries must be dart pairs", 0);
      pairs.emplace_back(to_dart(p[0], n, "alpha"), to_dart(p[1], n, "alpha"));
    }
    if (2 * pairs.size() != n) throw ParseError("alpha must pair every dart exactly once", 0);
    std::vector<std::vector<Dart>> cycles;
    for (const auto& c : j.at("sigma")) {
      std::vector<Dart> cycle;
      for (const auto& x : c) cycle.push_back(to_dart(x, n, "sigma"));
      cycles.push_back(std::move(cycle));
    }
    auto map = build_map(cycles, pairs);

    std::vector<Side> theta(n, Side::A);
    std::vector<bool> have_theta(map.vertices().size(), false);
    for (const auto& [key, value] : j.at("theta").items()) {
      const auto dart = key_to_dart(key, n, "theta");
      const auto s = value.get<std::string>();
      if (s != "A" && s != "B") throw ParseError("theta values must be \"A\" or \"B\"", 0);
      const auto v = map.vertex_of(dart);
      have_theta[v] = true;
      for (auto x : map.vertices()[v]) theta[x] = s == "A" ? Side::A : Side::B;
    }
    for (std::size_t v = 0; v < have_theta.size(); ++v) {
      if (!have_theta[v]) {
        throw ParseError("vertex " + std::to_string(map.vertices()[v].front()) + " has no theta", 0);
      }
    }

    std::vector<bool> boundary(n, false);
    if (j.contains("boundary")) {
      for (const auto& f : j.at("boundary")) {
        const auto face = map.face_of(to_dart(f, n, "boundary"));
        for (auto e : map.faces()[face]) boundary[e] = true;
      }
    }

    std::vector<FactorElement> phi(n);
    std::vector<bool> have_phi(n, false);
    for (Dart e = 0; e < n; ++e) phi[e] = {side_factor(theta[map.alpha(e)]), 0};
    for (const auto& [key, value] : j.at("phi").items()) {
      const auto e = key_to_dart(key, n, "phi");
      const auto token = value.get<std::string>();
      have_phi[e] = true;
      if (token == "1") continue;
      phi[e] = parse_factor_element(token, *ctx);
    }
    for (Dart e = 0; e < n; ++e) {
      if (!boundary[e] && !have_phi[e]) {
        throw ParseError("corner " + std::to_string(e) + " has no phi label", 0);
      }
    }
    return LabeledDiagram(ctx, std::move(map), std::move(theta), std::move(phi), std::move(boundary));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid diagram JSON: ") + e.what(), 0);
  }
}

std::string diagram_to_dot(const LabeledDiagram& d) {
  std::ostringstream out;
  out << "graph diagram {\n";
  for (const auto& v : d.map.vertices()) {
    const auto side = side_char(d.theta[v.front()]);
    out << "  v" << v.front() << " [label=\"v" << v.front() << " " << side << "\" shape="
        << (side == 'A' ? "circle" : "box") << "];\n";
  }
  for (Dart e = 0; e < d.map.darts(); ++e) {
    const auto a = d.map.alpha(e);
    if (e > a) continue;
    const auto from = d.map.vertices()[d.map.vertex_of(e)].front();
    const auto to = d.map.vertices()[d.map.head_vertex(e)].front();
    out << "  v" << from << " -- v" << to << " [label=\"" << e << ":"
        << (d.boundary[e] ? std::string("-") : to_string(d.phi[e], *d.ctx)) << " " << a << ":"
        << (d.boundary[a] ? std::string("-") : to_string(d.phi[a], *d.ctx)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qpf
