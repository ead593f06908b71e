#include "qpf/surgery.hpp"

#include <algorithm>
#include <map>

#include "json_util.hpp"
#include "qpf/enumerate.hpp"

namespace qpf {

namespace {

constexpr Dart kFree = ~Dart{0};

FactorElement identity_at(Side s) { return {side_factor(s), 0}; }

FactorElement inverse(const FactorElement& g, const FreeProductContext& ctx) {
  return {g.factor, ctx.canonical_exponent(g.factor, -g.exponent)};
}

FactorElement product(const FactorElement& g, const FactorElement& h, const FreeProductContext& ctx) {
  if (g.exponent == 0) return {h.factor, h.exponent};
  if (h.exponent == 0) return g;
  if (g.factor != h.factor) throw SurgeryError("merging corner labels from different factors");
  return {g.factor, ctx.canonical_exponent(g.factor, g.exponent + h.exponent)};
}

// Mutable rotation system used while cutting and gluing.
struct Work {
  ContextPtr ctx;
  std::vector<Dart> alpha;
  std::vector<Dart> next;
  std::vector<Side> theta;
  std::vector<FactorElement> phi;
  std::vector<bool> boundary;
  std::vector<bool> alive;

  Dart add(Side side, FactorElement label, bool on_boundary = false) {
    alpha.push_back(kFree);
    next.push_back(kFree);
    theta.push_back(side);
    phi.push_back(label);
    boundary.push_back(on_boundary);
    alive.push_back(true);
    return static_cast<Dart>(alpha.size() - 1);
  }

  void pair(Dart x, Dart y) {
    if (alpha[x] != kFree || alpha[y] != kFree) throw SurgeryError("dart glued twice");
    if (theta[x] == theta[y]) throw SurgeryError("gluing would join two vertices of the same side");
    alpha[x] = y;
    alpha[y] = x;
  }

  static Work from(const LabeledDiagram& d) {
    Work w;
    w.ctx = d.ctx;
    w.alpha = d.map.alpha_table();
    w.next.resize(d.map.darts());
    for (Dart x = 0; x < d.map.darts(); ++x) w.next[x] = d.map.next(x);
    w.theta = d.theta;
    w.phi = d.phi;
    w.boundary = d.boundary;
    w.alive.assign(d.map.darts(), true);
    return w;
  }

  LabeledDiagram compact() const {
    std::vector<Dart> id(alpha.size(), kFree);
    Dart n = 0;
    for (Dart x = 0; x < alpha.size(); ++x) {
      if (alive[x]) id[x] = n++;
    }
    std::vector<Dart> a(n), nx(n);
    std::vector<Side> t(n);
    std::vector<FactorElement> p(n);
    std::vector<bool> b(n);
    for (Dart x = 0; x < alpha.size(); ++x) {
      if (!alive[x]) continue;
      if (alpha[x] == kFree || next[x] == kFree) throw SurgeryError("unglued dart left in a closed map");
      a[id[x]] = id[alpha[x]];
      nx[id[x]] = id[next[x]];
      t[id[x]] = theta[x];
      p[id[x]] = phi[x];
      b[id[x]] = boundary[x];
    }
    return LabeledDiagram(ctx, ClosedMap::from_faces(std::move(a), nx), std::move(t), std::move(p),
                          std::move(b));
  }
};

// Distinguished subwords of the seed word in boundary order.
struct Segment {
  enum class Kind : std::uint8_t { s, u_inv, s_inv, v_inv, t_inv, v, t, d };
  Kind kind;
  std::size_t index;
  Word word;
  std::size_t first_vertex = 0;  // position on the boundary of H
  std::size_t edges = 0;         // |word| + 1, or 2 for the empty word
};

// s with trailing letters of the letter's factor removed, so that s d s^-1 is reduced as written.
Word trimmed_conjugator(const ConjugatedLetter& d) {
  auto s = d.conjugator;
  if (!s.empty() && s.letters().back().factor == d.letter.factor) {
    s = multiply(s, invert(Word::letter(s.context(), d.letter.factor, s.letters().back().exponent)));
  }
  return s;
}

std::vector<Segment> segments_of(const SeedInput& in) {
  const auto& ctx = in.mixed.ctx;
  std::vector<Segment> out;
  const auto m = in.u_list.size();
  for (std::size_t r = 0; r < m; ++r) {
    const auto i = m - 1 - r;
    out.push_back({Segment::Kind::s, i, in.s_list[i]});
    out.push_back({Segment::Kind::u_inv, i, invert(in.u_list[i])});
    out.push_back({Segment::Kind::s_inv, i, invert(in.s_list[i])});
  }
  for (std::size_t i = 0; i < in.mixed.commutator_pairs.size(); ++i) {
    const auto& [v, t] = in.mixed.commutator_pairs[i];
    out.push_back({Segment::Kind::v_inv, i, invert(v)});
    out.push_back({Segment::Kind::t_inv, i, invert(t)});
    out.push_back({Segment::Kind::v, i, v});
    out.push_back({Segment::Kind::t, i, t});
  }
  for (std::size_t j = 0; j < in.mixed.conjugated_letters.size(); ++j) {
    const auto& d = in.mixed.conjugated_letters[j];
    const auto s = trimmed_conjugator(d);
    std::vector<FactorElement> raw(s.letters());
    raw.push_back(d.letter);
    const auto si = invert(s);
    raw.insert(raw.end(), si.letters().begin(), si.letters().end());
    out.push_back({Segment::Kind::d, j, Word::normalize(raw, ctx)});
  }
  return out;
}

Side side_of_factor(std::uint32_t f) { return f == 0 ? Side::A : Side::B; }

struct BoundaryVertex {
  Side side;
  FactorElement label;
};

// Vertices of the boundary cycle of H; dart i runs from vertex i to vertex i+1.
std::vector<BoundaryVertex> layout(std::vector<Segment>& segs) {
  std::vector<BoundaryVertex> cycle;
  // An empty segment is a path A, B, A of two identity edges.
  auto start_side = [](const Segment& s) {
    return s.word.empty() ? Side::A : other(side_of_factor(s.word[0].factor));
  };
  auto end_side = [](const Segment& s) {
    return s.word.empty() ? Side::A : other(side_of_factor(s.word.letters().back().factor));
  };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& seg = segs[i];
    seg.first_vertex = cycle.size();
    const auto first = start_side(seg);
    cycle.push_back({first, identity_at(first)});
    for (const auto& g : seg.word.letters()) cycle.push_back({side_of_factor(g.factor), g});
    if (seg.word.empty()) cycle.push_back({Side::B, identity_at(Side::B)});
    const auto last = end_side(seg);
    cycle.push_back({last, identity_at(last)});
    seg.edges = std::max<std::size_t>(seg.word.size(), 1) + 1;
    // Spacer of length 2 (same sides) or 3 (different sides) up to the next segment.
    const auto from = end_side(seg);
    const auto to = start_side(segs[(i + 1) % segs.size()]);
    cycle.push_back({other(from), identity_at(other(from))});
    if (from != to) cycle.push_back({from, identity_at(from)});
  }
  return cycle;
}

LabeledDiagram seed_from_layout(const ContextPtr& ctx, const std::vector<BoundaryVertex>& cycle) {
  const auto n = static_cast<Dart>(cycle.size());
  std::vector<Dart> alpha(2 * n), next(2 * n);
  std::vector<Side> theta(2 * n);
  std::vector<FactorElement> phi(2 * n);
  std::vector<bool> boundary(2 * n, false);
  for (Dart i = 0; i < n; ++i) {
    const auto j = (i + 1) % n;
    alpha[i] = n + i;
    alpha[n + i] = i;
    next[i] = j;
    next[n + j] = n + i;
    theta[i] = cycle[i].side;
    theta[n + i] = cycle[j].side;
    phi[i] = cycle[j].label;
    phi[n + i] = identity_at(cycle[i].side);
    boundary[n + i] = true;
  }
  return LabeledDiagram(ctx, ClosedMap::from_faces(std::move(alpha), next), std::move(theta),
                        std::move(phi), std::move(boundary));
}

std::vector<Dart> segment_darts(const Segment& s, std::size_t n) {
  std::vector<Dart> out;
  for (std::size_t t = 0; t < s.edges; ++t) out.push_back(static_cast<Dart>((s.first_vertex + t) % n));
  return out;
}

// Identifies path p with path q^-1, both of r edges: edge t of p with edge r-1-t of q.
void glue_reversed(Work& w, const std::vector<Dart>& p, const std::vector<Dart>& q) {
  if (p.size() != q.size()) throw SurgeryError("glued paths differ in length");
  for (std::size_t t = 0; t < p.size(); ++t) w.pair(p[t], q[p.size() - 1 - t]);
}

}  // namespace

std::string to_string(SurgeryStep::Kind k) {
  switch (k) {
    case SurgeryStep::Kind::identification: return "identification";
    case SurgeryStep::Kind::cap: return "cap";
    case SurgeryStep::Kind::spur: return "spur";
    case SurgeryStep::Kind::fold: return "fold";
    case SurgeryStep::Kind::cut: return "cut-and-cap";
  }
  return "unknown";
}

void validate_seed(const SeedInput& in) {
  const auto& ctx = in.mixed.ctx;
  if (!ctx || ctx->size() != 2) throw SurgeryError("seed context must have exactly two factors");
  if (in.u_list.empty()) throw SurgeryError("seed needs at least one word u_i");
  if (in.u_list.size() != in.s_list.size()) throw SurgeryError("u and s lists differ in length");
  Word w0(ctx);
  for (std::size_t i = 0; i < in.u_list.size(); ++i) {
    const auto& u = in.u_list[i];
    if (!same_context(u.context(), ctx) || !same_context(in.s_list[i].context(), ctx)) {
      throw ContextMismatch("seed words from another context");
    }
    if (!is_cyclically_reduced(u)) {
      throw SurgeryError("u_" + std::to_string(i + 1) + " = " + to_string(u) + " is not cyclically reduced");
    }
    w0 = multiply(w0, multiply(multiply(in.s_list[i], u), invert(in.s_list[i])));
  }
  if (evaluate_mixed(in.mixed) != w0) throw SurgeryError("mixed factorization does not evaluate to w0");
}

LabeledDiagram build_seed_diagram(const SeedInput& input) {
  validate_seed(input);
  auto segs = segments_of(input);
  return seed_from_layout(input.mixed.ctx, layout(segs));
}

LabeledDiagram perform_identifications(const LabeledDiagram& d0, const SeedInput& input,
                                       SurgeryTrace* trace) {
  validate_seed(input);
  auto segs = segments_of(input);
  const auto cycle = layout(segs);
  if (!(seed_from_layout(input.mixed.ctx, cycle) == d0)) {
    throw SurgeryError("seed diagram does not match the input");
  }
  const auto n = cycle.size();
  const auto& ctx = input.mixed.ctx;
  const auto k = input.mixed.commutator_pairs.size();
  const auto l = input.mixed.conjugated_letters.size();
  const auto m = input.u_list.size();

  // Start from H alone; its boundary darts are free.
  Work w;
  w.ctx = ctx;
  for (std::size_t i = 0; i < n; ++i) w.add(cycle[i].side, cycle[(i + 1) % n].label);
  for (Dart i = 0; i < n; ++i) w.next[i] = static_cast<Dart>((i + 1) % n);
  auto note = [&](SurgeryStep::Kind kind, const std::string& text) {
    if (trace) trace->steps.push_back({kind, std::nullopt, std::nullopt, std::nullopt, std::nullopt, false, text});
  };

  auto find = [&](Segment::Kind kind, std::size_t index) -> const Segment& {
    for (const auto& s : segs) {
      if (s.kind == kind && s.index == index) return s;
    }
    throw SurgeryError("missing seed segment");
  };

  for (std::size_t j = 0; j < l; ++j) {
    const auto darts = segment_darts(find(Segment::Kind::d, j), n);
    if (darts.size() % 2 != 0) throw SurgeryError("conjugated letter path has odd length");
    const std::vector<Dart> p1(darts.begin(), darts.begin() + static_cast<std::ptrdiff_t>(darts.size() / 2));
    const std::vector<Dart> p2(darts.begin() + static_cast<std::ptrdiff_t>(darts.size() / 2), darts.end());
    glue_reversed(w, p1, p2);
    note(SurgeryStep::Kind::identification, "fold d_" + std::to_string(j + 1));
  }

  for (std::size_t i = 0; i < m; ++i) {
    const auto& s = find(Segment::Kind::s, i);
    const auto& si = find(Segment::Kind::s_inv, i);
    glue_reversed(w, segment_darts(s, n), segment_darts(si, n));
    // The loop between the glued paths bounds the new face G_i.
    const auto from = (s.first_vertex + s.edges) % n;
    const auto to = si.first_vertex;
    std::vector<Dart> loop;
    for (auto x = from; x != to; x = (x + 1) % n) loop.push_back(static_cast<Dart>(x));
    std::vector<Dart> g(loop.size());
    for (std::size_t t = 0; t < loop.size(); ++t) {
      g[t] = w.add(other(w.theta[loop[t]]), FactorElement{});
      w.pair(loop[t], g[t]);
    }
    for (std::size_t t = 0; t < loop.size(); ++t) {
      w.next[g[t]] = g[(t + loop.size() - 1) % loop.size()];
      w.phi[g[t]] = t == 0 ? identity_at(w.theta[loop[0]]) : inverse(w.phi[loop[t - 1]], *ctx);
    }
    note(SurgeryStep::Kind::identification, "glue s_" + std::to_string(i + 1) + " and fill G_" +
                                                std::to_string(i + 1));
  }

  for (std::size_t i = 0; i < k; ++i) {
    glue_reversed(w, segment_darts(find(Segment::Kind::v_inv, i), n),
                  segment_darts(find(Segment::Kind::v, i), n));
    glue_reversed(w, segment_darts(find(Segment::Kind::t_inv, i), n),
                  segment_darts(find(Segment::Kind::t, i), n));
    note(SurgeryStep::Kind::identification, "glue commutator " + std::to_string(i + 1));
  }

  // Walk the remaining boundary and attach G_0 along it.
  std::vector<Dart> free;
  for (Dart x = 0; x < w.alpha.size(); ++x) {
    if (w.alpha[x] == kFree) free.push_back(x);
  }
  if (free.empty()) throw SurgeryError("seed diagram has no boundary left to cap");
  auto succ = [&](Dart x) {
    auto c = w.next[x];
    for (std::size_t guard = 0; w.alpha[c] != kFree; ++guard) {
      if (guard > w.alpha.size()) throw SurgeryError("boundary walk does not terminate");
      c = w.next[w.alpha[c]];
    }
    return c;
  };
  std::vector<Dart> walk{free.front()};
  for (auto c = succ(free.front()); c != free.front(); c = succ(c)) {
    walk.push_back(c);
    if (walk.size() > free.size()) throw SurgeryError("boundary walk does not close");
  }
  if (walk.size() != free.size()) throw SurgeryError("boundary has more than one component");
  std::map<Dart, Dart> cap;
  for (auto x : walk) {
    cap[x] = w.add(other(w.theta[x]), identity_at(w.theta[x]));
    w.pair(x, cap[x]);
  }
  for (std::size_t t = 0; t < walk.size(); ++t) {
    w.next[cap[walk[(t + 1) % walk.size()]]] = cap[walk[t]];
  }
  note(SurgeryStep::Kind::cap, "attach G_0 along " + std::to_string(walk.size()) + " edges");

  auto d4 = w.compact();
  if (!validate_diagram(d4).empty()) throw SurgeryError("identified diagram violates (D1)/(D2)");
  const auto chi = d4.map.euler_characteristic();
  if (chi != 2 - 2 * static_cast<std::int64_t>(k)) {
    throw SurgeryError("identified diagram has Euler characteristic " + std::to_string(chi));
  }
  if (r0(d4) != static_cast<std::int64_t>(l)) {
    throw SurgeryError("identified diagram has " + std::to_string(r0(d4)) + " irregular vertices");
  }
  if (!check_property_P(d4, input.u_list)) throw SurgeryError("identified diagram lacks property (P)");
  if (trace) {
    auto& last = trace->steps.back();
    last.tau_after = tau(d4);
    last.eg_after = extended_genus(d4);
  }
  return d4;
}

bool check_property_P(const LabeledDiagram& d, const std::vector<Word>& u_list) {
  std::vector<bool> good(d.map.component_count(), false);
  for (std::size_t f = 0; f < d.map.faces().size(); ++f) {
    if (d.is_boundary_face(f)) continue;
    const auto comp = d.map.component_of()[d.map.faces()[f].front()];
    if (good[comp]) continue;
    const auto corners = face_corners(d, f);
    for (const auto& u : u_list) {
      if (equivalent_mod_identity(corners, u)) {
        good[comp] = true;
        break;
      }
    }
  }
  return std::all_of(good.begin(), good.end(), [](bool b) { return b; });
}


namespace {

// Least dart, by face then dart id, whose corner label is the identity.
std::optional<Dart> identity_corner(const LabeledDiagram& d) {
  for (std::size_t f = 0; f < d.map.faces().size(); ++f) {
    if (d.is_boundary_face(f)) continue;
    std::optional<Dart> best;
    for (auto e : d.map.faces()[f]) {
      if (d.ctx->canonical_exponent(d.phi[e].factor, d.phi[e].exponent) == 0 && (!best || e < *best)) {
        best = e;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

LabeledDiagram without_component(const LabeledDiagram& d, std::size_t comp) {
  auto w = Work::from(d);
  for (Dart x = 0; x < d.map.darts(); ++x) {
    if (d.map.component_of()[x] == comp) w.alive[x] = false;
  }
  return w.compact();
}

// Removes the single component lacking (P), if any, after checking that it may be dropped.
LabeledDiagram prune(const LabeledDiagram& d, const std::vector<Word>& u_list, bool& pruned) {
  pruned = false;
  std::vector<bool> good(d.map.component_count(), false);
  for (std::size_t f = 0; f < d.map.faces().size(); ++f) {
    const auto comp = d.map.component_of()[d.map.faces()[f].front()];
    const auto corners = face_corners(d, f);
    for (const auto& u : u_list) {
      if (equivalent_mod_identity(corners, u)) good[comp] = true;
    }
  }
  std::optional<std::size_t> bad;
  for (std::size_t c = 0; c < good.size(); ++c) {
    if (good[c]) continue;
    if (bad) throw SurgeryError("more than one component lacks property (P)");
    bad = c;
  }
  if (!bad) return d;
  for (std::size_t f = 0; f < d.map.faces().size(); ++f) {
    if (d.map.component_of()[d.map.faces()[f].front()] != *bad) continue;
    if (!face_label(d, f).empty()) throw SurgeryError("pruned component has a face with nontrivial label");
  }
  if (d.map.component_euler_characteristics()[*bad] == 2) {
    std::int64_t irregular = 0;
    for (auto v : irregular_vertices(d)) {
      if (d.map.component_of()[d.map.vertices()[v].front()] == *bad) ++irregular;
    }
    if (irregular == 1) throw SurgeryError("pruned sphere has exactly one irregular vertex");
  }
  pruned = true;
  return without_component(d, *bad);
}

}  // namespace

LabeledDiagram reduce_diagram(const LabeledDiagram& input, const std::vector<Word>& u_list,
                              SurgeryTrace& trace) {
  if (!input.closed()) throw SurgeryError("reduction needs a closed diagram");
  if (!check_property_P(input, u_list)) throw SurgeryError("reduction input lacks property (P)");
  const auto& ctx = *input.ctx;
  const auto watchdog = input.map.edges() * (2 * u_list.size() + static_cast<std::size_t>(r0(input)) + 2) + 1;
  auto d = input;
  for (std::size_t steps = 0;; ++steps) {
    const auto corner = identity_corner(d);
    if (!corner) break;
    if (steps >= watchdog) throw SurgeryError("reduction exceeded its step bound");
    SurgeryStep step{SurgeryStep::Kind::spur, tau(d), std::nullopt, extended_genus(d), std::nullopt, false, {}};
    auto w = Work::from(d);
    const Dart e = *corner;
    const Dart f = w.next[e];
    if (f == w.alpha[e]) {
      const auto a = d.map.prev(e);
      if (a == f) throw SurgeryError("spur on a sphere with a single edge");
      w.next[a] = w.next[f];
      w.phi[a] = product(w.phi[a], w.phi[f], ctx);
      w.alive[e] = w.alive[f] = false;
      step.note = "remove spur " + std::to_string(e) + "/" + std::to_string(f);
    } else if (d.map.vertex_of(e) != d.map.head_vertex(f)) {
      step.kind = SurgeryStep::Kind::fold;
      const auto a = d.map.prev(e);
      const auto ae = w.alpha[e];
      const auto af = w.alpha[f];
      w.alpha[ae] = af;
      w.alpha[af] = ae;
      w.next[a] = w.next[f];
      w.phi[a] = product(w.phi[a], w.phi[f], ctx);
      w.alive[e] = w.alive[f] = false;
      step.note = "fold " + std::to_string(e) + " onto " + std::to_string(f);
    } else {
      step.kind = SurgeryStep::Kind::cut;
      const auto ae = w.alpha[e];
      const auto af = w.alpha[f];
      w.alpha[e] = f;
      w.alpha[f] = e;
      w.alpha[ae] = af;
      w.alpha[af] = ae;
      step.note = "cut along " + std::to_string(e) + "," + std::to_string(f);
    }
    auto next = w.compact();
    if (step.kind == SurgeryStep::Kind::cut) next = prune(next, u_list, step.pruned_component);
    if (!validate_diagram(next).empty()) throw SurgeryError("reduction step broke (D1)/(D2)");
    if (!check_property_P(next, u_list)) throw SurgeryError("reduction step lost property (P)");
    step.tau_after = tau(next);
    step.eg_after = extended_genus(next);
    if (!(*step.tau_after < *step.tau_before)) {
      throw SurgeryError("tau did not decrease: " + to_string(*step.tau_before) + " -> " +
                         to_string(*step.tau_after));
    }
    if (*step.eg_after > *step.eg_before) throw SurgeryError("extended genus increased");
    trace.steps.push_back(std::move(step));
    d = std::move(next);
  }
  if (!is_reduced(d)) throw SurgeryError("reduction ended on a diagram that is not reduced");
  return d;
}

PipelineResult lemma1_pipeline(const SeedInput& input) {
  PipelineResult out;
  const auto d0 = build_seed_diagram(input);
  out.closed = perform_identifications(d0, input, &out.trace);
  out.reduced = reduce_diagram(out.closed, input.u_list, out.trace);
  out.eg = extended_genus(out.reduced);
  if (out.reduced.map.faces().size() != input.u_list.size()) {
    throw SurgeryError("reduced diagram has " + std::to_string(out.reduced.map.faces().size()) +
                       " faces, expected " + std::to_string(input.u_list.size()));
  }
  // Each u_i labels its own face.
  std::vector<bool> used(out.reduced.map.faces().size(), false);
  for (const auto& u : input.u_list) {
    bool matched = false;
    for (std::size_t f = 0; f < used.size() && !matched; ++f) {
      if (!used[f] && equivalent_mod_identity(face_corners(out.reduced, f), u)) used[f] = matched = true;
    }
    if (!matched) throw SurgeryError("no face of the reduced diagram is labeled " + to_string(u));
  }
  if (out.eg > input.mixed.score()) throw SurgeryError("extended genus exceeds 2k + l");
  return out;
}

SeedInput seed_from_quasiperiodic(const QuasiperiodicFactorization& q, const MixedFactorization& mixed) {
  const auto [core, c] = cyclic_reduce(q.base);
  SeedInput out{{}, {}, mixed};
  for (std::size_t j = 0; j < q.exponents.size(); ++j) {
    if (q.exponents[j] < 1) throw SurgeryError("seed exponents must be positive");
    out.u_list.push_back(power(core, q.exponents[j]));
    out.s_list.push_back(multiply(q.conjugators[j], c));
  }
  validate_seed(out);
  return out;
}

SeedInput random_seed_input(const ContextPtr& ctx, std::mt19937_64& rng, const SeedLimits& limits) {
  if (!ctx || ctx->size() != 2) throw SurgeryError("seed context must have exactly two factors");
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const auto letters = search_alphabet(*ctx, 1);
  for (;;) {
    MixedFactorization mixed{ctx, {}, {}};
    const auto k = uniform(0, limits.max_k);
    const auto l = uniform(0, limits.max_l);
    for (std::size_t i = 0; i < k; ++i) {
      mixed.commutator_pairs.emplace_back(random_word(ctx, rng, uniform(0, limits.max_component)),
                                          random_word(ctx, rng, uniform(0, limits.max_component)));
    }
    for (std::size_t j = 0; j < l; ++j) {
      mixed.conjugated_letters.push_back({random_word(ctx, rng, uniform(0, limits.max_component)),
                                          letters[uniform(0, letters.size() - 1)]});
    }
    const auto w0 = evaluate_mixed(mixed);
    const auto m = uniform(1, limits.max_m);
    SeedInput seed{{}, {}, mixed};
    Word rest = w0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      auto u = random_word(ctx, rng, 2 * uniform(1, 2));
      if (!is_cyclically_reduced(u)) break;
      auto s = random_word(ctx, rng, uniform(0, 2));
      seed.u_list.push_back(u);
      seed.s_list.push_back(s);
      rest = multiply(invert(multiply(multiply(s, u), invert(s))), rest);
    }
    if (seed.u_list.size() + 1 != m) continue;
    const auto [core, c] = cyclic_reduce(rest);
    if (core.size() < 2) continue;
    seed.u_list.push_back(core);
    seed.s_list.push_back(c);
    return seed;
  }
}

std::string seed_to_json(const SeedInput& input) {
  nlohmann::json out;
  out["schema_version"] = 1;
  out["factors"] = input.mixed.ctx->to_string();
  nlohmann::json u = nlohmann::json::array();
  nlohmann::json s = nlohmann::json::array();
  for (const auto& x : input.u_list) u.push_back(detail::word_json(x));
  for (const auto& x : input.s_list) s.push_back(detail::word_json(x));
  out["u"] = u;
  out["s"] = s;
  out["mixed"] = detail::mixed_json(input.mixed);
  return out.dump(2);
}

SeedInput seed_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed seed JSON: ") + e.what(), e.byte);
  }
  try {
    const auto ctx = parse_context(j.at("factors").get<std::string>());
    SeedInput seed{{}, {}, detail::mixed_from_json(j.at("mixed"), ctx)};
    for (const auto& x : j.at("u")) seed.u_list.push_back(detail::word_from_json(x, ctx));
    if (j.contains("s")) {
      for (const auto& x : j.at("s")) seed.s_list.push_back(detail::word_from_json(x, ctx));
    } else {
      seed.s_list.assign(seed.u_list.size(), Word(ctx));
    }
    return seed;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid seed JSON: ") + e.what(), 0);
  }
}

std::string trace_to_json(const SurgeryTrace& trace) {
  auto tau_json = [](const std::optional<Tau>& t) -> nlohmann::json {
    if (!t) return nullptr;
    return {t->neg_chi, t->r0, t->edge_count};
  };
  auto opt = [](const std::optional<std::int64_t>& v) -> nlohmann::json {
    if (!v) return nullptr;
    return *v;
  };
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"case", to_string(s.kind)},
                     {"tau_before", tau_json(s.tau_before)},
                     {"tau_after", tau_json(s.tau_after)},
                     {"eg_before", opt(s.eg_before)},
                     {"eg_after", opt(s.eg_after)},
                     {"pruned_component", s.pruned_component},
                     {"note", s.note}});
  }
  nlohmann::json out;
  out["schema_version"] = 1;
  out["steps"] = steps;
  return out.dump(2);
}

}  // namespace qpf
