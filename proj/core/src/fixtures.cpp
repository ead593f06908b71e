#include "qpf/fixtures.hpp"

#include <sstream>

namespace qpf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw FixtureError(what);
}

}  // namespace

TheoremInstance culler3() {
  const auto ctx = parse_context("a=Z,b=Z");
  const auto w = [&](const char* s) { return parse_word(s, ctx); };
  MixedFactorization lhs{ctx,
                         {{w("a^-1 b a"), w("a^-2 b a b^-1")}, {w("b a b^-1"), w("b^2")}},
                         {}};
  QuasiperiodicFactorization rhs{commutator(w("a"), w("b")), {w("")}, {3}};
  require(evaluate_mixed(lhs) == power(commutator(w("a"), w("b")), 3), "culler3: lhs is not [a,b]^3");
  require(evaluate_mixed(lhs) == evaluate_quasiperiodic(rhs), "culler3: sides differ");
  return {std::move(lhs), std::move(rhs)};
}

WordIdentity abn(std::int64_t n) {
  require(n >= 1, "abn: n must be positive");
  const auto ctx = parse_context("a=Z,b=Z");
  const auto a = Word::letter(ctx, 0, 1);
  const auto b = Word::letter(ctx, 1, 1);
  std::vector<Word> parts{power(a, n)};
  for (auto i = n - 1; i >= 0; --i) parts.push_back(conjugate(b, power(a, i)));
  WordIdentity id{multiply(parts, ctx), power(multiply(a, b), n)};
  require(id.lhs == id.rhs, "abn: identity fails for n = " + std::to_string(n));
  return id;
}

TheoremInstance dihedral(std::int64_t n) {
  require(n >= 1, "dihedral: n must be positive");
  const auto ctx = parse_context("c=Z2,d=Z2");
  const auto c = Word::letter(ctx, 0, 1);
  const auto d = Word::letter(ctx, 1, 1);
  MixedFactorization lhs{ctx, {{c, power(multiply(c, d), n)}}, {}};
  QuasiperiodicFactorization rhs{commutator(c, d), {Word(ctx)}, {n}};
  require(evaluate_mixed(lhs) == power(commutator(c, d), n), "dihedral: [c,d]^n is not the given commutator");
  return {std::move(lhs), std::move(rhs)};
}

TheoremInstance torsion_collapse(std::int64_t m) {
  require(m >= 2, "torsion-collapse: m must be at least 2");
  auto t = pos_infinity_fixture(m);
  require(evaluate_quasiperiodic(t.rhs).empty(), "torsion-collapse: product is not trivial");
  require(evaluate_quasiperiodic(pos_infinity_fixture(m, 3).rhs).empty(),
          "torsion-collapse: repeated product is not trivial");
  return t;
}

LabeledDiagram fig1(const ContextPtr& ctx) {
  require(ctx && ctx->size() == 2, "fig1: needs a two-factor context");
  std::vector<Dart> alpha(6);
  std::vector<Dart> next(6);
  std::vector<Side> theta(6);
  std::vector<FactorElement> phi(6);
  for (Dart i = 0; i < 6; ++i) {
    alpha[i] = (i + 3) % 6;
    next[i] = (i + 1) % 6;
    // Corner e sits at head(e), the origin of e + 3, so it has the other parity.
    theta[i] = i % 2 == 1 ? Side::A : Side::B;
    phi[i] = FactorElement{i % 2 == 0 ? 0u : 1u, 1};
  }
  LabeledDiagram d(ctx, ClosedMap::from_faces(alpha, next), theta, phi);
  require(validate_diagram(d).empty(), "fig1: (D1)/(D2) violated");
  require(d.map.vertices().size() == 2 && d.map.edges() == 3 && d.map.faces().size() == 1, "fig1: wrong shape");
  const auto a = Word::letter(ctx, 0, 1);
  const auto b = Word::letter(ctx, 1, 1);
  require(face_label(d, 0) == power(multiply(a, b), 3), "fig1: face label is not (ab)^3");
  return d;
}

std::vector<std::string> fixture_names() { return {"culler3", "abn", "dihedral", "torsion-collapse", "fig1"}; }

FixtureRun run_fixture(const std::string& name, std::int64_t param) {
  FixtureRun run{name, false, ""};
  std::ostringstream out;
  try {
    if (name == "culler3") {
      const auto t = culler3();
      const auto v = verify_theorem_instance(t);
      out << "[a,b]^3 = " << to_string(evaluate_mixed(t.lhs)) << "; k = 2, sum(n_j - 1) = " << v.rhs_score
          << ", inequality " << (v.inequality_holds ? "holds" : "fails");
      run.ok = v.equality_holds && v.inequality_holds;
    } else if (name == "abn") {
      const auto id = abn(param);
      out << "(ab)^" << param << " = " << to_string(id.rhs);
      run.ok = true;
    } else if (name == "dihedral") {
      const auto t = dihedral(param);
      const auto v = verify_theorem_instance(t);
      out << "[c,d]^" << param << " = [c, (cd)^" << param << "]; torsion hypothesis "
          << (v.hypotheses.torsion_condition ? "holds" : "fails");
      run.ok = v.equality_holds;
    } else if (name == "torsion-collapse") {
      const auto t = torsion_collapse(param);
      out << "product of " << t.rhs.m() << " conjugated commutators = 1 in " << t.rhs.base.ctx().to_string();
      run.ok = true;
    } else if (name == "fig1") {
      const auto ctx = make_context({FactorSpec{param}, FactorSpec{param}});
      const auto d = fig1(ctx);
      out << "V=" << d.map.vertices().size() << " E=" << d.map.edges() << " F=" << d.map.faces().size()
          << " chi=" << d.map.euler_characteristic() << " r0=" << r0(d) << " eg=" << extended_genus(d)
          << " label=" << to_string(face_label(d, 0));
      run.ok = true;
    } else {
      out << "unknown fixture";
    }
  } catch (const Error& e) {
    out << e.what();
    run.ok = false;
  }
  run.detail = out.str();
  return run;
}

}  // namespace qpf
