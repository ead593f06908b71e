#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "qpf/car_motion.hpp"
#include "qpf/fixtures.hpp"
#include "qpf/serialize.hpp"
#include "qpf/surgery.hpp"

namespace qpf::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  if (!out) throw IoError("write failed for " + path);
}

struct WordArgs {
  std::string factors = "Z,Z";
  std::string word;
};

void add_word_args(CLI::App* sub, WordArgs& a) {
  sub->add_option("--factors", a.factors, "cyclic factors, e.g. Z,Z or a=Z3,b=Z5")->capture_default_str();
  sub->add_option("--word", a.word, "word such as \"a b^-1 a^2\"")->required();
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("expected an integer, got '" + item + "'", offset);
    }
    offset += item.size() + 1;
  }
  if (out.empty()) throw ParseError("expected a comma separated integer list", 0);
  return out;
}

json lemma2_json(const Lemma2Check& c) {
  return {{"holds", c.holds}, {"points", c.points}, {"bound", c.bound}, {"margin", c.margin}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasiperiodic and mixed commutator factorizations in free products of cyclic groups"};
  app.name("qpf");
  app.require_subcommand(1);
  int status = kOk;
  std::function<void()> action;

  // reduce
  WordArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "reduced form and cyclic core of a word");
  add_word_args(reduce, reduce_args);
  reduce->callback([&] {
    action = [&] {
      const auto ctx = parse_context(reduce_args.factors);
      const auto w = parse_word(reduce_args.word, ctx);
      const auto c = cyclic_reduce(w);
      json j{{"schema_version", 1},
             {"factors", ctx->to_string()},
             {"reduced", to_string(w)},
             {"length", w.size()},
             {"core", to_string(c.core)},
             {"conjugator", to_string(c.conjugator)},
             {"exponent_sums", exponent_sums(w)}};
      out << j.dump(2) << '\n';
    };
  });

  // conj
  WordArgs conj_args;
  std::string conj_other;
  auto* conj = app.add_subcommand("conj", "conjugacy test, and conjugacy into a factor");
  add_word_args(conj, conj_args);
  conj->add_option("--other", conj_other, "second word; omit to test conjugacy into a factor");
  conj->callback([&] {
    action = [&] {
      const auto ctx = parse_context(conj_args.factors);
      const auto w = parse_word(conj_args.word, ctx);
      json j{{"schema_version", 1}, {"factors", ctx->to_string()}, {"word", to_string(w)}};
      if (conj->count("--other") > 0) j["conjugate"] = is_conjugate(w, parse_word(conj_other, ctx));
      const auto f = is_conjugate_into_factor(w);
      j["conjugate_into_factor"] = f.conjugate_into_factor();
      if (f.kind == FactorConjugacy::Kind::factor) j["factor"] = ctx->name(f.factor);
      out << j.dump(2) << '\n';
    };
  });

  // mg-search / pos-search
  WordArgs search_args;
  SearchOptions opts;
  bool no_diagram_bound = false;
  bool no_constructive = false;
  auto add_search = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    add_word_args(sub, search_args);
    sub->add_option("--radius", opts.radius, "max length of every free word in a witness")->capture_default_str();
    sub->add_option("--cap", opts.cap, "largest score examined")->capture_default_str();
    sub->add_option("--budget", opts.budget, "candidate budget, 0 for none")->capture_default_str();
    return sub;
  };
  auto* mg = add_search("mg-search", "bounded search for the least mixed commutator factorization score");
  mg->add_flag("--no-diagram-bound", no_diagram_bound, "certify only with the abelian bound");
  mg->add_flag("--no-constructive", no_constructive, "skip the constructive seed witnesses");
  mg->callback([&] {
    action = [&] {
      opts.use_diagram_bound = !no_diagram_bound;
      opts.use_constructive = !no_constructive;
      const auto ctx = parse_context(search_args.factors);
      const auto r = mixed_genus_upper(parse_word(search_args.word, ctx), opts);
      out << to_json(r) << '\n';
    };
  });
  auto* pos = add_search("pos-search", "bounded search for the largest quasiperiodic factorization score");
  pos->add_option("--max-terms", opts.max_terms, "largest number of factors h_j")->capture_default_str();
  pos->callback([&] {
    action = [&] {
      const auto ctx = parse_context(search_args.factors);
      const auto r = quasiperiodicity_lower(parse_word(search_args.word, ctx), opts);
      out << to_json(r) << '\n';
    };
  });

  // root-search
  WordArgs root_args;
  std::int64_t root_n = 2;
  std::size_t root_radius = 4;
  auto* root = app.add_subcommand("root-search", "find z with z^n = w");
  add_word_args(root, root_args);
  root->add_option("--n", root_n, "exponent")->capture_default_str();
  root->add_option("--radius", root_radius, "max length of z")->capture_default_str();
  root->callback([&] {
    action = [&] {
      if (root_n < 1) throw CLI::ValidationError("--n", "must be positive");
      const auto ctx = parse_context(root_args.factors);
      const auto z = search_root(parse_word(root_args.word, ctx), root_n, root_radius);
      json j{{"schema_version", 1}, {"factors", ctx->to_string()}, {"found", z.has_value()}};
      if (z) {
        j["root"] = to_string(*z);
        j["conjugate_into_factor"] = is_conjugate_into_factor(*z).conjugate_into_factor();
      }
      out << j.dump(2) << '\n';
    };
  });

  // commutator-search
  WordArgs comm_args;
  std::size_t comm_radius = 4;
  std::uint64_t comm_budget = 0;
  auto* comm = app.add_subcommand("commutator-search", "find x, y with [x,y] = w");
  add_word_args(comm, comm_args);
  comm->add_option("--radius", comm_radius, "max length of x and y")->capture_default_str();
  comm->add_option("--budget", comm_budget, "candidate budget, 0 for none")->capture_default_str();
  comm->callback([&] {
    action = [&] {
      const auto ctx = parse_context(comm_args.factors);
      const auto w = parse_word(comm_args.word, ctx);
      const auto xy = find_commutator_witness(w, comm_radius, comm_budget);
      json j{{"schema_version", 1}, {"factors", ctx->to_string()}, {"found", xy.has_value()}};
      if (xy) {
        j["x"] = to_string(xy->first);
        j["y"] = to_string(xy->second);
        j["verified"] = commutator(xy->first, xy->second) == w;
      }
      out << j.dump(2) << '\n';
    };
  });

  // verify
  std::string verify_fixture;
  std::string verify_input;
  std::int64_t verify_param = 3;
  std::string verify_factors;
  auto* verify = app.add_subcommand("verify", "check a theorem instance: both sides, hypotheses, inequality");
  verify->add_option("--fixture", verify_fixture, "culler3, dihedral or torsion-collapse");
  verify->add_option("--input", verify_input, "theorem instance JSON");
  verify->add_option("--param", verify_param, "fixture parameter (n or m)")->capture_default_str();
  verify->add_option("--factors", verify_factors, "expected context of the instance");
  verify->callback([&] {
    action = [&] {
      if (verify_fixture.empty() == verify_input.empty()) {
        throw CLI::ValidationError("verify", "give exactly one of --fixture and --input");
      }
      TheoremInstance t = [&] {
        if (!verify_input.empty()) return theorem_instance_from_json(read_file(verify_input));
        if (verify_fixture == "culler3") return culler3();
        if (verify_fixture == "dihedral") return dihedral(verify_param);
        if (verify_fixture == "torsion-collapse") return torsion_collapse(verify_param);
        throw CLI::ValidationError("--fixture", "unknown theorem fixture '" + verify_fixture + "'");
      }();
      if (!verify_factors.empty() && !(*parse_context(verify_factors) == *t.lhs.ctx)) {
        throw ContextMismatch("instance context " + t.lhs.ctx->to_string() + " differs from --factors");
      }
      const auto v = verify_theorem_instance(t);
      out << to_json(v) << '\n';
      if (!v.equality_holds || v.counterexample()) status = kVerificationFailed;
    };
  });

  // surgery
  std::string surgery_input;
  std::string surgery_trace;
  std::string surgery_out;
  std::string surgery_dot;
  std::string surgery_factors = "Z,Z";
  std::uint64_t surgery_seed = 0;
  bool surgery_random = false;
  auto* surgery = app.add_subcommand("surgery", "build and reduce the diagram of a seed factorization");
  surgery->add_option("--input", surgery_input, "seed JSON");
  surgery->add_flag("--random", surgery_random, "draw a random seed instead of reading one");
  surgery->add_option("--factors", surgery_factors, "context for --random")->capture_default_str();
  surgery->add_option("--seed", surgery_seed, "random seed")->capture_default_str();
  surgery->add_option("--trace", surgery_trace, "write the step trace JSON here");
  surgery->add_option("--out", surgery_out, "write the reduced diagram JSON here");
  surgery->add_option("--dot", surgery_dot, "write the reduced diagram as DOT here");
  surgery->callback([&] {
    action = [&] {
      if (surgery_input.empty() == !surgery_random) {
        throw CLI::ValidationError("surgery", "give exactly one of --input and --random");
      }
      SeedInput seed = [&] {
        if (!surgery_input.empty()) return seed_from_json(read_file(surgery_input));
        std::mt19937_64 rng(surgery_seed);
        return random_seed_input(parse_context(surgery_factors), rng);
      }();
      const auto r = lemma1_pipeline(seed);
      if (!surgery_trace.empty()) write_file(surgery_trace, trace_to_json(r.trace));
      if (!surgery_out.empty()) write_file(surgery_out, diagram_to_json(r.reduced));
      if (!surgery_dot.empty()) write_file(surgery_dot, diagram_to_dot(r.reduced));
      const auto k = seed.mixed.k();
      const auto l = seed.mixed.l();
      json j{{"schema_version", 1},
             {"factors", seed.mixed.ctx->to_string()},
             {"seed", json::parse(seed_to_json(seed))},
             {"faces", r.reduced.map.faces().size()},
             {"chi", r.reduced.map.euler_characteristic()},
             {"r0", r0(r.reduced)},
             {"eg", r.eg},
             {"bound", 2 * k + l},
             {"steps", r.trace.steps.size()},
             {"reduced", is_reduced(r.reduced)}};
      out << j.dump(2) << '\n';
      if (r.eg > 2 * k + l) status = kVerificationFailed;
    };
  });

  // carmotion
  auto* carmotion = app.add_subcommand("carmotion", "car motions on closed maps");
  carmotion->require_subcommand(1);
  std::string cm_map;
  std::string cm_cars;
  std::string cm_standard;
  auto* simulate_cmd = carmotion->add_subcommand("simulate", "simulate a motion and count complete collisions");
  simulate_cmd->add_option("--map", cm_map, "diagram JSON")->required();
  simulate_cmd->add_option("--cars", cm_cars, "cars per face: one count, or a comma list in face order")
      ->required();
  simulate_cmd->add_option("--standard", cm_standard,
                           "use the standard motion for this word u; --cars then gives the exponents n_F");
  simulate_cmd->callback([&] {
    action = [&] {
      const auto d = diagram_from_json(read_file(cm_map));
      auto cars = parse_int_list(cm_cars);
      if (cars.size() == 1) cars.assign(d.map.faces().size(), cars.front());
      const auto motion =
          cm_standard.empty() ? uniform_motion(d.map, cars) : standard_motion(d, parse_word(cm_standard, d.ctx), cars);
      const auto report = simulate(d.map, motion);
      const auto check = check_lemma2(d.map, motion);
      auto j = json::parse(to_json(report, d.map));
      j["motion_valid"] = verify_motion(d.map, motion);
      j["lemma2"] = lemma2_json(check);
      if (d.closed()) {
        const auto c = classify_collisions(d, report);
        j["classification"] = {{"regular_vertex", c.regular_vertex},
                               {"irregular_vertex", c.irregular_vertex},
                               {"edge_interior", c.edge_interior}};
      }
      out << j.dump(2) << '\n';
      if (!check.holds || !j["motion_valid"].get<bool>()) status = kVerificationFailed;
    };
  });
  std::size_t fuzz_edges = 12;
  std::size_t fuzz_trials = 1000;
  std::uint64_t fuzz_seed = 0;
  auto* fuzz = carmotion->add_subcommand("fuzz", "random closed maps with random admissible uniform motions");
  fuzz->add_option("--edges", fuzz_edges, "max number of edges")->capture_default_str();
  fuzz->add_option("--trials", fuzz_trials, "number of maps")->capture_default_str();
  fuzz->add_option("--seed", fuzz_seed, "random seed")->capture_default_str();
  fuzz->callback([&] {
    action = [&] {
      if (fuzz_edges < 1) throw CLI::ValidationError("--edges", "must be positive");
      std::mt19937_64 rng(fuzz_seed);
      std::int64_t violations = 0;
      std::int64_t min_margin = std::numeric_limits<std::int64_t>::max();
      std::int64_t nontrivial = 0;
      json failures = json::array();
      for (std::size_t t = 0; t < fuzz_trials; ++t) {
        const auto e = std::uniform_int_distribution<std::size_t>(1, fuzz_edges)(rng);
        const auto m = random_closed_map(e, rng);
        const auto cars = random_admissible_cars(m, rng);
        if (std::any_of(cars.begin(), cars.end(), [](auto c) { return c > 1; })) ++nontrivial;
        const auto c = check_lemma2(m, uniform_motion(m, cars));
        min_margin = std::min(min_margin, c.margin);
        if (!c.holds) {
          ++violations;
          failures.push_back({{"trial", t}, {"alpha", m.alpha_table()}, {"sigma", m.sigma_table()}, {"cars", cars}});
        }
      }
      json j{{"schema_version", 1},
             {"trials", fuzz_trials},
             {"nontrivial", nontrivial},
             {"violations", violations},
             {"min_margin", fuzz_trials > 0 ? json(min_margin) : json(nullptr)},
             {"failures", failures}};
      out << j.dump(2) << '\n';
      if (violations > 0) status = kVerificationFailed;
    };
  });

  // diagram
  auto* diagram = app.add_subcommand("diagram", "diagram JSON utilities");
  diagram->require_subcommand(1);
  std::string dg_input;
  std::string dg_out;
  auto* validate = diagram->add_subcommand("validate", "check (D1)/(D2) and report invariants");
  validate->add_option("--input", dg_input, "diagram JSON")->required();
  validate->callback([&] {
    action = [&] {
      const auto d = diagram_from_json(read_file(dg_input));
      const auto violations = validate_diagram(d);
      json v = json::array();
      for (const auto& x : violations) {
        const char* kind = x.kind == Violation::Kind::d1 ? "D1" : x.kind == Violation::Kind::d2 ? "D2" : "structure";
        v.push_back({{"kind", kind}, {"detail", x.detail}});
      }
      json j{{"schema_version", 1},
             {"valid", violations.empty()},
             {"violations", v},
             {"vertices", d.map.vertices().size()},
             {"edges", d.map.edges()},
             {"faces", d.map.faces().size()},
             {"chi", d.map.euler_characteristic()}};
      if (violations.empty() && d.closed()) {
        j["r0"] = r0(d);
        j["eg"] = extended_genus(d);
        j["reduced"] = is_reduced(d);
        json labels = json::array();
        for (std::size_t f = 0; f < d.map.faces().size(); ++f) labels.push_back(to_string(face_label(d, f)));
        j["face_labels"] = labels;
      }
      out << j.dump(2) << '\n';
      if (!violations.empty()) status = kVerificationFailed;
    };
  });
  auto* dot = diagram->add_subcommand("dot", "render a diagram as DOT");
  dot->add_option("--input", dg_input, "diagram JSON")->required();
  dot->add_option("--out", dg_out, "output path, stdout if omitted");
  dot->callback([&] {
    action = [&] {
      const auto text = diagram_to_dot(diagram_from_json(read_file(dg_input)));
      if (dg_out.empty()) {
        out << text;
      } else {
        write_file(dg_out, text);
      }
    };
  });

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "built-in self-verifying fixtures");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "list fixture names");
  list->callback([&] {
    action = [&] {
      for (const auto& n : fixture_names()) out << n << '\n';
    };
  });
  std::string fx_name;
  std::int64_t fx_param = 3;
  std::string fx_out;
  auto* fx_run = fixtures->add_subcommand("run", "load and re-verify a fixture");
  fx_run->add_option("name", fx_name, "fixture name")->required();
  fx_run->add_option("--param", fx_param, "n for abn/dihedral, m for torsion-collapse, factor order for fig1")
      ->capture_default_str();
  fx_run->add_option("--out", fx_out, "fig1: write the diagram JSON here");
  fx_run->callback([&] {
    action = [&] {
      const auto names = fixture_names();
      if (std::find(names.begin(), names.end(), fx_name) == names.end()) {
        throw CLI::ValidationError("name", "unknown fixture '" + fx_name + "'");
      }
      const auto r = run_fixture(fx_name, fx_param);
      if (!fx_out.empty() && fx_name == "fig1") {
        write_file(fx_out, diagram_to_json(fig1(make_context({FactorSpec{fx_param}, FactorSpec{fx_param}}))));
      }
      json j{{"schema_version", 1}, {"fixture", r.name}, {"ok", r.ok}, {"detail", r.detail}};
      out << j.dump(2) << '\n';
      if (!r.ok) status = kVerificationFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (action) action();
    return status;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qpf: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "qpf: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    err << "qpf: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "qpf: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace qpf::cli
