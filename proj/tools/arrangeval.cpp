#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrangeval/affine.hpp"
#include "arrangeval/integration.hpp"
#include "arrangeval/toric.hpp"
#include "io.hpp"

namespace {

using namespace arrangeval;
using io::Json;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kParseError = 2;
constexpr int kValidationError = 3;

struct Options {
  std::vector<std::string> inputs;
  std::string mode;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw io::ParseError("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  throw io::ParseError("unsupported --format " + o.format);
}

int emit_invalid(const Options& o, const std::string& command, const ValidationReport& v) {
  if (o.format == "csv") emit(o, io::csv_preamble(command, o.seed, v));
  else if (o.format == "svg") emit(o, "<!-- " + std::string(io::kSchema) + " " + command + " invalid -->\n");
  else emit(o, dump(io::report_header(command, o.seed, v)));
  for (const auto& m : v.violations) std::cerr << command << ": " << m << "\n";
  return kValidationError;
}

ValidationReport validate(const Arrangement& a, bool sphere) {
  return a.space == Space::Toric ? validate_toric(a) : validate_affine(a, sphere);
}

std::optional<Polytope> load_polytope(const std::string& path, std::size_t n, const std::string& name,
                                      ValidationReport& v) {
  const auto points = io::parse_points(io::read_json_file(path));
  for (const auto& p : points) {
    if (p.size() != n) {
      v.fail(name + ": vertex dimension differs from " + std::to_string(n));
      return std::nullopt;
    }
  }
  try {
    return Polytope::from_vertices(points);
  } catch (const std::invalid_argument& e) {
    v.fail(name + ": " + e.what());
    return std::nullopt;
  }
}

int cmd_filtration(const Options& o) {
  require_format(o, {"json", "csv"});
  const Arrangement a = io::parse_arrangement(io::read_json_file(o.inputs.at(0)));
  const bool sphere = o.mode == "pseudoaffine" || o.mode == "affine-compact";
  ValidationReport v = validate(a, sphere);
  if (!o.mode.empty() && o.mode != "toric" && o.mode != "affine" && !sphere) {
    throw io::ParseError("unknown --mode " + o.mode);
  }
  if (sphere && a.space != Space::Affine) v.fail("mode " + o.mode + " needs an affine arrangement");
  if (o.mode == "toric" && a.space != Space::Toric) v.fail("mode toric needs a toric arrangement");
  if (o.mode == "affine" && a.space != Space::Affine) v.fail("mode affine needs an affine arrangement");
  if (!v.valid) return emit_invalid(o, "filtration", v);
  const ArrangementComplex c = ArrangementComplex::build(a, sphere);
  const FiltrationReport r = degree_filtration(c);
  if (o.format == "csv") {
    emit(o, io::csv_preamble("filtration", o.seed, v) + io::filtration_csv(c, r));
    return kOk;
  }
  Json j = io::report_header("filtration", o.seed, v);
  j["arrangement"] = io::to_json(a);
  j["sphere"] = sphere;
  j.update(io::filtration_json(c, r));
  emit(o, dump(j));
  return kOk;
}

// Lifts a seeded random element of every V_k back to V and checks Dᵏ of the lift.
Json lift_check(const ArrangementComplex& c, const FiltrationReport& r, std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(seed);
  Json out = Json::array();
  for (std::size_t k = 0; k <= c.n(); ++k) {
    const Subspace& q = r.quotients[k];
    if (q.dim() == 0) continue;
    FlagFunction f{k, Vec(q.ambient_dim())};
    for (std::size_t i = 0; i < q.dim(); ++i) {
      const long coeff = static_cast<long>(rng() % 7) - 3;
      f.values = add(f.values, scale(q.basis_vector(i), Rational(coeff)));
    }
    const Vec g = c.space() == Space::Toric ? lift_to_chain(c, f, {AnchorStrategy::LexMin, seed}) : lift_direct(c, f);
    const bool holds = leray_power(c, g, k).values == flag_embed(c, f).values;
    ok = ok && holds;
    out.push_back(Json{{"k", k}, {"flag_function", io::to_json(f.values)}, {"chain", io::to_json(g)}, {"holds", holds}});
  }
  return out;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json", "csv"});
  const Arrangement a = io::parse_arrangement(io::read_json_file(o.inputs.at(0)));
  VerifyMode mode = a.space == Space::Toric ? VerifyMode::Toric : VerifyMode::Pseudoaffine;
  if (o.mode == "toric") mode = VerifyMode::Toric;
  else if (o.mode == "pseudoaffine") mode = VerifyMode::Pseudoaffine;
  else if (o.mode == "affine-compact") mode = VerifyMode::AffineCompact;
  else if (!o.mode.empty()) throw io::ParseError("unknown --mode " + o.mode);
  const bool sphere = mode != VerifyMode::Toric;
  ValidationReport v = validate(a, sphere);
  if (sphere && a.space != Space::Affine) v.fail("mode " + io::mode_name(mode) + " needs an affine arrangement");
  if (!sphere && a.space != Space::Toric) v.fail("mode toric needs a toric arrangement");
  if (!v.valid) return emit_invalid(o, "verify", v);
  const ArrangementComplex c = ArrangementComplex::build(a, sphere);
  const VerificationReport r = verify_descriptions(c, mode);
  bool lifts_ok = true;
  const Json lifts = lift_check(c, r.filtration, o.seed, lifts_ok);
  const bool ok = r.ok() && lifts_ok;
  if (o.format == "csv") {
    emit(o, io::csv_preamble("verify", o.seed, v) + io::verification_csv(r));
  } else {
    Json j = io::report_header("verify", o.seed, v);
    j["arrangement"] = io::to_json(a);
    j.update(io::verification_json(r));
    j["lift_check"] = lifts;
    j["ok"] = ok;
    emit(o, dump(j));
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_scissors(const Options& o) {
  require_format(o, {"json", "csv"});
  if (o.inputs.size() != 2) throw io::ParseError("scissors needs two polytope files");
  const std::string mode = o.mode.empty() ? "zn" : o.mode;
  if (mode != "zn" && mode != "hg2d") throw io::ParseError("unknown --mode " + mode);
  ValidationReport v;
  const auto pp = io::parse_points(io::read_json_file(o.inputs[0]));
  const auto qp = io::parse_points(io::read_json_file(o.inputs[1]));
  if (mode == "hg2d") {
    const Polygon p{pp}, q{qp};
    for (const auto* poly : {&p, &q}) {
      try {
        validate_polygon(*poly);
      } catch (const std::invalid_argument& e) {
        v.fail(std::string(poly == &p ? "p" : "q") + ": " + e.what());
      }
    }
    if (!v.valid) return emit_invalid(o, "scissors", v);
    const GlurResult r = hadwiger_glur_2d(p, q);
    if (o.format == "csv") {
      emit(o, io::csv_preamble("scissors", o.seed, v) + io::glur_csv(r));
      return kOk;
    }
    Json j = io::report_header("scissors", o.seed, v);
    j["mode"] = mode;
    j.update(io::verdict_json(r.verdict));
    j["tables"] = Json{{"p", io::invariant_table_json(r.left)}, {"q", io::invariant_table_json(r.right)}};
    emit(o, dump(j));
    return kOk;
  }
  std::optional<Polytope> p, q;
  const std::size_t n = pp.empty() ? 0 : pp[0].size();
  if (n == 0 || n > 3) v.fail("zn mode needs polytopes of dimension 1, 2 or 3");
  else {
    p = load_polytope(o.inputs[0], n, "p", v);
    q = load_polytope(o.inputs[1], n, "q", v);
  }
  if (!v.valid) return emit_invalid(o, "scissors", v);
  const ZnResult r = zn_congruent(*p, *q);
  if (o.format == "csv") {
    emit(o, io::csv_preamble("scissors", o.seed, v) + io::zn_csv(r));
    return kOk;
  }
  Json j = io::report_header("scissors", o.seed, v);
  j["mode"] = mode;
  j.update(io::verdict_json(r.verdict));
  j["arrangement"] = io::to_json(r.arrangement);
  Json cells = Json::array();
  for (std::size_t i = 0; i < r.left.size(); ++i) {
    cells.push_back(Json{{"point", io::to_json(r.points[i])}, {"p", io::to_json(r.left[i])}, {"q", io::to_json(r.right[i])}});
  }
  j["cells"] = cells;
  emit(o, dump(j));
  return kOk;
}

int cmd_hadwiger(const Options& o) {
  require_format(o, {"json", "csv"});
  if (o.inputs.size() != 2) throw io::ParseError("hadwiger-eval needs an arrangement and a polytope file");
  const Arrangement a = io::parse_arrangement(io::read_json_file(o.inputs[0]));
  ValidationReport v = validate(a, false);
  std::optional<Polytope> p;
  std::optional<ArrangementComplex> c;
  if (v.valid) {
    p = load_polytope(o.inputs[1], a.n, "polytope", v);
    if (p) {
      c = ArrangementComplex::build(a, false);
      try {
        face_flats(*p, c->poset());
      } catch (const std::invalid_argument& e) {
        v.fail(std::string("polytope: ") + e.what());
      }
    }
  }
  if (!v.valid) return emit_invalid(o, "hadwiger-eval", v);
  const auto rows = io::hadwiger_rows(*c, *p);
  bool consistent = true;
  for (const auto& r : rows) consistent = consistent && r.value == r.via_leray;
  if (o.format == "csv") {
    emit(o, io::csv_preamble("hadwiger-eval", o.seed, v) + io::hadwiger_csv(rows));
  } else {
    Json j = io::report_header("hadwiger-eval", o.seed, v);
    j["arrangement"] = io::to_json(a);
    Json verts = Json::array();
    for (const auto& x : p->vertices()) verts.push_back(io::to_json(x));
    j["polytope"] = Json{{"vertices", verts}};
    j.update(io::hadwiger_json(rows));
    emit(o, dump(j));
  }
  return consistent ? kOk : kVerificationFailure;
}

int cmd_render(const Options& o) {
  require_format(o, {"svg"});
  const Arrangement a = io::parse_arrangement(io::read_json_file(o.inputs.at(0)));
  ValidationReport v = validate(a, false);
  if (a.n != 2) v.fail("render needs a 2-dimensional arrangement");
  if (!v.valid) return emit_invalid(o, "render", v);
  const ArrangementComplex c = ArrangementComplex::build(a, false);
  const std::string comment = std::string("schema=") + io::kSchema + " command=render seed=" + std::to_string(o.seed) +
                              " valid=true";
  emit(o, io::render_svg(c, comment));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact degree filtrations, Hadwiger invariants and scissors congruence for rational arrangements"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    const char* inputs;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"filtration", "Degree filtration dims and V_k bases", "arrangement JSON", cmd_filtration},
      {"verify", "Compare V_k with reciprocity and period solutions", "arrangement JSON", cmd_verify},
      {"scissors", "Scissors congruence of two polytopes", "two polytope JSON files", cmd_scissors},
      {"hadwiger-eval", "Hadwiger invariants of a polytope", "arrangement and polytope JSON", cmd_hadwiger},
      {"render", "SVG drawing of a planar arrangement", "arrangement JSON", cmd_render},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> subs;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("inputs", o.inputs, cmd.inputs)->required();
    sub->add_option("--mode", o.mode, "toric | affine | pseudoaffine | affine-compact | zn | hg2d");
    sub->add_option("--seed", o.seed, "Seed recorded in the report and used for randomized checks");
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--format", o.format, "json | csv | svg");
    subs.emplace_back(sub, cmd.run);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }
  for (const auto& [sub, run] : subs) {
    if (!sub->parsed()) continue;
    if (std::string(sub->get_name()) == "render" && sub->count("--format") == 0) o.format = "svg";
    try {
      return run(o);
    } catch (const io::ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return kParseError;
    } catch (const std::invalid_argument& e) {
      std::cerr << "invalid input: " << e.what() << "\n";
      return kValidationError;
    } catch (const std::exception& e) {
      std::cerr << "verification failure: " << e.what() << "\n";
      return kVerificationFailure;
    }
  }
  return kParseError;
}
