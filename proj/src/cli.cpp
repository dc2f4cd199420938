#include "dtc/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtc/error.hpp"
#include "dtc/moves.hpp"
#include "dtc/multicurve.hpp"
#include "dtc/pa.hpp"
#include "dtc/relations.hpp"
#include "dtc/word_dsl.hpp"

namespace dtc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string surface;
  std::optional<std::string> coords;
  std::optional<std::string> word;
  std::optional<std::uint64_t> seed;
  int bound = 20;
  int max_iter = 2000;
  std::string tol = "1e-9";
  std::string out;
  // scan
  int max_length = 4;
  int threads = 0;
  // verify-relations
  std::vector<std::string> suites;
  int samples = 1000;
  std::optional<std::string> scope;
  // count
  bool dump_strands = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + what + ": " + e.what());
  }
}

bool looks_inline(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (s[pos] == '[' || s[pos] == '{');
}

std::shared_ptr<const PantsDecomposition> load_surface(const std::string& spec) {
  if (spec.empty()) throw ValidationError("--surface is required");
  for (const std::string& name : preset_names()) {
    if (name == spec) return std::make_shared<const PantsDecomposition>(preset(spec).decomposition);
  }
  const json doc = looks_inline(spec) ? parse_json(spec, "--surface") : parse_json(read_file(spec), spec);
  return std::make_shared<const PantsDecomposition>(PantsDecomposition::build(GluingDescription::from_json(doc)));
}

DTCoords load_coords(const Options& o, const PantsDecomposition& pd) {
  if (!o.coords) throw ValidationError("--coords is required");
  const std::string& s = *o.coords;
  const json doc = looks_inline(s) ? parse_json(s, "--coords") : parse_json(read_file(s), s);
  return DTCoords::from_json(doc, pd);
}

Rational parse_tol(const std::string& s) {
  const Rational tol = Rational::parse(s);
  if (tol <= Rational(0)) throw ValidationError("--tol must be positive");
  return tol;
}

json estimate_json(const DilatationEstimate& e) {
  return {{"lambda", e.lambda},
          {"log_lambda", e.log_lambda},
          {"iterations", e.iterations},
          {"converged", e.converged},
          {"residual", e.residual}};
}

// Each command returns its complete output so nothing is printed when a
// later validation step fails.
struct Output {
  std::string text;
  int code = kOk;
};

Output cmd_presets() {
  json list = json::array();
  for (const std::string& name : preset_names()) {
    const PantsDecomposition pd = preset(name).decomposition;
    json curves = json::array();
    for (const PantsCurve& c : pd.curves()) {
      curves.push_back({{"curve", c.id.value}, {"kind", c.kind == CurveKind::Interior ? "interior" : "boundary"}});
    }
    json sites = json::array();
    for (const MoveSite& s : enumerate_move_sites(pd)) {
      sites.push_back(s.kind == MoveKind::First
                          ? "M1@" + std::to_string(s.curve.value)
                          : "M2@" + std::to_string(s.curve.value) + ":" + std::to_string(s.pants));
    }
    list.push_back({{"name", name}, {"curves", curves}, {"sites", sites}, {"gluing", pd.gluing().to_json()}});
  }
  return {list.dump(2) + "\n"};
}

Output cmd_act(const Options& o) {
  const auto pd = load_surface(o.surface);
  const DTCoords c = load_coords(o, *pd);
  const MappingWord w = parse_word(o.word.value_or(""), pd);
  const Transformed r = apply_word(w, c);
  json doc{{"word", format_word(w)},
           {"coords", r.coords.to_json(r.decomposition)},
           {"decomposition", r.decomposition.gluing().to_json()}};
  return {doc.dump() + "\n"};
}

Output cmd_count(const Options& o) {
  const auto pd = load_surface(o.surface);
  const IntegralMulticurve mc = validate_integral(load_coords(o, *pd), *pd);
  json doc{{"count", count_components(*pd, mc)}};
  if (o.dump_strands) doc["strands"] = build_strand_model(*pd, mc).to_json();
  return {doc.dump() + "\n"};
}

Output cmd_dilatation(const Options& o) {
  const auto pd = load_surface(o.surface);
  if (!o.word) throw ValidationError("--word is required");
  const MappingWord w = parse_word(*o.word, pd);
  const Rational tol = parse_tol(o.tol);
  std::optional<DTCoords> seed;
  if (o.coords) {
    seed = load_coords(o, *pd);
  } else if (o.seed) {
    // Retry successive seeds until the sample is a nonempty multicurve.
    for (std::uint64_t s = *o.seed; !seed || seed->is_zero(); ++s) seed = sample(*pd, o.bound, s, Scope::MF0).coords();
  } else {
    seed = canonical_seed(*pd);
  }
  const DilatationEstimate e = estimate_dilatation(w, *seed, o.max_iter, tol);
  json doc = estimate_json(e);
  doc["word"] = format_word(w);
  doc["seed"] = seed->to_json(*pd);
  return {doc.dump() + "\n"};
}

Output cmd_scan(const Options& o) {
  ScanOptions so;
  so.max_word_length = o.max_length;
  so.tol = parse_tol(o.tol);
  so.max_iter = o.max_iter;
  so.threads = o.threads;
  bool known = false;
  for (const std::string& name : preset_names()) known = known || name == o.surface;
  if (!known) throw ValidationError("scan needs a preset surface, got '" + o.surface + "'");
  std::string text;
  for (const ScanEntry& e : spectrum_scan(o.surface, so)) {
    json line{{"word", e.word},
              {"log_lambda", e.estimate.log_lambda},
              {"converged", e.estimate.converged},
              {"iterations", e.estimate.iterations}};
    text += line.dump() + "\n";
  }
  return {text};
}

Output cmd_verify(const Options& o) {
  const auto pd = load_surface(o.surface);
  SuiteOptions so;
  so.seed = o.seed.value_or(1);
  so.samples = o.samples;
  so.bound = o.bound;
  if (o.scope) so.scope = scope_from_string(*o.scope);
  std::vector<std::string> suites = o.suites;
  if (suites.empty()) {
    const SurfaceSpec& s = pd->surface();
    const bool torus = s.genus == 1 && s.boundary_count + s.puncture_count == 1;
    for (const std::string& name : suite_names()) {
      if (torus || (name != "braid" && name != "order-six")) suites.push_back(name);
    }
  }
  json doc{{"passed", true}, {"suites", json::array()}};
  for (const std::string& name : suites) {
    const SuiteResult r = run_suite(name, *pd, so);
    doc["suites"].push_back(r.to_json());
    if (!r.passed()) doc["passed"] = false;
  }
  return {doc.dump(2) + "\n", doc["passed"].get<bool>() ? kOk : kRelationFailure};
}

void write_error(std::ostream& err, const char* kind, const std::string& message, std::optional<int> column = {}) {
  json e{{"kind", kind}, {"message", message}};
  if (column) e["column"] = *column;
  err << json{{"error", e}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dehn-Thurston coordinates: mapping class actions, component counts, dilatations", "dtc"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--surface", o.surface, "preset name, JSON gluing file, or inline JSON")->required();
    c->add_option("--out", o.out, "write the result to this file instead of stdout");
  };
  auto add_coords = [&](CLI::App* c) { c->add_option("--coords", o.coords, "JSON coordinate file or inline JSON"); };

  auto* presets = app.add_subcommand("presets", "list built-in surfaces");
  presets->add_option("--out", o.out, "write the result to this file instead of stdout");

  auto* act = app.add_subcommand("act", "apply a word to coordinates");
  add_common(act);
  add_coords(act);
  act->add_option("--word", o.word, "word, e.g. \"T+0 M1@0\"");

  auto* count = app.add_subcommand("count", "count components of an integral multicurve");
  add_common(count);
  add_coords(count);
  count->add_flag("--dump-strands", o.dump_strands, "include the strand matching");

  auto* dil = app.add_subcommand("dilatation", "estimate the dilatation of a word");
  add_common(dil);
  add_coords(dil);
  dil->add_option("--word", o.word, "word returning to the base decomposition");
  dil->add_option("--seed", o.seed, "random seed multicurve (default: canonical seed)");
  dil->add_option("--bound", o.bound, "entry bound for a random seed");
  dil->add_option("--max-iter", o.max_iter, "iteration limit");
  dil->add_option("--tol", o.tol, "projective convergence tolerance");

  auto* scan = app.add_subcommand("scan", "dilatations of recipe words up to a length");
  add_common(scan);
  scan->add_option("--max-length,--max-word-length", o.max_length, "longest word, in twist letters");
  scan->add_option("--max-iter", o.max_iter, "iteration limit per word");
  scan->add_option("--tol", o.tol, "projective convergence tolerance");
  scan->add_option("--threads", o.threads, "worker threads (0: all cores)");

  auto* verify = app.add_subcommand("verify-relations", "run relation suites on random multicurves");
  add_common(verify);
  verify->add_option("--suite", o.suites, "involution, braid, order-six, count-invariance (repeatable)");
  verify->add_option("--seed", o.seed, "sampling seed");
  verify->add_option("--samples", o.samples, "multicurves per property");
  verify->add_option("--bound", o.bound, "entry bound for samples");
  verify->add_option("--scope", o.scope, "MF or MF0 (default: per suite)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kValidation;
  }

  Output result;
  try {
    if (presets->parsed()) result = cmd_presets();
    else if (act->parsed()) result = cmd_act(o);
    else if (count->parsed()) result = cmd_count(o);
    else if (dil->parsed()) result = cmd_dilatation(o);
    else if (scan->parsed()) result = cmd_scan(o);
    else result = cmd_verify(o);
  } catch (const ParseError& e) {
    write_error(err, "parse", e.what(), e.column());
    return kValidation;
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what());
    return kValidation;
  } catch (const std::exception& e) {
    write_error(err, "runtime", e.what());
    return kRuntime;
  }

  if (o.out.empty()) {
    out << result.text;
    out.flush();
  } else {
    std::ofstream file(o.out);
    file << result.text;
    if (!file) {
      write_error(err, "runtime", "cannot write '" + o.out + "'");
      return kRuntime;
    }
  }
  return result.code;
}

}  // namespace dtc::cli
