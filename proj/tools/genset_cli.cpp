// Command-line front end tying the library together: verification with
// replayable certificates, greedy / randomized / exact construction, bound
// reports, stopping-distance queries, erasure-channel simulation, and the
// bound consistency table.
//
// Exit codes: 0 = success / property holds, 1 = property fails (the report
// carries a certificate) or a data-level fault, 2 = usage error, 3 = work
// budget exceeded.
//
// Reports are JSON by default. Identical argv + input files + seed produce
// byte-identical reports except for the isolated "timings" field. Every
// randomized path defaults to seed 1 when --seed is absent.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "genset/bounds.hpp"
#include "genset/budget.hpp"
#include "genset/code.hpp"
#include "genset/construct.hpp"
#include "genset/erasure.hpp"
#include "genset/flats.hpp"
#include "genset/io.hpp"
#include "genset/matrix.hpp"
#include "genset/vecset.hpp"
#include "genset/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace genset;

constexpr const char* kArtifactName = "genset";
constexpr const char* kArtifactVersion = "1.0.0";
constexpr u64 kDefaultSeed = 1;

// ---------------------------------------------------------------------------
// JSON rendering helpers. Numbers are exact integers whenever the value is
// integral; non-finite doubles become null.

json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (std::floor(x) == x && std::fabs(x) <= 9007199254740992.0)
    return static_cast<long long>(x);
  return x;
}

json matrix_json(const BinMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(to_text(m.row(r)));
  return rows;
}

json vectorset_json(const VectorSet& a) {
  json rows = json::array();
  for (const auto& v : a.members) rows.push_back(to_text(v));
  return rows;
}

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::missed_flat: return "missed_flat";
    case CertKind::bad_matrix: return "bad_matrix";
    case CertKind::bad_coset_family: return "bad_coset_family";
    case CertKind::bad_tuple: return "bad_tuple";
    case CertKind::missed_subspace: return "missed_subspace";
    case CertKind::missing_pattern: return "missing_pattern";
  }
  return "unknown";
}

json certificate_json(const Certificate& c) {
  json out;
  out["kind"] = cert_kind_name(c.kind);
  if (c.flat.has_value()) {
    json f;
    f["ambient"] = c.flat->m;
    f["basis"] = matrix_json(c.flat->basis);
    f["representative"] = to_text(c.flat->rep);
    out["flat"] = std::move(f);
  }
  if (c.mat.has_value()) out["matrix"] = matrix_json(*c.mat);
  if (!c.vectors.empty()) {
    json vs = json::array();
    for (const auto& v : c.vectors) vs.push_back(to_text(v));
    out["vectors"] = std::move(vs);
  }
  if (!c.indices.empty()) out["indices"] = c.indices;
  return out;
}

json bound_value_json(const BoundValue& v) {
  json out;
  out["name"] = v.name;
  out["kind"] = to_string(v.kind);
  out["value"] = v.integral ? json(v.ivalue) : json_number(v.fvalue);
  out["applicability"] = v.applicability;
  out["status"] = to_string(v.status);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json bound_report_json(const BoundReport& rep) {
  json out;
  out["target"] = rep.target;
  json params;
  for (const auto& [name, value] : rep.parameters) params[name] = value;
  out["parameters"] = std::move(params);
  json values = json::array();
  for (const auto& v : rep.values) values.push_back(bound_value_json(v));
  out["values"] = std::move(values);
  out["consistency_notes"] = rep.consistency_notes;
  out["best_lower"] = json_number(rep.best_lower());
  out["best_upper"] = json_number(rep.best_upper());
  return out;
}

// ---------------------------------------------------------------------------
// Report envelope: artifact stamp, argv echo, input digests, results, and an
// isolated timings field excluded from the determinism contract.

struct RunContext {
  json report;
  std::chrono::steady_clock::time_point start;
  std::string out_path;
  std::string format = "json";
  int exit_code = 0;

  explicit RunContext(const std::vector<std::string>& argv_echo)
      : start(std::chrono::steady_clock::now()) {
    report["artifact"] = {{"name", kArtifactName}, {"version", kArtifactVersion}};
    report["command"] = argv_echo;
    report["inputs"] = json::object();
  }

  std::string read_input(const std::string& path) {
    std::string bytes = load_text(path);
    char digest[32];
    std::snprintf(digest, sizeof digest, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    report["inputs"][path] = digest;
    return bytes;
  }
};

void flatten_leaves(const json& node, const std::string& path,
                    std::vector<std::pair<std::string, json>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten_leaves(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    for (size_t i = 0; i < node.size(); ++i)
      flatten_leaves(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, node);
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_quote(const json& v) {
  if (!v.is_string()) return v.dump();
  std::string s = v.get<std::string>();
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string render_report(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, json>> leaves;
  flatten_leaves(report["results"], "", leaves);
  std::string out;
  if (format == "text") {
    for (const auto& [path, value] : leaves)
      out += path + " = " + scalar_text(value) + "\n";
    return out;
  }
  out = "key,value\n";
  for (const auto& [path, value] : leaves)
    out += csv_quote(json(path)) + "," + csv_quote(value) + "\n";
  return out;
}

// Emits the report to --out or stdout and returns the recorded exit code.
int finish(RunContext& ctx, json results) {
  ctx.report["results"] = std::move(results);
  auto elapsed = std::chrono::steady_clock::now() - ctx.start;
  ctx.report["timings"] = {
      {"total_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
  std::string rendered = render_report(ctx.report, ctx.format);
  if (ctx.out_path.empty())
    std::cout << rendered;
  else
    save_text(ctx.out_path, rendered);
  return ctx.exit_code;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string property;
  std::string method;
  std::string set_path;
  std::string matrix_path;
  std::string code_arg;
  int s = 0;
  u64 budget = 0;  // 0 = library default
};

u64 budget_or_default(u64 flag) { return flag == 0 ? default_budget() : flag; }

int run_verify(RunContext& ctx, const VerifyArgs& a) {
  json res;
  res["property"] = a.property;
  VerifyResult vr;
  bool replay_ok = true;

  if (a.property == "good" || a.property == "generic" ||
      a.property == "blocking") {
    if (a.set_path.empty())
      throw ParamError("verify: --set is required for property " + a.property);
    VectorSet set = read_vectorset_text(ctx.read_input(a.set_path));
    res["ambient"] = set.ambient;
    res["size"] = set.size();
    res["s"] = a.s;
    if (a.property == "good") {
      GoodMethod method = GoodMethod::flats;
      if (a.method == "definition") method = GoodMethod::definition;
      else if (!a.method.empty() && a.method != "flats")
        throw ParamError("verify: good methods are definition|flats");
      res["method"] = a.method.empty() ? "flats" : a.method;
      vr = is_good_set(set, a.s, method, budget_or_default(a.budget));
    } else if (a.property == "generic") {
      GenericMethod method = GenericMethod::cosets;
      if (a.method == "matrices") method = GenericMethod::matrices;
      else if (a.method == "hyperplanes") method = GenericMethod::hyperplanes;
      else if (!a.method.empty() && a.method != "cosets")
        throw ParamError("verify: generic methods are matrices|cosets|hyperplanes");
      res["method"] = a.method.empty() ? "cosets" : a.method;
      vr = is_generic_set(set, a.s, method, budget_or_default(a.budget));
    } else {
      if (!a.method.empty())
        throw ParamError("verify: blocking has a single method");
      vr = is_subspace_blocking(set, a.s);
    }
    if (!vr.pass) replay_ok = replay_certificate(*vr.cert, set, a.s);
  } else if (a.property == "intersecting") {
    BinMatrix gen;
    if (!a.matrix_path.empty()) {
      gen = read_matrix_text(ctx.read_input(a.matrix_path));
    } else if (!a.code_arg.empty()) {
      res["code"] = a.code_arg;
      gen = (looks_like_code_spec(a.code_arg)
                 ? make_code(parse_code_spec(a.code_arg))
                 : code_from_generator(
                       read_matrix_text(ctx.read_input(a.code_arg))))
                .generator;
    } else {
      throw ParamError("verify: intersecting needs --matrix or --code");
    }
    res["n"] = gen.cols;
    res["k"] = gen.rows();
    res["s"] = a.s;
    if (!a.method.empty())
      throw ParamError("verify: intersecting has a single method");
    vr = is_swise_intersecting(gen, a.s, budget_or_default(a.budget));
    if (!vr.pass) replay_ok = replay_certificate(*vr.cert, gen, a.s);
  } else if (a.property == "covering-array") {
    if (a.matrix_path.empty())
      throw ParamError("verify: covering-array needs --matrix");
    BinMatrix m = read_matrix_text(ctx.read_input(a.matrix_path));
    res["rows"] = m.rows();
    res["cols"] = m.cols;
    res["strength"] = a.s;
    if (!a.method.empty())
      throw ParamError("verify: covering-array has a single method");
    vr = is_covering_array(m, a.s);
    if (!vr.pass) replay_ok = replay_certificate(*vr.cert, m, a.s);
  } else {
    throw ParamError(
        "verify: property must be one of "
        "good|generic|intersecting|covering-array|blocking");
  }

  res["holds"] = vr.pass;
  if (!vr.pass) {
    res["certificate"] = certificate_json(*vr.cert);
    if (!replay_ok)
      throw DataError("verify: certificate failed to replay against the input");
    ctx.exit_code = 1;
  }
  return finish(ctx, std::move(res));
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string kind;
  std::string code_arg;
  int r = 0;
  int s = 0;
  u64 seed = kDefaultSeed;
  u64 trials = 64;
  u64 budget = 0;
};

int run_construct(RunContext& ctx, const ConstructArgs& a) {
  json res;
  res["kind"] = a.kind;
  const u64 budget = budget_or_default(a.budget);

  if (a.kind == "parity-check") {
    if (a.code_arg.empty())
      throw ParamError("construct: parity-check needs --code");
    res["code"] = a.code_arg;
    LinearCode code =
        looks_like_code_spec(a.code_arg)
            ? make_code(parse_code_spec(a.code_arg))
            : code_from_generator(read_matrix_text(ctx.read_input(a.code_arg)));
    SearchOutcome out = greedy_parity_check(code, budget);
    res["n"] = code.n;
    res["k"] = code.k;
    res["target_distance"] = min_max_distance(code).first;
    res["size"] = out.size;
    res["nodes"] = out.nodes_explored;
    res["optimal"] = out.optimal;
    // Rank and stopping distance are postconditions of the constructor.
    res["stopping_distance"] = res["target_distance"];
    res["rows"] = matrix_json(*out.matrix);
    if (!ctx.out_path.empty()) {
      save_text(ctx.out_path, write_matrix_text(*out.matrix));
      ctx.out_path.clear();
    }
    return finish(ctx, std::move(res));
  }

  SearchOutcome out;
  if (a.kind == "good") {
    out = greedy_good_set(a.r, a.s, budget);
  } else if (a.kind == "generic") {
    out = greedy_generic_set(a.r, a.s, budget);
  } else if (a.kind == "union") {
    out = greedy_subspace_union(a.r, a.s, budget);
  } else if (a.kind == "random-good" || a.kind == "random-generic") {
    SetKind kind =
        a.kind == "random-good" ? SetKind::good : SetKind::generic;
    out = randomized_search(a.r, a.s, kind, a.seed, a.trials, budget);
    ctx.report["seed"] = a.seed;
    res["seed"] = a.seed;
    res["trials"] = a.trials;
  } else {
    throw ParamError(
        "construct: kind must be one of "
        "good|generic|union|parity-check|random-good|random-generic");
  }
  res["r"] = a.r;
  res["s"] = a.s;
  res["size"] = out.size;
  res["nodes"] = out.nodes_explored;
  res["optimal"] = out.optimal;
  res["members"] = vectorset_json(*out.set);
  if (!ctx.out_path.empty()) {
    save_text(ctx.out_path, write_vectorset_text(*out.set));
    ctx.out_path.clear();
  }
  return finish(ctx, std::move(res));
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string kind;
  std::string method = "exact";
  int r = 0;
  int s = 0;
  u64 seed = kDefaultSeed;
  u64 trials = 64;
  u64 node_budget = 50'000'000;
  u64 budget = 0;
};

int run_search(RunContext& ctx, const SearchArgs& a) {
  SetKind kind;
  if (a.kind == "good") kind = SetKind::good;
  else if (a.kind == "generic") kind = SetKind::generic;
  else throw ParamError("search: kind must be good|generic");

  json res;
  res["kind"] = a.kind;
  res["r"] = a.r;
  res["s"] = a.s;
  res["method"] = a.method;
  SearchOutcome out;
  if (a.method == "exact") {
    out = exact_minimum(a.r, a.s, kind, a.node_budget);
  } else if (a.method == "random") {
    out = randomized_search(a.r, a.s, kind, a.seed, a.trials,
                            budget_or_default(a.budget));
    ctx.report["seed"] = a.seed;
    res["seed"] = a.seed;
    res["trials"] = a.trials;
  } else {
    throw ParamError("search: method must be exact|random");
  }
  res["size"] = out.size;
  res["optimal"] = out.optimal;
  res["nodes"] = out.nodes_explored;
  res["members"] = vectorset_json(*out.set);
  if (!ctx.out_path.empty()) {
    save_text(ctx.out_path, write_vectorset_text(*out.set));
    ctx.out_path.clear();
  }
  return finish(ctx, std::move(res));
}

// ---------------------------------------------------------------------------
// bounds / table

struct BoundsArgs {
  std::string target;
  std::string kind = "good";
  int k = 0;
  int s = 0;
  int n = 0;
  int d = 0;
  std::optional<int> rate_k;
  u64 q = 2;
  u64 max_weight = 0;
  double eps = 0.0;
  u64 budget = 0;
};

int run_bounds(RunContext& ctx, const BoundsArgs& a) {
  const u64 budget = budget_or_default(a.budget);
  if (a.target == "good")
    return finish(ctx, bound_report_json(good_set_bounds(a.k, a.s, budget)));
  if (a.target == "generic")
    return finish(ctx, bound_report_json(generic_set_bounds(a.k, a.s, budget)));
  if (a.target == "threshold") {
    SetKind kind;
    if (a.kind == "good") kind = SetKind::good;
    else if (a.kind == "generic") kind = SetKind::generic;
    else throw ParamError("bounds: threshold kind must be good|generic");
    ThresholdCheck tc = threshold_check(kind, a.k, a.s, budget);
    json res;
    res["kind"] = a.kind;
    res["k"] = a.k;
    res["s"] = a.s;
    res["n"] = tc.n;
    res["holds_at_n"] = tc.holds_at_n;
    res["fails_at_prev"] = tc.fails_at_prev;
    res["exact_verified"] = tc.exact_verified;
    return finish(ctx, std::move(res));
  }
  if (a.target == "stopping")
    return finish(ctx,
                  bound_report_json(stopping_redundancy_bounds(a.n, a.k, a.d)));
  if (a.target == "rate")
    return finish(ctx, bound_report_json(rate_bounds(a.s, a.rate_k)));
  if (a.target == "distance") {
    json res;
    res["s"] = a.s;
    res["d"] = a.d;
    res["max_weight"] = a.max_weight;
    res["sufficient"] = intersecting_distance_sufficient(
        a.s, static_cast<u64>(a.d), a.max_weight);
    return finish(ctx, std::move(res));
  }
  if (a.target == "bias") {
    json res;
    res["s"] = a.s;
    res["eps"] = a.eps;
    res["sufficient"] = bias_intersecting_sufficient(a.s, a.eps);
    return finish(ctx, std::move(res));
  }
  if (a.target == "blocking")
    return finish(ctx, bound_report_json(blocking_report(a.q, a.k, a.s)));
  throw ParamError(
      "bounds: target must be one of "
      "good|generic|threshold|stopping|rate|distance|bias|blocking");
}

struct TableArgs {
  int kmax = 0;
  int smax = 0;
  u64 budget = 0;
};

int run_table(RunContext& ctx, const TableArgs& a) {
  ConsistencyTable tab =
      consistency_table(a.kmax, a.smax, budget_or_default(a.budget));
  if (ctx.format == "csv") {
    // Tabular data gets proper columns instead of the flattened fallback.
    std::string out = "k,s,kind,lower,upper,exact,flags\n";
    for (const auto& c : tab.cells) {
      out += std::to_string(c.k) + "," + std::to_string(c.s) + "," +
             to_string(c.kind) + "," + std::to_string(c.lower) + ",";
      out += scalar_text(json_number(c.upper));
      out += ",";
      if (c.exact.has_value()) out += std::to_string(*c.exact);
      std::string flags;
      for (const auto& f : c.flags) {
        if (!flags.empty()) flags += "|";
        flags += f;
      }
      out += "," + csv_quote(json(flags)) + "\n";
    }
    if (ctx.out_path.empty())
      std::cout << out;
    else
      save_text(ctx.out_path, out);
    return tab.all_consistent ? 0 : 1;
  }
  json res;
  res["k_max"] = tab.k_max;
  res["s_max"] = tab.s_max;
  res["all_consistent"] = tab.all_consistent;
  json cells = json::array();
  for (const auto& c : tab.cells) {
    json cell;
    cell["k"] = c.k;
    cell["s"] = c.s;
    cell["kind"] = to_string(c.kind);
    cell["lower"] = c.lower;
    cell["upper"] = json_number(c.upper);
    cell["exact"] = c.exact.has_value() ? json(*c.exact) : json(nullptr);
    cell["flags"] = c.flags;
    cells.push_back(std::move(cell));
  }
  res["cells"] = std::move(cells);
  res["notes"] = tab.notes;
  if (!tab.all_consistent) ctx.exit_code = 1;
  return finish(ctx, std::move(res));
}

// ---------------------------------------------------------------------------
// stopping

struct StoppingArgs {
  std::string matrix_path;
  std::string code_arg;
  std::optional<int> cutoff;
};

int run_stopping(RunContext& ctx, const StoppingArgs& a) {
  json res;
  BinMatrix rows;
  if (!a.matrix_path.empty()) {
    rows = read_matrix_text(ctx.read_input(a.matrix_path));
  } else if (!a.code_arg.empty()) {
    res["code"] = a.code_arg;
    rows = (looks_like_code_spec(a.code_arg)
                ? make_code(parse_code_spec(a.code_arg))
                : code_from_generator(
                      read_matrix_text(ctx.read_input(a.code_arg))))
               .parity_check;
  } else {
    throw ParamError("stopping: needs --matrix or --code");
  }
  res["n"] = rows.cols;
  res["rows"] = rows.rows();
  if (a.cutoff.has_value()) res["cutoff"] = *a.cutoff;
  std::optional<int> sd = stopping_distance(rows, a.cutoff);
  res["stopping_distance"] = sd.has_value() ? json(*sd) : json(nullptr);
  return finish(ctx, std::move(res));
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string code_arg;
  std::string matrix_path;
  std::string set_path;
  double p = 0.0;
  u64 trials = 1000;
  u64 seed = kDefaultSeed;
};

int run_simulate(RunContext& ctx, const SimulateArgs& a) {
  if (a.code_arg.empty()) throw ParamError("simulate: needs --code");
  json res;
  res["code"] = a.code_arg;
  LinearCode code =
      looks_like_code_spec(a.code_arg)
          ? make_code(parse_code_spec(a.code_arg))
          : code_from_generator(read_matrix_text(ctx.read_input(a.code_arg)));

  std::vector<BecStrategy> strategies;
  strategies.push_back({"canonical", code.parity_check});
  if (!a.matrix_path.empty())
    strategies.push_back(
        {"file", read_matrix_text(ctx.read_input(a.matrix_path))});
  if (!a.set_path.empty()) {
    VectorSet set = read_vectorset_text(ctx.read_input(a.set_path));
    strategies.push_back({"image", apply_generic_set(set, code.parity_check)});
  }

  BecReport rep = bec_simulate(strategies, code, a.p, a.trials, a.seed);
  ctx.report["seed"] = rep.seed;
  res["n"] = rep.n;
  res["k"] = rep.k;
  res["p"] = rep.p;
  res["trials"] = rep.trials;
  res["seed"] = rep.seed;
  res["ml_failures"] = rep.ml_failures;
  json per = json::array();
  for (const auto& [name, failures] : rep.peel_failures)
    per.push_back({{"name", name}, {"peel_failures", failures}});
  res["strategies"] = std::move(per);
  return finish(ctx, std::move(res));
}

void add_common(CLI::App* cmd, RunContext& ctx, int& threads) {
  cmd->add_option("--out", ctx.out_path,
                  "Output file (constructed artifact for construct/search, "
                  "rendered report elsewhere)");
  cmd->add_option("--format", ctx.format, "Report format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  cmd->add_option("--threads", threads,
                  "Worker threads (reserved; every module is deterministic "
                  "and currently single-threaded)")
      ->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_echo;
  for (int i = 1; i < argc; ++i) argv_echo.emplace_back(argv[i]);
  RunContext ctx(argv_echo);
  int threads = 1;
  int rc = 0;

  CLI::App app{
      "Workbench for erasure-correcting vector sets over GF(2): verifiers "
      "with certificates, cover-greedy and exact constructions, bound "
      "reports, and erasure-channel tools"};
  app.set_version_flag("--version", kArtifactVersion);
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify", "Decide a set/matrix property; failures carry a certificate");
  verify->add_option("--property", va.property,
                     "good|generic|intersecting|covering-array|blocking")
      ->required();
  verify->add_option("--set", va.set_path, "Vector set file (rows of 0/1)");
  verify->add_option("--matrix", va.matrix_path, "Matrix file (rows of 0/1)");
  verify->add_option("--code", va.code_arg,
                     "Code family spec or generator file");
  verify->add_option("--s", va.s,
                     "Property parameter s (strength for covering-array)")
      ->required();
  verify->add_option("--method", va.method,
                     "good: definition|flats (default flats); generic: "
                     "matrices|cosets|hyperplanes (default cosets)");
  verify->add_option("--budget", va.budget, "Work budget override");
  add_common(verify, ctx, threads);
  verify->callback([&] { rc = run_verify(ctx, va); });

  ConstructArgs ca;
  auto* construct = app.add_subcommand(
      "construct", "Build a set or parity-check matrix by greedy covering");
  construct->add_option(
      "--kind", ca.kind,
      "good|generic|union|parity-check|random-good|random-generic")
      ->required();
  construct->add_option("--r", ca.r, "Ambient dimension");
  construct->add_option("--s", ca.s, "Set parameter s");
  construct->add_option("--code", ca.code_arg,
                        "Code family spec or generator file (parity-check)");
  construct->add_option("--seed", ca.seed, "Seed for random-* kinds")
      ->capture_default_str();
  construct->add_option("--trials", ca.trials, "Trial cap for random-* kinds")
      ->capture_default_str();
  construct->add_option("--budget", ca.budget, "Work budget override");
  add_common(construct, ctx, threads);
  construct->callback([&] { rc = run_construct(ctx, ca); });

  SearchArgs sa;
  auto* search = app.add_subcommand(
      "search", "Minimum-size set search (exact branch and bound, or "
      "randomized threshold sampling)");
  search->add_option("--kind", sa.kind, "good|generic")->required();
  search->add_option("--r", sa.r, "Ambient dimension")->required();
  search->add_option("--s", sa.s, "Set parameter s")->required();
  search->add_option("--method", sa.method, "exact|random")
      ->capture_default_str();
  search->add_option("--seed", sa.seed, "Seed for --method random")
      ->capture_default_str();
  search->add_option("--trials", sa.trials, "Trial cap for --method random")
      ->capture_default_str();
  search->add_option("--node-budget", sa.node_budget,
                     "Node cap for --method exact")
      ->capture_default_str();
  search->add_option("--budget", sa.budget, "Work budget override");
  add_common(search, ctx, threads);
  search->callback([&] { rc = run_search(ctx, sa); });

  BoundsArgs ba;
  TableArgs bta;
  auto* bounds = app.add_subcommand("bounds", "Bound reports");
  bounds->add_option("--target", ba.target,
                     "good|generic|threshold|stopping|rate|distance|bias|"
                     "blocking");
  bounds->add_option("--k,--r", ba.k, "Dimension parameter");
  bounds->add_option("--s", ba.s, "Set parameter s");
  bounds->add_option("--n", ba.n, "Code length (stopping)");
  bounds->add_option("--d", ba.d, "Distance (stopping, distance)");
  bounds->add_option("--code-k", ba.rate_k,
                     "Dimension for the restriction rate bound");
  bounds->add_option("--q", ba.q, "Field size (blocking)")
      ->capture_default_str();
  bounds->add_option("--max-weight", ba.max_weight,
                     "Maximum nonzero codeword weight (distance)");
  bounds->add_option("--eps", ba.eps, "Bias (bias)");
  bounds->add_option("--budget", ba.budget, "Work budget override");
  add_common(bounds, ctx, threads);
  auto* bounds_table = bounds->add_subcommand(
      "table", "Bound consistency table over a parameter rectangle");
  bounds_table->add_option("--kmax", bta.kmax, "Largest k")->required();
  bounds_table->add_option("--smax", bta.smax, "Largest s")->required();
  bounds_table->add_option("--budget", bta.budget, "Work budget override");
  add_common(bounds_table, ctx, threads);
  bounds_table->callback([&] { rc = run_table(ctx, bta); });
  bounds->callback([&] {
    if (bounds_table->parsed()) return;
    if (ba.target.empty())
      throw ParamError("bounds: --target is required (or use `bounds table`)");
    rc = run_bounds(ctx, ba);
  });

  TableArgs ta;
  auto* table = app.add_subcommand(
      "table", "Bound consistency table over a parameter rectangle");
  table->add_option("--kmax", ta.kmax, "Largest k")->required();
  table->add_option("--smax", ta.smax, "Largest s")->required();
  table->add_option("--budget", ta.budget, "Work budget override");
  add_common(table, ctx, threads);
  table->callback([&] { rc = run_table(ctx, ta); });

  StoppingArgs sta;
  auto* stopping = app.add_subcommand(
      "stopping", "Stopping distance of a row list or a code's parity check");
  stopping->add_option("--matrix", sta.matrix_path, "Row-list file");
  stopping->add_option("--code", sta.code_arg,
                       "Code family spec or generator file");
  stopping->add_option("--cutoff", sta.cutoff,
                       "Scan only stopping sets up to this size");
  add_common(stopping, ctx, threads);
  stopping->callback([&] { rc = run_stopping(ctx, sta); });

  SimulateArgs sia;
  auto* simulate = app.add_subcommand(
      "simulate", "Binary erasure channel run comparing peeling strategies "
      "against maximum-likelihood correctability");
  simulate->add_option("--code", sia.code_arg,
                       "Code family spec or generator file")
      ->required();
  simulate->add_option("--p", sia.p, "Erasure probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--trials", sia.trials, "Number of trials")
      ->capture_default_str();
  simulate->add_option("--seed", sia.seed, "Base seed")
      ->capture_default_str();
  simulate->add_option("--matrix", sia.matrix_path,
                       "Extra peeling strategy: dual rows from a file");
  simulate->add_option("--set", sia.set_path,
                       "Extra peeling strategy: image rows of a generic set");
  add_common(simulate, ctx, threads);
  simulate->callback([&] { rc = run_simulate(ctx, sia); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParamError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
