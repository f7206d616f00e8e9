// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mprob: command-line front end over the matroidprob C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroidprob/matroidprob.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCheckFailed = 3;

// Default tolerances per subcommand.
constexpr double kK2Tol = 1e-12;
constexpr double kHessTol = 1e-10;
constexpr double kHessFdTol = 1e-4;
constexpr double kMcSigmas = 4.0;
constexpr double kOrbitTol = 1e-9;
constexpr double kUniformTol = 1e-15;
constexpr double kOptTol = 1e-10;

struct CliError {
  int exit_code;
  std::string code;
  std::string message;
};

[[noreturn]] void Invalid(const std::string& message) {
  throw CliError{kExitValidation, "InvalidArgument", message};
}

void Check(mp_status s) {
  if (s == MP_OK) return;
  throw CliError{s == MP_ERR_INTERNAL ? kExitInternal : kExitValidation,
                 mp_status_name(s), mp_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { mp_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct MatroidDeleter {
  void operator()(mp_matroid* m) const { mp_matroid_free(m); }
};
struct IndexDeleter {
  void operator()(mp_index* i) const { mp_index_free(i); }
};
using MatroidPtr = std::unique_ptr<mp_matroid, MatroidDeleter>;
using IndexPtr = std::unique_ptr<mp_index, IndexDeleter>;

template <typename Fn>
json JsonCall(Fn&& fn) {
  char* raw = nullptr;
  Check(fn(&raw));
  ApiString owned(raw);
  return json::parse(owned.get());
}

// ---- output ----------------------------------------------------------------

std::string FormatDouble(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void WriteJson(std::ostream& os, const json& j) {
  switch (j.type()) {
    case json::value_t::number_float:
      os << FormatDouble(j.get<double>());
      return;
    case json::value_t::array: {
      os << '[';
      bool first = true;
      for (const auto& x : j) {
        if (!first) os << ',';
        first = false;
        WriteJson(os, x);
      }
      os << ']';
      return;
    }
    case json::value_t::object: {
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        os << json(key).dump() << ':';
        WriteJson(os, value);
      }
      os << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

std::string CsvCell(const json& v) {
  std::ostringstream os;
  if (v.is_string()) {
    os << v.get<std::string>();
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
               return x.is_number() || x.is_boolean();
             })) {
    bool first = true;
    for (const auto& x : v) {
      if (!first) os << ';';
      first = false;
      WriteJson(os, x);
    }
  } else {
    WriteJson(os, v);
  }
  std::string s = os.str();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void WriteCsv(std::ostream& os, const json& j) {
  std::string header, row;
  for (const auto& [key, value] : j.items()) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    row += CsvCell(value);
  }
  os << header << '\n' << row << '\n';
}

// ---- options -----------------------------------------------------------------

struct Options {
  std::string spec;
  std::optional<std::size_t> k;
  std::string dist;
  std::string gens = "auto";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  std::optional<std::size_t> samples;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t enum_cap = 0;
  std::optional<double> tol;
  std::string mode = "dirichlet";
  std::optional<std::size_t> max_iters;
  std::optional<double> step;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Invalid("cannot read file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the text starts with one of `openers`, else a file path.
std::string InlineOrFile(const std::string& text, const char* openers) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && std::string(openers).find(text[pos]) != std::string::npos) {
    return text;
  }
  return ReadFile(text);
}

json ParseJson(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw CliError{kExitValidation, "BadJson", what + ": " + e.what()};
  }
}

struct Context {
  const Options& opt;
  MatroidPtr matroid;
  std::size_t m = 0;
  std::size_t rank = 0;
  bool projective = false;
  json spec;
};

Context Load(const Options& opt) {
  if (opt.spec.empty()) Invalid("--spec is required");
  Context ctx{opt, nullptr, 0, 0, false, json()};
  const std::string text = InlineOrFile(opt.spec, "{");
  mp_matroid* raw = nullptr;
  Check(mp_matroid_from_json(text.c_str(), &raw));
  ctx.matroid.reset(raw);
  Check(mp_matroid_ground_size(raw, &ctx.m));
  Check(mp_matroid_rank(raw, &ctx.rank));
  int proj = 0;
  Check(mp_matroid_is_projective(raw, &proj));
  ctx.projective = proj != 0;
  ctx.spec = JsonCall([&](char** out) { return mp_matroid_spec_json(raw, out); });
  return ctx;
}

std::size_t ResolveK(const Context& ctx, std::optional<std::size_t> fallback = std::nullopt) {
  if (ctx.opt.k) {
    if (*ctx.opt.k < 1) Invalid("--k must be >= 1");
    return *ctx.opt.k;
  }
  return fallback.value_or(ctx.rank);
}

IndexPtr BuildIndex(const Context& ctx, std::size_t k) {
  mp_index* raw = nullptr;
  Check(mp_index_build(ctx.matroid.get(), k, ctx.opt.enum_cap, &raw));
  return IndexPtr(raw);
}

std::size_t IndexCount(const mp_index* idx) {
  std::size_t n = 0;
  Check(mp_index_count(idx, &n));
  return n;
}

// Distribution of length n from "uniform", "random", inline JSON or a file.
std::vector<double> LoadDistribution(const std::string& text, std::size_t n,
                                     std::uint64_t seed, std::uint64_t stream = 0) {
  std::vector<double> p(n);
  if (text.empty() || text == "uniform") {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(n));
    return p;
  }
  if (text == "random") {
    Check(mp_random_distribution(n, seed, stream, p.data()));
    return p;
  }
  const json j = ParseJson(InlineOrFile(text, "["), "--dist");
  if (!j.is_array()) Invalid("--dist must be a JSON array");
  std::vector<double> raw;
  for (const auto& x : j) {
    if (!x.is_number()) Invalid("--dist entries must be numbers");
    raw.push_back(x.get<double>());
  }
  if (raw.size() != n) {
    throw CliError{kExitValidation, "DimensionMismatch",
                   "--dist has " + std::to_string(raw.size()) + " entries, expected " +
                       std::to_string(n)};
  }
  Check(mp_distribution_normalize(raw.data(), n, /*renormalize=*/1, p.data()));
  return p;
}

json LoadGenerators(const Context& ctx) {
  if (ctx.opt.gens == "auto") {
    json g = JsonCall(
        [&](char** out) { return mp_matroid_standard_generators(ctx.matroid.get(), out); });
    if (g.is_null()) Invalid("no built-in generators for this family; pass --gens");
    return g;
  }
  return ParseJson(InlineOrFile(ctx.opt.gens, "["), "--gens");
}

std::pair<std::size_t, std::int64_t> ProjectiveParams(const Context& ctx) {
  if (!ctx.projective) Invalid("this subcommand needs a projective matroid spec");
  return {ctx.spec.at("n").get<std::size_t>(), ctx.spec.at("q").get<std::int64_t>()};
}

double Distance2ToUniform(const std::vector<double>& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p) s += (x - u) * (x - u);
  return s;
}

double EvalF(const mp_index* idx, const std::vector<double>& p) {
  double v = 0.0;
  Check(mp_eval_probability(idx, p.data(), p.size(), &v));
  return v;
}

// ---- subcommands -------------------------------------------------------------

struct Result {
  json body;
  bool ok = true;
};

Result CmdInfo(const Options& opt) {
  const Context ctx = Load(opt);
  const std::size_t k = ResolveK(ctx);
  const IndexPtr idx = BuildIndex(ctx, k);
  json j = {{"spec", ctx.spec}, {"m", ctx.m},   {"rank", ctx.rank},
            {"k", k},           {"count", IndexCount(idx.get())},
            {"is_projective", ctx.projective}};
  json gens;
  if (opt.gens == "auto") {
    gens = JsonCall(
        [&](char** out) { return mp_matroid_standard_generators(ctx.matroid.get(), out); });
  } else {
    gens = LoadGenerators(ctx);
  }
  if (!gens.is_null()) {
    const std::string g = gens.dump();
    const json orbits = JsonCall([&](char** out) { return mp_orbits(g.c_str(), out); });
    j["generators"] = gens.size();
    j["orbits"] = orbits.size();
    j["transitive"] = orbits.size() == 1;
  }
  return {j};
}

Result CmdEval(const Options& opt) {
  const Context ctx = Load(opt);
  const std::size_t k = ResolveK(ctx);
  const IndexPtr idx = BuildIndex(ctx, k);
  const auto p = LoadDistribution(opt.dist, ctx.m, opt.seed);
  double f = 0.0, h = 0.0;
  Check(mp_eval_f(idx.get(), p.data(), p.size(), &f));
  Check(mp_eval_h(idx.get(), p.data(), p.size(), &h));
  json j = {{"k", k}, {"m", ctx.m}, {"count", IndexCount(idx.get())},
            {"p", p}, {"F", EvalF(idx.get(), p)}, {"f", f}, {"h", h}};
  if (opt.dist.empty() || opt.dist == "uniform") {
    char* raw = nullptr;
    Check(mp_exact_uniform_probability(idx.get(), &raw));
    j["F_exact"] = ApiString(raw).get();
    if (ctx.projective) {
      const auto [n, q] = ProjectiveParams(ctx);
      const json cf = JsonCall([&](char** out) { return mp_pg_closed_forms(n, q, k, out); });
      j["closed_form"] = cf.at("value");
    }
  }
  return {j};
}

Result CmdExactUniform(const Options& opt) {
  const Context ctx = Load(opt);
  const auto [n, q] = ProjectiveParams(ctx);
  const std::size_t k = ResolveK(ctx);
  json j = JsonCall([&](char** out) { return mp_pg_closed_forms(n, q, k, out); });
  bool ok = j.at("bracket_form") == j.at("vector_form");
  mp_index* raw = nullptr;
  const mp_status s = mp_index_build(ctx.matroid.get(), k, opt.enum_cap, &raw);
  if (s == MP_OK) {
    IndexPtr idx(raw);
    char* r = nullptr;
    Check(mp_exact_uniform_probability(idx.get(), &r));
    const std::string enumerated = ApiString(r).get();
    j["count"] = IndexCount(idx.get());
    j["enumerated"] = enumerated;
    j["match"] = enumerated == j.at("value").get<std::string>();
    ok = ok && j["match"].get<bool>();
  } else if (s == MP_ERR_ENUMERATION_LIMIT) {
    j["enumerated"] = nullptr;
    j["note"] = "enumeration cap exceeded; closed form only";
  } else {
    Check(s);
  }
  j["forms_agree"] = j.at("bracket_form") == j.at("vector_form");
  return {j, ok};
}

Result CmdOptimize(const Options& opt) {
  const Context ctx = Load(opt);
  const std::size_t k = ResolveK(ctx);
  const IndexPtr idx = BuildIndex(ctx, k);
  const auto start = LoadDistribution(opt.dist, ctx.m, opt.seed);
  json cfg = json::object();
  cfg["tol_grad"] = opt.tol.value_or(1e-10);
  if (opt.max_iters) cfg["max_iters"] = *opt.max_iters;
  if (opt.step) cfg["step_size"] = *opt.step;
  const std::string c = cfg.dump();
  json j = JsonCall(
      [&](char** out) { return mp_maximize(idx.get(), c.c_str(), start.data(), start.size(), out); });
  const auto p = j.at("p").get<std::vector<double>>();
  double gap = 0.0;
  Check(mp_optimality_gap(idx.get(), p.data(), p.size(), &gap));
  j["k"] = k;
  j["start"] = start;
  j["dist_to_uniform"] = std::sqrt(Distance2ToUniform(p));
  j["optimality_gap"] = gap;
  return {j, j.at("converged").get<bool>()};
}

Result CmdMc(const Options& opt) {
  const Context ctx = Load(opt);
  const std::size_t k = ResolveK(ctx);
  const auto p = LoadDistribution(opt.dist, ctx.m, opt.seed);
  const std::uint64_t trials = opt.trials.value_or(1'000'000);
  json j = JsonCall([&](char** out) {
    return mp_estimate_probability(ctx.matroid.get(), p.data(), p.size(), k, trials, opt.seed,
                                   opt.threads, out);
  });
  j["k"] = k;
  bool ok = true;
  mp_index* raw = nullptr;
  const mp_status s = mp_index_build(ctx.matroid.get(), k, opt.enum_cap, &raw);
  if (s == MP_OK) {
    IndexPtr idx(raw);
    const double exact = EvalF(idx.get(), p);
    const double p_hat = j.at("p_hat").get<double>();
    const double se = j.at("std_err").get<double>();
    const double sigmas = opt.tol.value_or(kMcSigmas);
    j["F"] = exact;
    j["deviation"] = p_hat - exact;
    if (se > 0.0) {
      j["z"] = (p_hat - exact) / se;
      ok = std::abs(p_hat - exact) <= sigmas * se;
    } else {
      ok = std::abs(p_hat - exact) <= 1e-12;
    }
    j["within_tolerance"] = ok;
  } else if (s != MP_ERR_ENUMERATION_LIMIT) {
    Check(s);
  }
  return {j, ok};
}

Result CmdScan(const Options& opt) {
  const Context ctx = Load(opt);
  const std::size_t k = ResolveK(ctx);
  const IndexPtr idx = BuildIndex(ctx, k);
  json cfg = {{"samples", opt.samples.value_or(10'000)},
              {"seed", opt.seed},
              {"mode", opt.mode},
              {"threads", opt.threads}};
  const std::string c = cfg.dump();
  json j = JsonCall([&](char** out) { return mp_stability_scan(idx.get(), c.c_str(), out); });
  j["k"] = k;
  const bool nonunique = j.at("nonunique").get<bool>();
  j["message"] = nonunique ? "nonunique maximizer detected" : "min_R > 0 over samples";
  // Projective geometries have a unique maximizer; a vanishing ratio there is a failure.
  const bool ok = !(ctx.projective && (nonunique || !(j.at("min_R").get<double>() > 0.0)));
  return {j, ok};
}

Result CmdK2Check(const Options& opt) {
  const Context ctx = Load(opt);
  ProjectiveParams(ctx);
  const std::size_t k = ResolveK(ctx, 2);
  const IndexPtr idx = BuildIndex(ctx, k);
  json j = JsonCall([&](char** out) {
    return mp_k2_check(idx.get(), opt.samples.value_or(100), opt.seed, out);
  });
  const double tol = opt.tol.value_or(kK2Tol);
  j["tol"] = tol;
  const bool ok = j.at("max_residual").get<double>() <= tol &&
                  j.at("max_ratio_deviation").get<double>() <= tol;
  return {j, ok};
}

Result CmdHessCheck(const Options& opt) {
  const Context ctx = Load(opt);
  ProjectiveParams(ctx);
  const std::size_t k = ResolveK(ctx);
  const IndexPtr idx = BuildIndex(ctx, k);
  json j = JsonCall([&](char** out) {
    return mp_hessian_check(idx.get(), opt.samples.value_or(50), opt.seed, out);
  });
  const double tol = opt.tol.value_or(kHessTol);
  j["tol"] = tol;
  j["fd_tol"] = kHessFdTol;
  j["fd_agreement"] = j.at("max_fd_relative_deviation").get<double>() <= kHessFdTol;
  const bool ok = j.at("b2_consistent").get<bool>() && j.at("max_diagonal").get<double>() == 0.0 &&
                  j.at("max_relative_deviation").get<double>() <= tol &&
                  j["fd_agreement"].get<bool>();
  return {j, ok};
}

Result CmdOrbitAvg(const Options& opt) {
  const Context ctx = Load(opt);
  const std::size_t k = ResolveK(ctx);
  const IndexPtr idx = BuildIndex(ctx, k);
  const json gens = LoadGenerators(ctx);
  const std::string g = gens.dump();
  const auto p = LoadDistribution(opt.dist.empty() ? "random" : opt.dist, ctx.m, opt.seed);
  std::vector<double> avg(ctx.m);
  Check(mp_orbit_average(g.c_str(), p.data(), p.size(), avg.data()));
  const json orbits = JsonCall([&](char** out) { return mp_orbits(g.c_str(), out); });
  double h_p = 0.0, h_avg = 0.0;
  Check(mp_eval_h(idx.get(), p.data(), p.size(), &h_p));
  Check(mp_eval_h(idx.get(), avg.data(), avg.size(), &h_avg));
  double invariance = 0.0;
  for (const auto& gen : gens) {
    const auto image = gen.get<std::vector<std::size_t>>();
    if (image.size() != ctx.m) {
      throw CliError{kExitValidation, "DimensionMismatch", "generator length != ground size"};
    }
    double d = 0.0;
    Check(mp_check_invariance(idx.get(), image.data(), p.data(), p.size(), &d));
    invariance = std::max(invariance, d);
  }
  const double tol = opt.tol.value_or(kOrbitTol);
  const bool transitive = orbits.size() == 1;
  double linf = 0.0;
  for (double x : avg) linf = std::max(linf, std::abs(x - 1.0 / static_cast<double>(ctx.m)));
  json j = {{"k", k},
            {"orbits", orbits},
            {"transitive", transitive},
            {"p", p},
            {"average", avg},
            {"h_p", h_p},
            {"h_average", h_avg},
            {"h_nondecreasing", h_avg >= h_p - tol},
            {"max_invariance_residual", invariance},
            {"tol", tol}};
  bool ok = h_avg >= h_p - tol;
  if (transitive) {
    j["uniform_linf"] = linf;
    ok = ok && linf <= kUniformTol;
  }
  return {j, ok};
}

Result CmdPushforward(const Options& opt) {
  const Context ctx = Load(opt);
  const auto [n, q] = ProjectiveParams(ctx);
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < n; ++i) vectors *= static_cast<std::size_t>(q);
  --vectors;
  const auto vp = LoadDistribution(opt.dist, vectors, opt.seed);
  std::vector<double> p(ctx.m);
  Check(mp_pushforward(n, q, vp.data(), vp.size(), 1, p.data(), p.size()));
  json j = {{"n", n}, {"q", q}, {"m", ctx.m}, {"p", p},
            {"dist_to_uniform", std::sqrt(Distance2ToUniform(p))}};
  bool ok = true;
  if (opt.k) {
    const std::size_t k = ResolveK(ctx);
    const IndexPtr idx = BuildIndex(ctx, k);
    const json cf = JsonCall([&](char** out) { return mp_pg_closed_forms(n, q, k, out); });
    const double fp = EvalF(idx.get(), p);
    double gap = 0.0;
    Check(mp_optimality_gap(idx.get(), p.data(), p.size(), &gap));
    j["k"] = k;
    j["F"] = fp;
    j["uniform_optimum"] = cf.at("value");
    j["uniform_optimum_float"] = cf.at("float");
    j["gap"] = gap;
    j["dist2_to_uniform"] = Distance2ToUniform(p);
    if (std::sqrt(Distance2ToUniform(p)) <= 1e-12) {
      j["attains_optimum"] = std::abs(gap) <= opt.tol.value_or(kOptTol);
      ok = j["attains_optimum"].get<bool>();
    }
  }
  return {j, ok};
}

void EmitError(const CliError& e) {
  json j = {{"error", e.code}, {"message", e.message}, {"exit_code", e.exit_code}};
  WriteJson(std::cerr, j);
  std::cerr << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence probabilities of random samples from matroids", "mprob"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mp_version()));
  Options opt;

  struct Sub {
    const char* name;
    const char* help;
    Result (*fn)(const Options&);
  };
  const Sub subs[] = {
      {"info", "ground size, rank, independent K-set count, transitivity", CmdInfo},
      {"eval", "evaluate F, f and h at a distribution", CmdEval},
      {"exact-uniform", "closed-form F(u) on PG(N-1,q), cross-checked by enumeration",
       CmdExactUniform},
      {"optimize", "maximize F over the simplex", CmdOptimize},
      {"mc", "Monte Carlo estimate of F", CmdMc},
      {"scan", "stability-ratio scan", CmdScan},
      {"k2check", "K=2 gap identity on random distributions", CmdK2Check},
      {"hesscheck", "Hessian identity at the uniform point", CmdHessCheck},
      {"orbitavg", "orbit averaging and monotonicity of h", CmdOrbitAvg},
      {"pushforward", "push a vector distribution to projective points", CmdPushforward},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("--spec", opt.spec, "matroid spec: inline JSON or file path");
    sc->add_option("--k", opt.k, "sample count K (default: rank)");
    sc->add_option("--dist", opt.dist, "distribution: uniform, random, inline JSON array or file");
    sc->add_option("--gens", opt.gens, "generators: auto, inline JSON or file");
    sc->add_option("--seed", opt.seed, "RNG seed");
    sc->add_option("--trials", opt.trials, "Monte Carlo trials");
    sc->add_option("--samples", opt.samples, "samples, directions or draws");
    sc->add_option("--out", opt.out, "write output to this file");
    sc->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sc->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    sc->add_option("--enum-cap", opt.enum_cap, "enumeration cap (0 = default)");
    sc->add_option("--tol", opt.tol, "tolerance override");
    sc->add_option("--mode", opt.mode, "scan mode")->check(CLI::IsMember({"dirichlet", "sparse"}));
    sc->add_option("--max-iters", opt.max_iters, "optimizer iteration cap");
    sc->add_option("--step", opt.step, "optimizer initial step size");
    registered.emplace_back(sc, &s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    EmitError(CliError{kExitValidation, "UsageError", e.what()});
    return kExitValidation;
  }

  try {
    for (const auto& [sc, sub] : registered) {
      if (!sc->parsed()) continue;
      const Result r = sub->fn(opt);
      std::ostringstream os;
      if (opt.format == "csv") {
        WriteCsv(os, r.body);
      } else {
        WriteJson(os, r.body);
        os << '\n';
      }
      if (opt.out.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream f(opt.out);
        if (!f) Invalid("cannot write \"" + opt.out + "\"");
        f << os.str();
      }
      if (!r.ok) {
        EmitError(CliError{kExitCheckFailed, "CheckFailed",
                           std::string(sub->name) + ": tolerance or assertion check failed"});
        return kExitCheckFailed;
      }
      return kExitOk;
    }
  } catch (const CliError& e) {
    EmitError(e);
    return e.exit_code;
  } catch (const json::exception& e) {
    EmitError(CliError{kExitValidation, "BadJson", e.what()});
    return kExitValidation;
  } catch (const std::exception& e) {
    EmitError(CliError{kExitInternal, "Internal", e.what()});
    return kExitInternal;
  }
  return kExitOk;
}
