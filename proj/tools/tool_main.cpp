// Copyright 2026 The normmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"
#include "normmax/calibrate.hpp"
#include "normmax/csv.hpp"
#include "normmax/distance.hpp"
#include "normmax/errors.hpp"
#include "normmax/mc.hpp"
#include "normmax/norming.hpp"
#include "normmax/parallel.hpp"
#include "normmax/specfn.hpp"
#include "normmax/verify.hpp"

namespace normmax::cli {
namespace {

using Kind = ApproxMethod::Kind;

struct Sized {
  std::string label;
  LogSize n;
};

struct Options {
  // Common.
  int digits = 17;
  CLI::Option* digits_opt = nullptr;
  std::string out_path;
  std::string delimiter = ",";
  unsigned jobs = default_jobs();
  double tol = 1e-8;
  std::uint64_t seed = 1;

  // Per command.
  std::vector<std::string> ns;
  std::string n0 = "16";
  std::vector<std::string> methods;
  std::vector<std::string> aux;
  std::vector<std::string> pairs;
  int table = 0;
  std::string suite;
  std::string grid = "-5:15:0.01";
  int count = 200;
  long m = 100;
  double q = kDefaultCalibrationQ;
  bool per_k = false;
  std::uint64_t reps = 100000;
  std::string dump;
};

double parse_real(std::string_view text, const char* what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError(std::string("invalid ") + what + ": '" +
                      std::string(text) + "'");
  }
  return v;
}

// Splits on commas that are not inside parentheses, so "b(0.5,-2)" stays
// whole.
std::vector<std::string> split_items(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    int depth = 0;
    std::string cur;
    for (const char c : item) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<Sized> sizes(const std::vector<std::string>& texts) {
  std::vector<Sized> out;
  for (const std::string& t : split_items(texts)) {
    out.push_back({t, parse_size(t)});
  }
  return out;
}

std::vector<Sized> sizes_or(const Options& o,
                            std::initializer_list<const char*> fallback) {
  if (!o.ns.empty()) return sizes(o.ns);
  std::vector<std::string> texts(fallback.begin(), fallback.end());
  return sizes(texts);
}

std::vector<LogSize> values_of(const std::vector<Sized>& s) {
  std::vector<LogSize> out;
  for (const Sized& x : s) out.push_back(x.n);
  return out;
}

PairSpec parse_pair(std::string_view text) {
  const std::size_t slash = text.rfind('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("pair must look like method/aux: '" +
                                std::string(text) + "'");
  }
  return {parse_method(text.substr(0, slash)), parse_aux(text.substr(slash + 1))};
}

std::string pair_label(const PairSpec& p) {
  return to_string(p.method) + "/" + to_string(p.aux);
}

std::vector<PairSpec> pair_specs(const Options& o,
                                 std::initializer_list<const char*> fallback) {
  std::vector<PairSpec> out;
  for (const std::string& t : split_items(o.pairs)) out.push_back(parse_pair(t));
  if (out.empty() && (!o.methods.empty() || !o.aux.empty())) {
    std::vector<std::string> ms = split_items(o.methods);
    std::vector<std::string> as = split_items(o.aux);
    if (ms.empty()) ms = {"exact"};
    if (as.empty()) as = {"af"};
    for (const std::string& m : ms) {
      for (const std::string& a : as) {
        out.push_back({parse_method(m), parse_aux(a)});
      }
    }
  }
  if (out.empty()) {
    for (const char* t : fallback) out.push_back(parse_pair(t));
  }
  return out;
}

csv::OutputSpec output_spec(const Options& o,
                            std::optional<int> table_decimals = std::nullopt) {
  csv::OutputSpec spec;
  spec.delimiter = o.delimiter[0];
  if (o.digits_opt != nullptr && o.digits_opt->count() > 0) {
    spec.digits = o.digits;
  } else if (table_decimals) {
    spec.decimals = table_decimals;
  }
  return spec;
}

// Integral sizes below 10^15 print as integers; anything else as 10^k.
std::string size_text(LogSize n) {
  const double v = n.value();
  if (std::isfinite(v) && v < 1e15) {
    const double r = std::round(v);
    if (std::fabs(v - r) <= 1e-9 * r) {
      return std::to_string(static_cast<long long>(r));
    }
  }
  csv::OutputSpec exponent;
  exponent.digits = 12;
  return "10^" + csv::format_number(n.log() / kLogTen, exponent);
}

void emit(const Options& o, const csv::Table& table, std::ostream& out) {
  if (o.out_path.empty()) {
    csv::write(out, table, o.delimiter[0]);
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + o.out_path + "'");
  csv::write(file, table, o.delimiter[0]);
  if (!file) throw std::runtime_error("write failed for '" + o.out_path + "'");
}

// ---- constants ------------------------------------------------------------

const char* const kTable3Methods[] = {"exact",   "betafinal",   "barbeta",
                                      "hallstar", "barbetastar", "betastar"};

std::vector<ApproxMethod> method_list(const Options& o) {
  std::vector<std::string> names = split_items(o.methods);
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names.assign(std::begin(kTable3Methods), std::end(kTable3Methods));
  }
  std::vector<ApproxMethod> out;
  for (const std::string& n : names) out.push_back(parse_method(n));
  return out;
}

double location_or_explain(const ApproxMethod& m, const Sized& n) {
  try {
    return approx_location(m, n.n);
  } catch (const DomainError& e) {
    throw DomainError("method " + to_string(m) + " at n = " + n.label + ": " +
                      e.what());
  }
}

int cmd_constants(const Options& o, std::ostream& out) {
  const auto ns = sizes_or(o, {"10", "1e2", "1e5", "1e10", "1e30", "1e60"});
  const auto methods = method_list(o);
  const csv::OutputSpec spec = output_spec(o);
  csv::Table t;
  t.header.push_back("n");
  for (const auto& m : methods) t.header.push_back(to_string(m));
  for (const Sized& n : ns) {
    csv::Row row{n.label};
    for (const auto& m : methods) {
      row.push_back(csv::format_number(location_or_explain(m, n), spec));
    }
    t.rows.push_back(std::move(row));
  }
  emit(o, t, out);
  return kExitOk;
}

// ---- distance -------------------------------------------------------------

int cmd_distance(const Options& o, std::ostream& out) {
  const auto ns = sizes_or(o, {"10"});
  const auto specs = pair_specs(o, {"exact/af"});
  const csv::OutputSpec spec = output_spec(o);
  const std::size_t cells = ns.size() * specs.size();
  std::vector<DistanceReport> reports(cells);
  parallel_for(cells, o.jobs, [&](std::size_t i) {
    const PairSpec& s = specs[i / ns.size()];
    const Sized& n = ns[i % ns.size()];
    reports[i] = sup_distance(n.n, norming_pair(s.method, s.aux, n.n), o.tol);
  });
  csv::Table t;
  t.header = {"n", "method", "aux", "sup", "argmax", "scaled"};
  for (std::size_t i = 0; i < cells; ++i) {
    const PairSpec& s = specs[i / ns.size()];
    const DistanceReport& r = reports[i];
    t.rows.push_back({ns[i % ns.size()].label, to_string(s.method),
                      to_string(s.aux), csv::format_number(r.sup, spec),
                      csv::format_number(r.argmax, spec),
                      csv::format_number(r.scaled, spec)});
  }
  emit(o, t, out);
  return kExitOk;
}

// ---- table ----------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  csv::Table t;
  if (o.table == 1) {
    const csv::OutputSpec spec = output_spec(o, 2);
    t.header = {"n0", "C", "C_tilde"};
    for (const Sized& n0 : sizes({"16", "30", "50", "1e2", "1e4", "1e6", "1e10",
                                  "1e20", "1e100"})) {
      t.rows.push_back({n0.label,
                        csv::format_number(theorem_constant(n0.n), spec),
                        csv::format_number(theorem_constant_tilde(n0.n), spec)});
    }
  } else if (o.table == 2) {
    const csv::OutputSpec spec = output_spec(o, 4);
    const auto ns = sizes({"10", "1e3", "1e10", "1e30", "1e50", "1e60"});
    const auto specs = pair_specs(
        Options{}, {"exact/af", "exact/ah", "exact/ac", "hallstar/af", "hallstar/ah"});
    const auto values = values_of(ns);
    const auto grid = scaled_distance_table(values, specs, o.tol, o.jobs);
    t.header = {"method", "aux"};
    for (const Sized& n : ns) t.header.push_back(n.label);
    for (std::size_t r = 0; r < specs.size(); ++r) {
      csv::Row row{to_string(specs[r].method), to_string(specs[r].aux)};
      for (const double v : grid[r]) row.push_back(csv::format_number(v, spec));
      t.rows.push_back(std::move(row));
    }
  } else {
    const csv::OutputSpec spec = output_spec(o, 5);
    const auto ns = sizes({"10", "1e2", "1e5", "1e10", "1e30", "1e60"});
    t.header = {"method"};
    for (const Sized& n : ns) t.header.push_back(n.label);
    for (const char* name : kTable3Methods) {
      const ApproxMethod m = parse_method(name);
      csv::Row row{name};
      for (const Sized& n : ns) {
        row.push_back(csv::format_number(location_or_explain(m, n), spec));
      }
      t.rows.push_back(std::move(row));
    }
  }
  emit(o, t, out);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

std::vector<BoundCertificate> run_suite(const Options& o) {
  if (o.suite == "prop4") {
    return prop4_suite(
        log_grid(LogSize::from_value(2.0), LogSize::pow10(100), o.count));
  }
  if (o.suite == "prop5") {
    const auto grid =
        log_grid(LogSize::from_value(3.0), LogSize::pow10(100), o.count);
    const auto pairs =
        log_grid(LogSize::from_value(3.0), LogSize::pow10(100), 50);
    return prop5_suite(grid, pairs);
  }
  if (o.suite == "theorem1") {
    const LogSize n0 = parse_size(o.n0);
    std::vector<LogSize> ns;
    if (!o.ns.empty()) {
      ns = values_of(sizes(o.ns));
    } else {
      const LogSize defaults[] = {n0, LogSize::from_log(n0.log() + kLogTen),
                                  LogSize::pow10(3), LogSize::pow10(10),
                                  LogSize::pow10(30)};
      for (const LogSize& n : defaults) {
        if (n.log() >= n0.log()) ns.push_back(n);
      }
    }
    return theorem1_certify(n0, ns, o.tol);
  }
  if (o.suite == "dife") {
    const auto ns = values_of(sizes_or(o, {"10", "100", "1e4"}));
    const double xs[] = {-2.0, -0.5, 0.5, 1.0, 3.0};
    return dife_suite(ns, xs);
  }
  if (o.suite == "proof-constants") return proof_constants_suite();
  std::vector<LogSize> ns;
  if (!o.ns.empty()) {
    ns = values_of(sizes(o.ns));
  } else {
    for (int k = (o.suite == "hall") ? 1 : 2; k <= 60; ++k) {
      ns.push_back(LogSize::pow10(k));
    }
  }
  if (o.suite == "hall") return hall_suite(ns, 0.33, o.tol, o.jobs);
  return rates_suite(ns);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto certs = run_suite(o);
  const csv::OutputSpec spec = output_spec(o);
  csv::Table t;
  t.header = {"name", "argument", "lhs", "rhs", "margin", "pass"};
  int failed = 0;
  for (const BoundCertificate& c : certs) {
    const std::string arg =
        std::holds_alternative<LogSize>(c.argument)
            ? size_text(std::get<LogSize>(c.argument))
            : csv::format_number(std::get<double>(c.argument), spec);
    t.rows.push_back({c.name, arg, csv::format_number(c.lhs, spec),
                      csv::format_number(c.rhs, spec),
                      csv::format_number(c.margin, spec),
                      c.pass ? "true" : "false"});
    if (!c.pass) {
      ++failed;
      err << "FAILED " << c.name << " at " << arg << ": "
          << csv::format_number(c.lhs, {}) << " !< "
          << csv::format_number(c.rhs, {}) << "\n";
    }
  }
  emit(o, t, out);
  return failed == 0 ? kExitOk : kExitFailedCertificate;
}

// ---- density --------------------------------------------------------------

int cmd_density(const Options& o, std::ostream& out) {
  const auto ns = sizes_or(o, {"100"});
  if (ns.size() != 1) throw DomainError("density takes a single --n");
  const Sized& n = ns[0];
  if (n.n.log() < kLogTwo) throw DomainError("density requires n >= 2");
  const auto specs = pair_specs(o, {"exact/af", "hallstar/ah"});
  const std::vector<double> xs = parse_grid(o.grid);
  std::vector<NormingPair> pairs;
  for (const PairSpec& s : specs) {
    pairs.push_back(norming_pair(s.method, s.aux, n.n));
  }
  const csv::OutputSpec spec = output_spec(o);
  csv::Table t;
  t.header = {"x", "gumbel"};
  for (const PairSpec& s : specs) t.header.push_back(pair_label(s));
  t.rows.resize(xs.size());
  parallel_for(xs.size(), o.jobs, [&](std::size_t i) {
    csv::Row& row = t.rows[i];
    row.push_back(csv::format_number(xs[i], spec));
    row.push_back(csv::format_number(gumbel_pdf(xs[i]), spec));
    for (const NormingPair& p : pairs) {
      row.push_back(csv::format_number(normalized_max_pdf(n.n, p, xs[i]), spec));
    }
  });
  emit(o, t, out);
  return kExitOk;
}

// ---- calibrate ------------------------------------------------------------

int cmd_calibrate(const Options& o, std::ostream& out) {
  const CalibrationResult r = p_hat(o.m, o.q, o.jobs);
  const csv::OutputSpec spec = output_spec(o);
  csv::Table t;
  if (o.per_k) {
    t.header = {"k", "p_k"};
    for (const auto& [k, p] : r.per_k) {
      t.rows.push_back({std::to_string(k), csv::format_number(p, spec)});
    }
  } else {
    t.header = {"m", "q", "p_hat"};
    t.rows.push_back({std::to_string(r.m), csv::format_number(r.q, spec),
                      csv::format_number(r.p_hat, spec)});
  }
  emit(o, t, out);
  return kExitOk;
}

// ---- simulate -------------------------------------------------------------

int cmd_simulate(const Options& o, std::ostream& out) {
  const auto ns = sizes_or(o, {"100"});
  if (ns.size() != 1) throw DomainError("simulate takes a single --n");
  const auto specs = pair_specs(o, {"exact/af"});
  if (specs.size() != 1) throw DomainError("simulate takes a single pair");
  SimConfig cfg;
  cfg.n = ns[0].n;
  cfg.reps = o.reps;
  cfg.seed = o.seed;
  cfg.pair = norming_pair(specs[0].method, specs[0].aux, cfg.n);
  cfg.jobs = o.jobs;
  std::vector<double> samples = draw_normalized(cfg);
  if (!o.dump.empty()) {
    std::ofstream file(o.dump, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + o.dump + "'");
    const csv::OutputSpec full;
    for (const double v : samples) file << csv::format_number(v, full) << '\n';
    if (!file) throw std::runtime_error("write failed for '" + o.dump + "'");
  }
  const SimReport r = summarize(std::move(samples));
  const csv::OutputSpec spec = output_spec(o);
  csv::Table t;
  t.header = {"n",    "method",      "aux",         "reps",
              "seed", "ks_distance", "sample_mean", "sample_sd"};
  t.rows.push_back({ns[0].label, to_string(specs[0].method),
                    to_string(specs[0].aux), std::to_string(r.reps),
                    std::to_string(o.seed), csv::format_number(r.ks_distance, spec),
                    csv::format_number(r.sample_mean, spec),
                    csv::format_number(r.sample_sd, spec)});
  emit(o, t, out);
  return kExitOk;
}

void add_sizes(CLI::App* app, Options& o, const char* help) {
  app->add_option("--n", o.ns, help)->delimiter(',');
}

void add_pairs(CLI::App* app, Options& o) {
  app->add_option("--pair", o.pairs,
                  "method/aux, e.g. exact/af or b(0.5,-1.8)/ah");
  app->add_option("--methods", o.methods,
                  "Methods crossed with --aux when --pair is absent");
  app->add_option("--aux", o.aux, "Auxiliary functions: ac, af, ah");
}

}  // namespace

LogSize parse_size(std::string_view text) {
  std::string_view t = text;
  if (t.empty()) throw DomainError("empty sample size");
  if (t.rfind("10^", 0) == 0) {
    return LogSize::pow10(parse_real(t.substr(3), "exponent"));
  }
  if (t.size() > 2 && t[0] == '1' && (t[1] == 'e' || t[1] == 'E')) {
    return LogSize::pow10(parse_real(t.substr(2), "exponent"));
  }
  const double v = parse_real(t, "sample size");
  if (!std::isfinite(v)) throw DomainError("sample size out of range");
  return LogSize::from_value(v);
}

std::vector<double> parse_grid(std::string_view text) {
  const std::size_t a = text.find(':');
  const std::size_t b =
      a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos) {
    throw DomainError("grid must be lo:hi:step");
  }
  const double lo = parse_real(text.substr(0, a), "grid start");
  const double hi = parse_real(text.substr(a + 1, b - a - 1), "grid end");
  const double step = parse_real(text.substr(b + 1), "grid step");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi && step > 0.0)) {
    throw DomainError("grid requires lo < hi and step > 0");
  }
  const double span = std::round((hi - lo) / step);
  if (span > 1e7) throw DomainError("grid has more than 10^7 points");
  std::vector<double> xs;
  const long count = static_cast<long>(span) + 1;
  xs.reserve(count);
  for (long i = 0; i < count; ++i) xs.push_back(lo + step * i);
  return xs;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Norming constants for the maximum of standard normals",
               "normmax"};
  app.fallthrough();
  app.require_subcommand(1);
  o.digits_opt = app.add_option("--digits", o.digits,
                                "Significant digits in output (5..17)")
                     ->check(CLI::Range(5, 17));
  app.add_option("--out", o.out_path, "Write CSV here instead of stdout");
  app.add_option("--delimiter", o.delimiter, "Single-character delimiter")
      ->check([](const std::string& d) {
        return d.size() == 1 && d != "\"" && d != "\n" && d != "\r"
                   ? std::string()
                   : std::string("delimiter must be one character");
      });
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--tol", o.tol, "Optimizer tolerance")
      ->check(CLI::Range(1e-12, 1e-3));
  app.add_option("--seed", o.seed, "Simulation seed");

  auto* constants = app.add_subcommand("constants", "Location constants");
  add_sizes(constants, o, "Sample sizes");
  constants->add_option("--methods", o.methods, "Methods, or 'all'");

  auto* distance = app.add_subcommand("distance", "Sup distance to Gumbel");
  add_sizes(distance, o, "Sample sizes");
  add_pairs(distance, o);

  auto* table = app.add_subcommand("table", "Reproduce table 1, 2 or 3");
  table->add_option("which", o.table, "Table number")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));

  auto* verify = app.add_subcommand("verify", "Run a certificate suite");
  verify->add_option("suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"prop4", "prop5", "theorem1", "dife",
                             "proof-constants", "hall", "rates"}));
  add_sizes(verify, o, "Sample sizes for theorem1, dife, hall, rates");
  verify->add_option("--n0", o.n0, "Threshold for theorem1");
  verify->add_option("--count", o.count, "Grid points for prop4, prop5")
      ->check(CLI::Range(2, 100000));

  auto* density = app.add_subcommand("density", "Density curves");
  add_sizes(density, o, "Sample size");
  add_pairs(density, o);
  density->add_option("--grid", o.grid, "lo:hi:step");

  auto* calibrate = app.add_subcommand("calibrate", "Estimate p-hat(m)");
  calibrate->add_option("--m", o.m, "Largest k")->check(CLI::Range(10L, 100000000L));
  calibrate->add_option("--q", o.q, "Fixed q");
  calibrate->add_flag("--per-k", o.per_k, "Emit every (k, p_k)");

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo check");
  add_sizes(simulate_cmd, o, "Sample size");
  add_pairs(simulate_cmd, o);
  simulate_cmd->add_option("--reps", o.reps, "Replications")
      ->check(CLI::Range(std::uint64_t{1}, kMaxReps));
  simulate_cmd->add_option("--dump", o.dump, "Raw normalized samples file");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("normmax");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*constants) return cmd_constants(o, out);
    if (*distance) return cmd_distance(o, out);
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*density) return cmd_density(o, out);
    if (*calibrate) return cmd_calibrate(o, out);
    return cmd_simulate(o, out);
  } catch (const std::exception& e) {
    err << "normmax: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace normmax::cli
