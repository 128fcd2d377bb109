// qubokit: exact QUBO solving, subclass solvers, reductions, and query benchmarks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qubokit/bench.hpp"
#include "qubokit/bigint.hpp"
#include "qubokit/errors.hpp"
#include "qubokit/instance.hpp"
#include "qubokit/io.hpp"
#include "qubokit/oracle.hpp"
#include "qubokit/reductions.hpp"
#include "qubokit/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitSubclass = 3;
constexpr int kExitCapacity = 4;

// Thrown for flag combinations CLI11 cannot express declaratively.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<std::string>& path, const std::string& data) {
  if (!path) {
    std::cout << data;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + *path);
  out << data;
}

qubokit::Int parse_flag_int(const std::string& text, const std::string& flag) {
  const std::string_view s = text;
  bool ok = !s.empty();
  std::size_t start = (ok && s[0] == '-') ? 1 : 0;
  ok = ok && start < s.size();
  for (std::size_t i = start; ok && i < s.size(); ++i) {
    ok = s[i] >= '0' && s[i] <= '9';
  }
  if (!ok) throw UsageError(flag + " must be an integer, got `" + text + "`");
  return qubokit::Int(text);
}

std::pair<int, int> parse_sizes(const std::string& text) {
  const auto dots = text.find("..");
  const auto as_int = [&](const std::string& part) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      return v;
    } catch (const std::exception&) {
      throw UsageError("--sizes expects `A..B` or a single integer, got `" + text + "`");
    }
  };
  if (dots == std::string::npos) {
    const int v = as_int(text);
    return {v, v};
  }
  const int lo = as_int(text.substr(0, dots));
  const int hi = as_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("--sizes range is empty: " + text);
  return {lo, hi};
}

// Reduces the fraction value/scale and renders "p" or "p/q".
std::string format_rational(const qubokit::Int& value, const qubokit::Int& scale) {
  const qubokit::Int g = boost::multiprecision::gcd(boost::multiprecision::abs(value), scale);
  const qubokit::Int num = (g == 0) ? value : value / g;
  const qubokit::Int den = (g == 0) ? scale : scale / g;
  if (den == 1) return qubokit::to_decimal(num);
  return qubokit::to_decimal(num) + "/" + qubokit::to_decimal(den);
}

struct SolveOptions {
  std::string input;
  std::optional<std::string> output;
  std::string format = "qubo";
  std::string mode = "auto";
  std::optional<std::string> lower_bound;
  std::optional<std::string> upper_bound;
  bool extract = false;
};

int cmd_solve(const SolveOptions& opt) {
  using namespace qubokit;

  std::optional<Int> ell;
  std::optional<Int> u;
  if (opt.lower_bound) {
    ell = parse_flag_int(*opt.lower_bound, "--lower-bound");
    if (*ell >= 0) throw UsageError("--lower-bound must be negative");
  }
  if (opt.upper_bound) {
    u = parse_flag_int(*opt.upper_bound, "--upper-bound");
    if (*u <= 0) throw UsageError("--upper-bound must be positive");
  }

  std::string mode = opt.mode;
  if (mode == "auto") {
    mode = u ? "uqubo" : (ell ? "lqubo" : "general");
  } else if (mode == "lqubo") {
    if (!ell) throw UsageError("--mode lqubo needs --lower-bound");
  } else if (mode == "uqubo") {
    if (!u) throw UsageError("--mode uqubo needs --upper-bound");
  } else if (mode == "general") {
    if (ell || u) throw UsageError("--mode general does not take bounds");
  } else {
    throw UsageError("unknown --mode: " + mode);
  }

  const std::string text = read_file(opt.input);

  // Reduce non-QUBO inputs; remember how to interpret the solved value.
  QuboInstance instance(1, {});
  Int value_shift = 0;  // added to the stored-matrix minimum in the report
  std::optional<IlpQuboMapping> mapping;
  std::optional<Int> scale;
  std::string chain;
  std::string optimum_key;

  if (opt.format == "qubo") {
    instance = parse_qubo(text);
  } else if (opt.format == "graph") {
    instance = reduce_clique_to_squbo(parse_graph(text));
    chain = "graph->squbo";
  } else if (opt.format == "ilp") {
    mapping = reduce_ilp_to_qubo(parse_ilp(text));
    instance = mapping->qubo;
    value_shift = mapping->folded_constant;
    chain = "ilp->qubo";
    optimum_key = "ilp_optimum";
  } else if (opt.format == "knapsack") {
    mapping = reduce_ilp_to_qubo(reduce_knapsack_to_ilp(parse_knapsack(text)));
    instance = mapping->qubo;
    value_shift = mapping->folded_constant;
    chain = "knapsack->ilp->qubo";
    optimum_key = "knapsack_optimum";
  } else if (opt.format == "rqubo") {
    auto normalized = normalize_rational(parse_rqubo(text));
    instance = std::move(normalized.first);
    scale = normalized.second;
    chain = "rqubo->qubo";
  } else {
    throw UsageError("unknown --format: " + opt.format);
  }

  DleOracle oracle(instance);
  SolveReport report;
  if (mode == "lqubo") {
    report = solve_lqubo(instance, *ell, oracle);
  } else if (mode == "uqubo") {
    report = solve_uqubo(instance, *u, oracle);
  } else {
    report = solve_qubo(instance, oracle);
  }
  if (opt.extract) {
    report.argmin = extract_argmin(instance, report.min_value, oracle);
  }

  ReportDocument doc = make_report_document(instance.n(), report);
  doc.min_value += value_shift;
  doc.oracle_queries = oracle.stats().queries;  // solve plus optional extraction
  if (!chain.empty()) doc.extras.emplace_back("reduction_chain", chain);
  if (mapping) {
    doc.extras.emplace_back(optimum_key,
                            to_decimal(interpret_ilp_result(*mapping, report)));
  }
  if (opt.format == "graph") {
    doc.extras.emplace_back("clique_size", to_decimal(-report.min_value));
  }
  if (scale) {
    doc.extras.emplace_back("scale", to_decimal(*scale));
    doc.extras.emplace_back("rational_min", format_rational(report.min_value, *scale));
  }

  write_output(opt.output, write_report(doc));
  return kExitOk;
}

struct DecideOptions {
  std::string input;
  std::optional<std::string> output;
  std::string format = "qubo";
  std::string value;
};

int cmd_decide(const DecideOptions& opt) {
  using namespace qubokit;
  if (opt.format != "qubo") throw UsageError("decide takes --format qubo input");
  const Int q = parse_flag_int(opt.value, "--value");
  const QuboInstance instance = parse_qubo(read_file(opt.input));
  DleOracle oracle(instance);
  const bool is_min = decide_dqubo(instance, q, oracle);
  write_output(opt.output, is_min ? "true\n" : "false\n");
  return kExitOk;
}

struct ReduceOptions {
  std::string input;
  std::string output;
  std::string format;
};

int cmd_reduce(const ReduceOptions& opt) {
  using namespace qubokit;
  const std::string text = read_file(opt.input);

  std::string reduced;
  std::string sidecar;
  if (opt.format == "graph") {
    reduced = write_qubo(reduce_clique_to_squbo(parse_graph(text)));
    sidecar = "{\"kind\":\"graph->squbo\",\"negate_output\":true}\n";
  } else if (opt.format == "ilp") {
    const IlpQuboMapping mapping = reduce_ilp_to_qubo(parse_ilp(text));
    reduced = write_qubo(mapping.qubo);
    std::string layout;
    for (std::size_t i = 0; i < mapping.slack_layout.size(); ++i) {
      if (i > 0) layout += ",";
      layout += "[";
      for (std::size_t l = 0; l < mapping.slack_layout[i].size(); ++l) {
        if (l > 0) layout += ",";
        layout += std::to_string(mapping.slack_layout[i][l]);
      }
      layout += "]";
    }
    sidecar = "{\"kind\":\"ilp->qubo\",\"ilp_vars\":" + std::to_string(mapping.ilp_vars) +
              ",\"h\":\"" + to_decimal(mapping.h) + "\",\"k\":" + std::to_string(mapping.k) +
              ",\"folded_constant\":\"" + to_decimal(mapping.folded_constant) +
              "\",\"slack_layout\":[" + layout + "],\"negate_output\":true}\n";
  } else if (opt.format == "knapsack") {
    reduced = write_ilp(reduce_knapsack_to_ilp(parse_knapsack(text)));
    sidecar = "{\"kind\":\"knapsack->ilp\"}\n";
  } else if (opt.format == "rqubo") {
    const auto [instance, scale] = normalize_rational(parse_rqubo(text));
    reduced = write_qubo(instance);
    sidecar = "{\"kind\":\"rqubo->qubo\",\"scale\":\"" + to_decimal(scale) + "\"}\n";
  } else {
    throw UsageError("reduce takes --format ilp|graph|knapsack|rqubo");
  }

  write_output(opt.output, reduced);
  write_output(opt.output + ".map.json", sidecar);
  return kExitOk;
}

struct RepairOptions {
  std::string input;
  std::string assignment;
  std::optional<std::string> output;
};

int cmd_repair(const RepairOptions& opt) {
  using namespace qubokit;
  const Graph graph = parse_graph(read_file(opt.input));
  const QuboInstance squbo = reduce_clique_to_squbo(graph);
  const Assignment candidate =
      parse_assignment(read_file(opt.assignment), squbo.n());

  DleOracle oracle(squbo);
  const SolveReport solved = solve_qubo(squbo, oracle);
  if (squbo.evaluate(candidate) != solved.min_value) {
    throw InconsistencyError("assignment value " + to_decimal(squbo.evaluate(candidate)) +
                             " is not the minimum " + to_decimal(solved.min_value));
  }

  const Assignment clique = repair_to_clique(squbo, candidate);
  std::string out;
  for (int v = 1; v <= clique.size(); ++v) {
    if (clique.bit(v)) {
      if (!out.empty()) out += " ";
      out += std::to_string(v);
    }
  }
  out += "\n";
  write_output(opt.output, out);
  return kExitOk;
}

struct BenchOptions {
  std::string family;
  std::string sizes;
  int trials = 3;
  std::uint64_t seed = 1;
  std::optional<std::string> output;
};

int cmd_bench(const BenchOptions& opt) {
  using namespace qubokit;
  BenchConfig config;
  if (opt.family == "squbo-random") {
    config.family = BenchFamily::squbo_random;
  } else if (opt.family == "single-bigcoeff") {
    config.family = BenchFamily::single_bigcoeff;
  } else {
    throw UsageError("--family must be squbo-random or single-bigcoeff");
  }
  std::tie(config.size_lo, config.size_hi) = parse_sizes(opt.sizes);
  if (opt.trials < 0) throw UsageError("--trials must be >= 0");
  config.trials = opt.trials;
  config.seed = opt.seed;

  const auto rows = run_bench(config);
  write_output(opt.output, write_bench_csv(config, rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact QUBO toolkit: oracle-driven solvers, reductions, benchmarks"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "minimise an instance exactly");
  solve->add_option("--input", solve_opt.input, "input file")->required();
  solve->add_option("--output", solve_opt.output, "report destination (default stdout)");
  solve->add_option("--format", solve_opt.format,
                    "qubo|ilp|graph|knapsack|rqubo (default qubo)");
  solve->add_option("--mode", solve_opt.mode, "auto|general|lqubo|uqubo (default auto)");
  solve->add_option("--lower-bound", solve_opt.lower_bound,
                    "strict lower bound on all coefficients (negative)");
  solve->add_option("--upper-bound", solve_opt.upper_bound,
                    "strict upper bound on all coefficients (positive)");
  solve->add_flag("--extract-argmin", solve_opt.extract,
                  "also recover one minimising assignment");

  DecideOptions decide_opt;
  auto* decide = app.add_subcommand("decide", "is --value exactly the minimum?");
  decide->add_option("--input", decide_opt.input, "input file")->required();
  decide->add_option("--output", decide_opt.output, "destination (default stdout)");
  decide->add_option("--format", decide_opt.format, "qubo (default)");
  decide->add_option("--value", decide_opt.value, "candidate minimum")->required();

  ReduceOptions reduce_opt;
  auto* reduce = app.add_subcommand("reduce", "rewrite an instance one step down");
  reduce->add_option("--input", reduce_opt.input, "input file")->required();
  reduce->add_option("--output", reduce_opt.output, "reduced instance file")->required();
  reduce->add_option("--format", reduce_opt.format, "ilp|graph|knapsack|rqubo")->required();

  RepairOptions repair_opt;
  auto* repair = app.add_subcommand("repair", "turn an optimal assignment into a clique");
  repair->add_option("--input", repair_opt.input, "graph file")->required();
  repair->add_option("--assignment", repair_opt.assignment, "0/1 assignment file")->required();
  repair->add_option("--output", repair_opt.output, "destination (default stdout)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "query-count scaling families");
  bench->add_option("--family", bench_opt.family, "squbo-random|single-bigcoeff")->required();
  bench->add_option("--sizes", bench_opt.sizes, "size range A..B")->required();
  bench->add_option("--trials", bench_opt.trials, "trials per size (default 3)");
  bench->add_option("--seed", bench_opt.seed, "generator seed (default 1)");
  bench->add_option("--output", bench_opt.output, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInternal;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opt);
    if (decide->parsed()) return cmd_decide(decide_opt);
    if (reduce->parsed()) return cmd_reduce(reduce_opt);
    if (repair->parsed()) return cmd_repair(repair_opt);
    if (bench->parsed()) return cmd_bench(bench_opt);
    std::cerr << "error: no command\n";
    return kExitInternal;
  } catch (const qubokit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qubokit::SubclassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSubclass;
  } catch (const qubokit::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
