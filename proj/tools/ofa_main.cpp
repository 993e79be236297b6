#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofa/automaton.hpp"
#include "ofa/commonality_index.hpp"
#include "ofa/cost_model.hpp"
#include "ofa/dp_solver.hpp"
#include "ofa/errors.hpp"
#include "ofa/oracle.hpp"
#include "ofa/random_tuple.hpp"
#include "ofa/string_tuple.hpp"
#include "ofa/utf8.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailure = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read \"" + path + "\"");
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
}

bool tables_equal(const ofa::DpTables& a, const ofa::DpTables& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t i2 = i; i2 < a.size(); ++i2) {
      if (a.d(i, i2) != b.d(i, i2)) return false;
      if (i < i2 && a.kstar(i, i2) != b.kstar(i, i2)) return false;
    }
  return true;
}

struct SolveOptions {
  std::string input;
  std::string weights;
  std::string algorithm = "fast";
  std::string format = "size";
  std::string out;
};

int run_solve(const SolveOptions& opt) {
  const ofa::StringTuple tuple = ofa::StringTuple::parse(read_file(opt.input));
  std::optional<ofa::CostModel> costs;
  if (!opt.weights.empty()) costs = ofa::CostModel::parse(read_file(opt.weights));

  const ofa::CommonalityIndex ix =
      costs ? ofa::CommonalityIndex::build(tuple, *costs) : ofa::CommonalityIndex::build(tuple);
  const bool use_fast = opt.algorithm == "fast";
  const ofa::DpTables tables =
      costs ? (use_fast ? ofa::fast_solve_weighted(tuple, ix, *costs)
                        : ofa::drss_solve_weighted(tuple, ix, *costs))
            : (use_fast ? ofa::fast_solve(tuple, ix) : ofa::drss_solve(tuple, ix));
  const ofa::Cost total = ofa::optimal_total(ix, tables);
  const ofa::FactoringAutomaton fa = ofa::construct_fa(tuple, ix, tables);

  const ofa::ValidationReport report = ofa::validate_fa(fa, tuple);
  const ofa::Cost rebuilt =
      costs ? ofa::fa_cost(fa, *costs) : static_cast<ofa::Cost>(ofa::fa_size(fa));
  if (!report.ok || rebuilt != total) {
    std::cerr << "internal cross-check failed: table optimum " << total
              << ", constructed automaton " << rebuilt << "\n";
    for (const std::string& violation : report.violations) std::cerr << "  " << violation << "\n";
    return kExitVerifyFailure;
  }

  std::string rendered;
  if (opt.format == "size")
    rendered = std::to_string(total) + "\n";
  else if (opt.format == "json")
    rendered = ofa::to_json(fa);
  else
    rendered = ofa::to_dot(fa);
  write_output(opt.out, rendered);
  if (!opt.out.empty()) std::cout << total << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::uint64_t trials = 100;
  std::size_t max_n = 6;
  std::size_t max_m = 4;
  std::size_t alphabet = 2;
  std::uint64_t seed = 1;
  bool weighted = false;
};

ofa::CostModel random_cost_model(std::size_t m, std::size_t alphabet, std::mt19937_64& rng) {
  std::vector<ofa::Cost> choice(m);
  for (ofa::Cost& c : choice) c = static_cast<ofa::Cost>(rng() % 6);
  ofa::CostModel model(std::move(choice), static_cast<ofa::Cost>(rng() % 6));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t s = 0; s < alphabet; ++s)
      model.set_unify(k, static_cast<ofa::Symbol>(U'a' + s), static_cast<ofa::Cost>(rng() % 6));
  return model;
}

int run_verify(const VerifyOptions& opt) {
  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    const std::uint64_t trial_seed = opt.seed + trial;
    std::mt19937_64 rng(trial_seed);
    const std::size_t n = 1 + rng() % opt.max_n;
    const std::size_t m = 1 + rng() % opt.max_m;
    const ofa::StringTuple tuple = ofa::random_tuple(n, m, opt.alphabet, rng());

    std::string failure;
    if (opt.weighted) {
      const ofa::CostModel costs = random_cost_model(m, opt.alphabet, rng);
      const ofa::CommonalityIndex ix = ofa::CommonalityIndex::build(tuple, costs);
      const ofa::DpTables fast = ofa::fast_solve_weighted(tuple, ix, costs);
      const ofa::DpTables drss = ofa::drss_solve_weighted(tuple, ix, costs);
      const ofa::Cost total = ofa::optimal_total(ix, fast);
      const ofa::Cost truth = ofa::oracle_min_cost(tuple, ix, costs);
      const ofa::FactoringAutomaton fa = ofa::construct_fa(tuple, ix, fast);
      const ofa::ValidationReport report = ofa::validate_fa(fa, tuple);
      if (!tables_equal(fast, drss))
        failure = "fast and drss tables differ";
      else if (total != truth)
        failure = "solvers found cost " + std::to_string(total) + ", exhaustive search " +
                  std::to_string(truth);
      else if (ofa::fa_cost(fa, costs) != total)
        failure = "constructed automaton costs " + std::to_string(ofa::fa_cost(fa, costs)) +
                  ", tables promise " + std::to_string(total);
      else if (!report.ok)
        failure = "constructed automaton invalid: " + report.violations.front();
    } else {
      const ofa::CommonalityIndex ix = ofa::CommonalityIndex::build(tuple);
      const ofa::DpTables fast = ofa::fast_solve(tuple, ix);
      const ofa::DpTables drss = ofa::drss_solve(tuple, ix);
      const ofa::Cost total = ofa::optimal_total(ix, fast);
      const ofa::Cost truth = ofa::oracle_min_size(tuple, ix);
      const ofa::FactoringAutomaton fa = ofa::construct_fa(tuple, ix, fast);
      const ofa::ValidationReport report = ofa::validate_fa(fa, tuple);
      if (!tables_equal(fast, drss))
        failure = "fast and drss tables differ";
      else if (total != truth)
        failure = "solvers found size " + std::to_string(total) + ", exhaustive search " +
                  std::to_string(truth);
      else if (static_cast<ofa::Cost>(ofa::fa_size(fa)) != total)
        failure = "constructed automaton has " + std::to_string(ofa::fa_size(fa)) +
                  " edges, tables promise " + std::to_string(total);
      else if (!report.ok)
        failure = "constructed automaton invalid: " + report.violations.front();
    }

    if (!failure.empty()) {
      std::cerr << "trial " << (trial + 1) << " (seed " << trial_seed << ", n=" << n
                << ", m=" << m << ", alphabet=" << opt.alphabet << ") failed: " << failure
                << "\ntuple:\n"
                << tuple.serialize();
      return kExitVerifyFailure;
    }
  }
  std::cout << opt.trials << "/" << opt.trials << " ok\n";
  return kExitOk;
}

struct BenchOptions {
  std::string sizes;
  std::size_t alphabet = 2;
  std::uint64_t seed = 1;
  std::string algorithms = "fast,drss";
  std::string csv;
  std::string input;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::pair<std::size_t, std::size_t> parse_size(const std::string& item) {
  const std::size_t x = item.find('x');
  if (x == std::string::npos || x == 0 || x + 1 == item.size())
    throw std::runtime_error("bad --sizes entry \"" + item + "\"; expected NxM");
  return {std::stoull(item.substr(0, x)), std::stoull(item.substr(x + 1))};
}

std::size_t distinct_symbols(const ofa::StringTuple& t) {
  std::u32string seen;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t k = 0; k < t.length(); ++k)
      if (seen.find(t.at(i, k)) == std::u32string::npos) seen.push_back(t.at(i, k));
  return seen.size();
}

int run_bench(const BenchOptions& opt) {
  const std::vector<std::string> algorithms = split(opt.algorithms, ',');
  for (const std::string& a : algorithms)
    if (a != "fast" && a != "drss") throw std::runtime_error("unknown algorithm \"" + a + "\"");

  std::vector<ofa::StringTuple> instances;
  std::vector<std::size_t> alphabet_sizes;
  if (!opt.input.empty()) {
    instances.push_back(ofa::StringTuple::parse(read_file(opt.input)));
    alphabet_sizes.push_back(distinct_symbols(instances.back()));
  } else {
    for (const std::string& item : split(opt.sizes, ',')) {
      const auto [n, m] = parse_size(item);
      instances.push_back(ofa::random_tuple(n, m, opt.alphabet, opt.seed));
      alphabet_sizes.push_back(opt.alphabet);
    }
  }

  std::string csv = "algorithm,n,m,alphabet,seed,wall_time_ns,result\n";
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const ofa::StringTuple& tuple = instances[idx];
    const ofa::CommonalityIndex ix = ofa::CommonalityIndex::build(tuple);
    for (const std::string& algorithm : algorithms) {
      const auto start = std::chrono::steady_clock::now();
      const ofa::DpTables tables =
          algorithm == "fast" ? ofa::fast_solve(tuple, ix) : ofa::drss_solve(tuple, ix);
      const auto stop = std::chrono::steady_clock::now();
      const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      csv += algorithm + "," + std::to_string(tuple.size()) + "," + std::to_string(tuple.length()) +
             "," + std::to_string(alphabet_sizes[idx]) + "," + std::to_string(opt.seed) + "," +
             std::to_string(ns) + "," + std::to_string(ofa::optimal_total(ix, tables)) + "\n";
    }
  }
  write_output(opt.csv, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum factoring automata for ordered tuples of equal-length strings"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance and emit the automaton");
  solve->add_option("input", solve_opt.input, "tuple file, one string per line")->required();
  solve->add_option("--weights", solve_opt.weights, "cost model JSON; switches to the weighted objective");
  solve->add_option("--algorithm", solve_opt.algorithm, "solver to run")
      ->check(CLI::IsMember({"fast", "drss"}))
      ->capture_default_str();
  solve->add_option("--format", solve_opt.format, "output format")
      ->check(CLI::IsMember({"size", "json", "dot"}))
      ->capture_default_str();
  solve->add_option("--out", solve_opt.out, "write output to this file instead of stdout");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "cross-check solvers against exhaustive search on random instances");
  verify->add_option("--trials", verify_opt.trials, "number of random instances")->capture_default_str();
  verify->add_option("--max-n", verify_opt.max_n, "strings per instance, drawn from 1..max")
      ->check(CLI::Range(std::size_t{1}, std::size_t{12}))
      ->capture_default_str();
  verify->add_option("--max-m", verify_opt.max_m, "string length, drawn from 1..max")
      ->check(CLI::Range(std::size_t{1}, std::size_t{20}))
      ->capture_default_str();
  verify->add_option("--alphabet", verify_opt.alphabet, "alphabet size")
      ->check(CLI::Range(std::size_t{2}, std::size_t{26}))
      ->capture_default_str();
  verify->add_option("--seed", verify_opt.seed, "base seed; trial t uses seed+t")->capture_default_str();
  verify->add_flag("--weighted", verify_opt.weighted, "verify the weighted objective instead");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "time the solvers and emit CSV");
  bench->add_option("--sizes", bench_opt.sizes, "comma-separated NxM instance sizes");
  bench->add_option("--alphabet", bench_opt.alphabet, "alphabet size for generated instances")
      ->check(CLI::Range(std::size_t{2}, std::size_t{26}))
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "instance generation seed")->capture_default_str();
  bench->add_option("--algorithms", bench_opt.algorithms, "comma-separated subset of fast,drss")
      ->capture_default_str();
  bench->add_option("--csv", bench_opt.csv, "write CSV to this file instead of stdout");
  bench->add_option("--input", bench_opt.input, "time this tuple file instead of generated instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    return run_bench(bench_opt);
  } catch (const ofa::ParseError& e) {
    if (e.line() > 0)
      std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
