// Acceptance checks: one line of output per criterion, process exit
// code = number of failed criteria. Each criterion is independent and
// seeded, so a failure line pins down a reproducible instance.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ofa/automaton.hpp"
#include "ofa/commonality_index.hpp"
#include "ofa/cost_model.hpp"
#include "ofa/dp_solver.hpp"
#include "ofa/oracle.hpp"
#include "ofa/random_tuple.hpp"
#include "ofa/string_tuple.hpp"
#include "test_support.hpp"

namespace {

using ofa::CommonalityIndex;
using ofa::Cost;
using ofa::CostModel;
using ofa::DpTables;
using ofa::FactoringAutomaton;
using ofa::StringTuple;

int failures = 0;

void report(int index, bool ok, const std::string& label, const std::string& detail = "") {
  std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << " - " << label;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string describe(const support::Drawn& d) {
  std::ostringstream out;
  out << "seed " << d.seed << ", n=" << d.n << ", m=" << d.m << ", alphabet=" << d.alphabet;
  return out.str();
}

// Criteria 2 and 9 run over the same instance family.
constexpr std::uint64_t kVerifyBase = 9000;
constexpr int kVerifyTrials = 500;

void criterion1() {
  const StringTuple t = support::example4x3();
  const CommonalityIndex ix = CommonalityIndex::build(t);
  bool ok = true;
  std::string detail;
  const auto check_tables = [&](const DpTables& tables, const char* name) {
    if (tables.d(2, 3) != 2 || tables.d(0, 3) != 10 || tables.kstar(0, 3) != 0 ||
        ofa::optimal_total(ix, tables) != 10) {
      ok = false;
      detail = std::string(name) + " solver produced unexpected table values";
    }
  };
  const DpTables fast = ofa::fast_solve(t, ix);
  check_tables(fast, "incremental");
  check_tables(ofa::drss_solve(t, ix), "baseline");
  const FactoringAutomaton fa = ofa::construct_fa(t, ix, fast);
  const ofa::ValidationReport rep = ofa::validate_fa(fa, t);
  if (!rep.ok) {
    ok = false;
    detail = "constructed automaton invalid: " + rep.violations.front();
  } else if (ofa::fa_size(fa) != 10) {
    ok = false;
    detail = "constructed automaton has " + std::to_string(ofa::fa_size(fa)) + " edges";
  }
  report(1, ok, "worked 4x3 example: expected table cells, minimizer, optimum 10, valid 10-edge automaton",
         detail);
}

void criterion2() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < kVerifyTrials && ok; ++trial) {
    const support::Drawn d = support::draw_instance(kVerifyBase + trial, 6, 4);
    const CommonalityIndex ix = CommonalityIndex::build(d.tuple);
    const DpTables fast = ofa::fast_solve(d.tuple, ix);
    const DpTables drss = ofa::drss_solve(d.tuple, ix);
    const Cost total = ofa::optimal_total(ix, fast);
    if (!support::same_tables(fast, drss)) {
      ok = false;
      detail = "solver tables differ, " + describe(d);
      break;
    }
    if (total != ofa::oracle_min_size(d.tuple, ix)) {
      ok = false;
      detail = "exhaustive oracle disagrees, " + describe(d);
      break;
    }
    const FactoringAutomaton fa = ofa::construct_fa(d.tuple, ix, fast);
    const ofa::ValidationReport rep = ofa::validate_fa(fa, d.tuple);
    if (!rep.ok) {
      ok = false;
      detail = "automaton invalid (" + rep.violations.front() + "), " + describe(d);
      break;
    }
    if (static_cast<Cost>(ofa::fa_size(fa)) != total) {
      ok = false;
      detail = "automaton size != optimum, " + describe(d);
      break;
    }
  }
  report(2, ok, "500 random instances: both solvers match the exhaustive oracle; rebuilt automata validate at the optimal size",
         detail);
}

void criterion3() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const support::Drawn d = support::draw_instance(11000 + trial, 6, 4);
    const CostModel costs = support::draw_cost_model(d.m, d.alphabet, d.seed ^ 0xabcdefu);
    const CommonalityIndex ix = CommonalityIndex::build(d.tuple, costs);
    const DpTables fast = ofa::fast_solve_weighted(d.tuple, ix, costs);
    const DpTables drss = ofa::drss_solve_weighted(d.tuple, ix, costs);
    const Cost total = ofa::optimal_total(ix, fast);
    if (!support::same_tables(fast, drss)) {
      ok = false;
      detail = "weighted solver tables differ, " + describe(d);
      break;
    }
    if (total != ofa::oracle_min_cost(d.tuple, ix, costs)) {
      ok = false;
      detail = "weighted oracle disagrees, " + describe(d);
      break;
    }
    const FactoringAutomaton fa = ofa::construct_fa(d.tuple, ix, fast);
    const ofa::ValidationReport rep = ofa::validate_fa(fa, d.tuple);
    if (!rep.ok) {
      ok = false;
      detail = "automaton invalid (" + rep.violations.front() + "), " + describe(d);
      break;
    }
    if (ofa::fa_cost(fa, costs) != total) {
      ok = false;
      detail = "automaton cost != optimum, " + describe(d);
      break;
    }
  }
  report(3, ok, "200 weighted instances (costs in [0,5]): weighted solvers match the weighted oracle; automaton cost equals the optimum",
         detail);
}

void criterion4() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const support::Drawn d = support::draw_instance(12000 + trial, 6, 4);
    const CommonalityIndex plain = CommonalityIndex::build(d.tuple);
    const DpTables unweighted = ofa::fast_solve(d.tuple, plain);
    const CostModel unit = CostModel::uniform(d.m, 0, 1);
    const CommonalityIndex wix = CommonalityIndex::build(d.tuple, unit);
    for (const DpTables& weighted :
         {ofa::fast_solve_weighted(d.tuple, wix, unit), ofa::drss_solve_weighted(d.tuple, wix, unit)}) {
      for (std::size_t i = 0; i < d.n && ok; ++i)
        for (std::size_t i2 = i; i2 < d.n && ok; ++i2)
          if (weighted.d(i, i2) != unweighted.d(i, i2)) {
            ok = false;
            std::ostringstream out;
            out << "D(" << i + 1 << "," << i2 + 1 << ") differs, " << describe(d);
            detail = out.str();
          }
    }
  }
  report(4, ok, "200 instances: zero choice cost and unit unify cost reproduce the unweighted table entrywise",
         detail);
}

void criterion5() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const support::Drawn d = support::draw_instance(13000 + trial, 8, 5);
    const CommonalityIndex ix = CommonalityIndex::build(d.tuple);
    const DpTables tables = ofa::fast_solve(d.tuple, ix);
    ofa::fast_solve(d.tuple, ix, [&](std::size_t i, std::size_t i2, const ofa::ScratchView& s) {
      if (i == i2 || !ok) return;
      const Cost com = static_cast<Cost>(support::com_by_scan(d.tuple, i, i2).size());
      for (std::size_t k = 0; k < d.m; ++k) {
        Cost direct = 0;
        for (const ofa::Run& r : support::runs_by_scan(d.tuple, i, i2, k))
          direct += static_cast<Cost>(support::com_by_scan(d.tuple, r.first, r.last).size()) - com +
                    tables.d(r.first, r.last);
        if (s.a[k] - static_cast<Cost>(s.part_count[k]) * com != direct) {
          ok = false;
          std::ostringstream out;
          out << "rewritten sum differs at i=" << i + 1 << ", i'=" << i2 + 1 << ", k=" << k + 1
              << ", " << describe(d);
          detail = out.str();
          return;
        }
      }
    });
  }
  report(5, ok, "50 instances: the rolling-sum rewrite equals the from-scratch run sum at every proper cell and position",
         detail);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const support::Drawn d = support::draw_instance(14000 + trial, 8, 5);
    const CommonalityIndex ix = CommonalityIndex::build(d.tuple);
    const DpTables tables = ofa::fast_solve(d.tuple, ix);
    ofa::fast_solve(d.tuple, ix, [&](std::size_t i, std::size_t i2, const ofa::ScratchView& s) {
      if (!ok) return;
      for (std::size_t k = 0; k < d.m; ++k) {
        const std::vector<ofa::Run> runs = support::runs_by_scan(d.tuple, i, i2, k);
        Cost expect_a = 0;
        for (const ofa::Run& r : runs)
          expect_a += static_cast<Cost>(support::com_by_scan(d.tuple, r.first, r.last).size()) +
                      tables.d(r.first, r.last);
        if (s.a[k] != expect_a || s.part_count[k] != runs.size() ||
            s.last_start[k] != runs.back().first) {
          ok = false;
          std::ostringstream out;
          out << "scratch arrays diverge at i=" << i + 1 << ", i'=" << i2 + 1 << ", k=" << k + 1
              << ", " << describe(d);
          detail = out.str();
          return;
        }
      }
    });
  }
  report(6, ok, "50 instrumented runs: a, part-count and last-run-start arrays match their definitions at every checkpoint",
         detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const support::Drawn d = support::draw_instance(15000 + trial, 8, 5);
    const CommonalityIndex ix = CommonalityIndex::build(d.tuple);
    for (std::size_t i = 0; i < d.n && ok; ++i)
      for (std::size_t i2 = i; i2 < d.n && ok; ++i2) {
        const std::vector<std::size_t> com = support::com_by_scan(d.tuple, i, i2);
        if (ix.com_size(i, i2) != com.size() || ix.com_positions(i, i2) != com) {
          ok = false;
          std::ostringstream out;
          out << "common-position table wrong at i=" << i + 1 << ", i'=" << i2 + 1 << ", "
              << describe(d);
          detail = out.str();
          break;
        }
        for (std::size_t k = 0; k < d.m && ok; ++k) {
          std::vector<ofa::Run> got;
          for (const ofa::Run& r : ix.runs(i, i2, k)) got.push_back(r);
          bool tiles = !got.empty() && got.front().first == i && got.back().last == i2;
          for (std::size_t r = 0; tiles && r < got.size(); ++r) {
            tiles = got[r].first <= got[r].last;
            if (r + 1 < got.size())
              tiles = tiles && got[r + 1].first == got[r].last + 1 &&
                      got[r + 1].symbol != got[r].symbol;
          }
          if (!tiles || got != support::runs_by_scan(d.tuple, i, i2, k)) {
            ok = false;
            std::ostringstream out;
            out << "run decomposition wrong at i=" << i + 1 << ", i'=" << i2 + 1
                << ", k=" << k + 1 << ", " << describe(d);
            detail = out.str();
          }
        }
      }
  }
  report(7, ok, "50 instances: common-position counts match direct scans; runs tile every range with alternating symbols",
         detail);
}

struct Timing {
  double median_ns;
  Cost total;
};

Timing measure(const StringTuple& t, const CommonalityIndex& ix, bool incremental) {
  std::vector<std::int64_t> samples;
  Cost total = 0;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const DpTables tables = incremental ? ofa::fast_solve(t, ix) : ofa::drss_solve(t, ix);
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    total = ofa::optimal_total(ix, tables);
  }
  std::sort(samples.begin(), samples.end());
  return {static_cast<double>(samples[2]), total};
}

void criterion8() {
  const StringTuple t100 = ofa::random_tuple(100, 32, 2, 21);
  const StringTuple t400 = ofa::random_tuple(400, 32, 2, 22);
  const StringTuple t800 = ofa::random_tuple(800, 32, 2, 23);
  const CommonalityIndex ix100 = CommonalityIndex::build(t100);
  const CommonalityIndex ix400 = CommonalityIndex::build(t400);
  const CommonalityIndex ix800 = CommonalityIndex::build(t800);

  const Timing fast100 = measure(t100, ix100, true);
  const Timing fast400 = measure(t400, ix400, true);
  const Timing fast800 = measure(t800, ix800, true);
  const Timing drss100 = measure(t100, ix100, false);
  const Timing drss400 = measure(t400, ix400, false);

  bool ok = true;
  std::string detail;
  if (fast100.total != drss100.total || fast400.total != drss400.total) {
    ok = false;
    detail = "solvers disagree on the optimum";
  }
  const double doubling = fast800.median_ns / fast400.median_ns;
  const double gap100 = drss100.median_ns / fast100.median_ns;
  const double gap400 = drss400.median_ns / fast400.median_ns;
  if (ok && (doubling < 2.5 || doubling > 6.5)) {
    ok = false;
    std::ostringstream out;
    out << "doubling factor " << doubling << " outside [2.5, 6.5]";
    detail = out.str();
  }
  if (ok && gap400 <= gap100) {
    ok = false;
    std::ostringstream out;
    out << "baseline/incremental ratio " << gap400 << " at n=400 not above " << gap100
        << " at n=100";
    detail = out.str();
  }
  std::ostringstream label;
  label << "scaling at m=32: n=400->800 multiplies incremental solve time by " << doubling
        << " (want [2.5, 6.5]); baseline/incremental ratio grows " << gap100 << " -> " << gap400;
  report(8, ok, label.str(), detail);
}

void criterion9() {
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < kVerifyTrials && ok; ++trial) {
    const support::Drawn d = support::draw_instance(kVerifyBase + trial, 6, 4);
    const CommonalityIndex ix = CommonalityIndex::build(d.tuple);
    const DpTables tables = ofa::fast_solve(d.tuple, ix);
    const Cost dtop = tables.d(0, d.n - 1);
    const Cost lower =
        static_cast<Cost>(ix.unc_positions(0, d.n - 1).size() + (d.n - 1));
    std::vector<std::size_t> all_positions(d.m);
    for (std::size_t k = 0; k < d.m; ++k) all_positions[k] = k;
    const Cost upper =
        static_cast<Cost>(support::fixed_order_trie_size(d.tuple, 0, d.n - 1, all_positions));
    if (dtop < lower || dtop > upper) {
      ok = false;
      std::ostringstream out;
      out << "bounds " << lower << " <= " << dtop << " <= " << upper << " violated, "
          << describe(d);
      detail = out.str();
    }
  }
  report(9, ok, "bound sandwich on all 500 verification instances: branch lower bound <= D <= fixed-order trie size",
         detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0)
    std::cout << "all 9 criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
