#include "ofa/oracle.hpp"

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "ofa/errors.hpp"

namespace ofa {
namespace {

constexpr std::size_t kMaxStrings = 12;
constexpr std::size_t kMaxPositions = 20;

// Strictly larger than any achievable value; saturating adds keep
// infeasible branches at the sentinel so min-folds need no casework.
constexpr Cost kInfeasible = std::numeric_limits<Cost>::max() / 4;

Cost sat_add(Cost a, Cost b) {
  assert(a >= 0 && b >= 0);
  if (b >= kInfeasible || a >= kInfeasible - b) return kInfeasible;
  return a + b;
}

struct Searcher {
  const StringTuple& t;
  const CommonalityIndex& ix;
  const CostModel& costs;
  std::unordered_map<std::uint64_t, Cost> memo;

  // Cheapest fragment handling S_i..S_i2 whose every path tests exactly
  // the positions in `remaining`.
  Cost opt(std::size_t i, std::size_t i2, std::uint32_t remaining) {
    if (remaining == 0) return i == i2 ? 0 : kInfeasible;
    if (i == i2) {
      // Forced chain over the leftover positions.
      Cost total = 0;
      for (std::size_t k = 0; k < t.length(); ++k)
        if (remaining >> k & 1u) total = sat_add(total, costs.unify(k, t.at(i, k)));
      return total;
    }
    const std::uint64_t key =
        remaining | (static_cast<std::uint64_t>(i) << 20) | (static_cast<std::uint64_t>(i2) << 32);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Cost best = kInfeasible;
    for (std::size_t k = 0; k < t.length(); ++k) {
      if (!(remaining >> k & 1u)) continue;
      Cost cand = 0;
      std::size_t children = 0;
      for (const Run& r : ix.runs(i, i2, k)) {
        ++children;
        cand = sat_add(cand, costs.unify(k, r.symbol));
        cand = sat_add(cand, opt(r.first, r.last, remaining & ~(1u << k)));
      }
      if (children >= 2) cand = sat_add(cand, costs.choice(k));
      if (cand < best) best = cand;
    }
    memo[key] = best;
    return best;
  }
};

Cost search(const StringTuple& t, const CommonalityIndex& ix, const CostModel& costs) {
  assert(ix.tuple() == t);
  if (t.size() > kMaxStrings || t.length() > kMaxPositions)
    throw InstanceTooLarge("exact search is limited to n <= " + std::to_string(kMaxStrings) +
                           ", m <= " + std::to_string(kMaxPositions) + "; got n = " +
                           std::to_string(t.size()) + ", m = " + std::to_string(t.length()));
  Searcher searcher{t, ix, costs, {}};
  const std::uint32_t full = (1u << t.length()) - 1u;
  const Cost result = searcher.opt(0, t.size() - 1, full);
  // A valid tuple always admits an automaton, so the sentinel here can
  // only mean the sums grew past it.
  if (result >= kInfeasible) throw CostOverflow("cost model too large for the exact search");
  return result;
}

}  // namespace

Cost oracle_min_size(const StringTuple& t, const CommonalityIndex& ix) {
  return search(t, ix, CostModel::uniform(t.length(), 0, 1));
}

Cost oracle_min_cost(const StringTuple& t, const CommonalityIndex& ix, const CostModel& costs) {
  if (costs.positions() != t.length())
    throw CostModelMismatch("cost model covers " + std::to_string(costs.positions()) +
                            " positions, tuple has " + std::to_string(t.length()));
  return search(t, ix, costs);
}

}  // namespace ofa
