#include "ofa/dp_solver.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ofa/errors.hpp"

namespace ofa {
namespace {

// The two flavors differ only in how a subinterval is priced: the size
// objective counts common positions, the cost objective adds their
// unification costs plus a per-position choice cost at branch points.
struct UnweightedPolicy {
  const CommonalityIndex& ix;
  Cost com(std::size_t i, std::size_t i2) const {
    return static_cast<Cost>(ix.com_size(i, i2));
  }
  Cost single(std::size_t) const { return static_cast<Cost>(ix.positions()); }
  Cost choice(std::size_t) const { return 0; }
};

struct WeightedPolicy {
  const CommonalityIndex& ix;
  const CostModel& costs;
  Cost com(std::size_t i, std::size_t i2) const { return ix.com_weight(i, i2); }
  Cost single(std::size_t i) const { return ix.com_weight(i, i); }
  Cost choice(std::size_t k) const { return costs.choice(k); }
};

void require_weighted_inputs(const CommonalityIndex& ix, const CostModel& costs) {
  if (!ix.has_costs()) throw NoCostModel();
  if (costs.positions() != ix.positions())
    throw CostModelMismatch("cost model covers " + std::to_string(costs.positions()) +
                            " positions, tuple has " + std::to_string(ix.positions()));
}

// Reference recurrence, evaluated from scratch per cell:
//   D(i, i') = min over uncommon k of
//              choice(k) + sum over runs (j, j') of part(i, i', k)
//                          of com(j, j') - com(i, i') + D(j, j').
// Every run is a proper subinterval on the first axis or a shorter one
// on the second, so row-descending / column-ascending order has each
// D(j, j') final before it is read.
template <class Policy>
DpTables drss_impl(const CommonalityIndex& ix, const Policy& policy, Flavor flavor) {
  const std::size_t n = ix.strings();
  TriMatrix<Cost> d(n, 0);
  TriMatrix<std::size_t> kstar(n, DpTables::kNoPosition);

  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t i2 = i + 1; i2 < n; ++i2) {
      const Cost com_ii2 = policy.com(i, i2);
      Cost best = std::numeric_limits<Cost>::max();
      std::size_t best_k = DpTables::kNoPosition;
      for (std::size_t k : ix.unc_positions(i, i2)) {
        Cost sum = policy.choice(k);
        for (const Run& r : ix.runs(i, i2, k))
          sum += policy.com(r.first, r.last) - com_ii2 + d.at(r.first, r.last);
        if (sum < best) {
          best = sum;
          best_k = k;
        }
      }
      if (best_k == DpTables::kNoPosition)
        throw std::logic_error("proper interval with no uncommon position");
      d.at(i, i2) = best;
      kstar.at(i, i2) = best_k;
    }
  }
  return DpTables(flavor, std::move(d), std::move(kstar));
}

// Incremental solver. Per row i it carries, for every position k,
//   a[k]          = A(i, i', k) = sum over runs of com(j, j') + D(j, j'),
//   part_count[k] = |part(i, i', k)|,
//   last_start[k] = first string of the rightmost run,
// so extending i' to i'+1 touches one run per position and
//   D(i, i') = min over uncommon k of
//              choice(k) + a[k] - part_count[k] * com(i, i').
template <class Policy>
DpTables fast_impl(const CommonalityIndex& ix, const Policy& policy, Flavor flavor,
                   const ScratchObserver& observer) {
  const std::size_t n = ix.strings();
  const std::size_t m = ix.positions();
  const StringTuple& t = ix.tuple();
  TriMatrix<Cost> d(n, 0);
  TriMatrix<std::size_t> kstar(n, DpTables::kNoPosition);

  std::vector<Cost> a(m);
  std::vector<std::size_t> part_count(m);
  std::vector<std::size_t> last_start(m);

  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = 0; k < m; ++k) {
      a[k] = policy.single(i);
      part_count[k] = 1;
      last_start[k] = i;
    }
    if (observer) observer(i, i, ScratchView{a, part_count, last_start});

    for (std::size_t i2 = i + 1; i2 < n; ++i2) {
      const Cost com_prev = policy.com(i, i2 - 1);
      const Cost com_ii2 = policy.com(i, i2);
      Cost best = std::numeric_limits<Cost>::max();
      std::size_t best_k = DpTables::kNoPosition;

      // Append row i2 to each uncommon position's run structure, then
      // fold it into the minimum while the value is at hand. A position
      // handled here was already uncommon one column earlier whenever
      // its last run extends, so the D cells it reads are final.
      for (std::size_t k : ix.unc_positions(i, i2)) {
        if (t.at(i2, k) == t.at(i2 - 1, k)) {
          // Row i2 extends the rightmost run.
          const std::size_t jl = last_start[k];
          a[k] += policy.com(jl, i2) + d.at(jl, i2) - policy.com(jl, i2 - 1) - d.at(jl, i2 - 1);
        } else {
          // Row i2 opens a fresh single-string run.
          a[k] += policy.single(i2);
          part_count[k] += 1;
          last_start[k] = i2;
        }
        const Cost candidate =
            policy.choice(k) + a[k] - static_cast<Cost>(part_count[k]) * com_ii2;
        if (candidate < best) {
          best = candidate;
          best_k = k;
        }
      }
      if (best_k == DpTables::kNoPosition)
        throw std::logic_error("proper interval with no uncommon position");
      d.at(i, i2) = best;
      kstar.at(i, i2) = best_k;

      // A position common to the whole interval is a single run, so its
      // A value is com(i, i2) + D(i, i2); the update waits here because
      // it needs the D cell fixed just above.
      const Cost shift = com_ii2 + best - com_prev - d.at(i, i2 - 1);
      for (std::size_t k : ix.com_positions(i, i2)) a[k] += shift;

      if (observer) observer(i, i2, ScratchView{a, part_count, last_start});
    }
  }
  return DpTables(flavor, std::move(d), std::move(kstar));
}

}  // namespace

DpTables drss_solve(const StringTuple& t, const CommonalityIndex& ix) {
  assert(ix.tuple() == t);
  (void)t;
  return drss_impl(ix, UnweightedPolicy{ix}, Flavor::Unweighted);
}

DpTables drss_solve_weighted(const StringTuple& t, const CommonalityIndex& ix,
                             const CostModel& costs) {
  assert(ix.tuple() == t);
  (void)t;
  require_weighted_inputs(ix, costs);
  return drss_impl(ix, WeightedPolicy{ix, costs}, Flavor::Weighted);
}

DpTables fast_solve(const StringTuple& t, const CommonalityIndex& ix,
                    const ScratchObserver& observer) {
  assert(ix.tuple() == t);
  (void)t;
  return fast_impl(ix, UnweightedPolicy{ix}, Flavor::Unweighted, observer);
}

DpTables fast_solve_weighted(const StringTuple& t, const CommonalityIndex& ix,
                             const CostModel& costs, const ScratchObserver& observer) {
  assert(ix.tuple() == t);
  (void)t;
  require_weighted_inputs(ix, costs);
  return fast_impl(ix, WeightedPolicy{ix, costs}, Flavor::Weighted, observer);
}

Cost optimal_total(const CommonalityIndex& ix, const DpTables& tables) {
  assert(ix.strings() == tables.size());
  const std::size_t last = ix.strings() - 1;
  if (tables.flavor() == Flavor::Weighted) {
    if (!ix.has_costs())
      throw FlavorMismatch("weighted tables paired with an index built without costs");
    return ix.com_weight(0, last) + tables.d(0, last);
  }
  return static_cast<Cost>(ix.com_size(0, last)) + tables.d(0, last);
}

}  // namespace ofa
