#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "ofa/commonality_index.hpp"
#include "ofa/cost_model.hpp"
#include "ofa/string_tuple.hpp"
#include "ofa/tri_matrix.hpp"

namespace ofa {

enum class Flavor { Unweighted, Weighted };

// Interval table D(i, i') — minimum size (or cost) of an automaton for
// the uncommon positions of S_i..S_{i'} — plus the minimizing position
// kstar(i, i') for every i < i'. Ties break to the smallest position,
// so both solvers produce bit-identical tables. Immutable.
class DpTables {
public:
  static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

  DpTables(Flavor flavor, TriMatrix<Cost> d, TriMatrix<std::size_t> kstar)
      : flavor_(flavor), d_(std::move(d)), kstar_(std::move(kstar)) {}

  Flavor flavor() const { return flavor_; }
  std::size_t size() const { return d_.dim(); }  // n

  Cost d(std::size_t i, std::size_t i2) const { return d_.at(i, i2); }

  std::size_t kstar(std::size_t i, std::size_t i2) const {
    assert(i < i2);
    return kstar_.at(i, i2);
  }

private:
  Flavor flavor_;
  TriMatrix<Cost> d_;
  TriMatrix<std::size_t> kstar_;
};

// Hook for inspecting the incremental solver's rolling arrays. Invoked
// once per (i, i') cell, after the cell and the common-position updates
// are finished; at that moment a[k] = A(i, i', k), part_count[k] =
// |part(i, i', k)| and last_start[k] = lastj(i, i', k) for every k.
// The spans alias solver-owned storage and must not be retained.
struct ScratchView {
  std::span<const Cost> a;
  std::span<const std::size_t> part_count;
  std::span<const std::size_t> last_start;
};
using ScratchObserver = std::function<void(std::size_t i, std::size_t i2, const ScratchView&)>;

// Baseline interval dynamic program: evaluates every cell from scratch
// by walking its runs. O(n^2 m (n + m)) worst case; kept as the
// reference comparator.
//
// The weighted variants require an index built with the same cost
// model (NoCostModel / CostModelMismatch otherwise).
DpTables drss_solve(const StringTuple& t, const CommonalityIndex& ix);
DpTables drss_solve_weighted(const StringTuple& t, const CommonalityIndex& ix, const CostModel& costs);

// Incremental solver: reuses each row's run structure so a cell costs
// O(m), for O(n^2 m) total. Produces the same tables as the baseline.
DpTables fast_solve(const StringTuple& t, const CommonalityIndex& ix,
                    const ScratchObserver& observer = {});
DpTables fast_solve_weighted(const StringTuple& t, const CommonalityIndex& ix,
                             const CostModel& costs, const ScratchObserver& observer = {});

// |com(0, n-1)| + D(0, n-1) for unweighted tables, the com_w analog for
// weighted ones. Throws FlavorMismatch when weighted tables are paired
// with an index built without costs.
Cost optimal_total(const CommonalityIndex& ix, const DpTables& tables);

}  // namespace ofa
