#pragma once

#include "ofa/commonality_index.hpp"
#include "ofa/cost_model.hpp"
#include "ofa/string_tuple.hpp"

namespace ofa {

// Exhaustive ground truth: minimum size (or cost) over every valid
// automaton, by memoized recursion over (interval, set of positions not
// yet tested). Unlike the interval solvers this explores testing a
// position common to its whole interval at any depth, so agreement is
// evidence for them, not a restatement. Exponential in m; guarded to
// n <= 12 and m <= 20, throwing InstanceTooLarge beyond that.
Cost oracle_min_size(const StringTuple& t, const CommonalityIndex& ix);
Cost oracle_min_cost(const StringTuple& t, const CommonalityIndex& ix, const CostModel& costs);

}  // namespace ofa
