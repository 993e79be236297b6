#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "ofa/errors.hpp"
#include "ofa/string_tuple.hpp"

namespace ofa {

// Exact cost value. All model entries are non-negative integers; the
// solvers pre-check that no reachable sum can overflow (CostOverflow),
// so cost arithmetic never wraps.
using Cost = std::int64_t;

// Weighted objective: c_choice per position (charged at nodes with two
// or more children) and c_unify per (position, symbol) edge, with a
// default for unlisted pairs.
class CostModel {
public:
  CostModel(std::vector<Cost> choice, Cost unify_default);

  // Uniform model: every position has choice cost `choice` and every
  // (position, symbol) pair costs `unify`.
  static CostModel uniform(std::size_t positions, Cost choice, Cost unify);

  // Reads {"choice": [m ints], "unify_default": int,
  //        "unify": [[position, symbol, cost], ...]}
  // where positions are 1-based and symbols are single-character
  // strings. Throws std::invalid_argument on malformed input.
  static CostModel parse(std::string_view json_text);

  void set_unify(std::size_t position, Symbol symbol, Cost cost);

  std::size_t positions() const { return choice_.size(); }  // m
  Cost choice(std::size_t position) const;
  Cost unify(std::size_t position, Symbol symbol) const;

  // Largest entries; used by the overflow pre-checks.
  Cost max_choice() const;
  Cost max_unify() const;

private:
  std::vector<Cost> choice_;
  Cost unify_default_;
  std::map<std::pair<std::size_t, Symbol>, Cost> unify_;
};

}  // namespace ofa
