#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "ofa/cost_model.hpp"
#include "ofa/string_tuple.hpp"
#include "ofa/tri_matrix.hpp"

namespace ofa {

// Maximal block [first, last] of consecutive strings sharing `symbol`
// at the queried position.
struct Run {
  std::size_t first;
  std::size_t last;  // inclusive
  Symbol symbol;

  friend bool operator==(const Run&, const Run&) = default;
};

class CommonalityIndex;

// Lazy left-to-right enumeration of part(i, i', k). Each step costs
// O(1) off the run-length matrix, so consuming a prefix of the runs
// never pays for the whole range.
class RunRange {
public:
  class iterator {
  public:
    using value_type = Run;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Run& operator*() const { return run_; }
    const Run* operator->() const { return &run_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.ix_ == b.ix_ && a.hi_ == b.hi_ && a.k_ == b.k_ && a.run_ == b.run_;
    }

  private:
    friend class RunRange;
    iterator(const CommonalityIndex* ix, std::size_t hi, std::size_t k, Run run)
        : ix_(ix), hi_(hi), k_(k), run_(run), done_(false) {}

    const CommonalityIndex* ix_ = nullptr;
    std::size_t hi_ = 0;
    std::size_t k_ = 0;
    Run run_{};
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator(); }

private:
  friend class CommonalityIndex;
  RunRange(const CommonalityIndex* ix, std::size_t lo, std::size_t hi, std::size_t k)
      : ix_(ix), lo_(lo), hi_(hi), k_(k) {}

  const CommonalityIndex* ix_;
  std::size_t lo_, hi_, k_;
};

// Run-length matrix R plus the |com| lookup table C (and, when built
// with a cost model, the com_w table) for every subtuple. Building
// costs O(n^2 m) time and O(nm + n^2) space. Immutable once built; the
// tuple must outlive the index.
class CommonalityIndex {
public:
  static CommonalityIndex build(const StringTuple& tuple);
  // Throws CostModelMismatch when the model covers the wrong number of
  // positions, CostOverflow when the entries are large enough that a
  // downstream sum could exceed the Cost range.
  static CommonalityIndex build(const StringTuple& tuple, const CostModel& costs);

  const StringTuple& tuple() const { return *tuple_; }
  std::size_t strings() const { return n_; }     // n
  std::size_t positions() const { return m_; }   // m
  bool has_costs() const { return has_costs_; }

  // R(i, k): how many consecutive strings starting at S_i share the
  // character at position k. R(n-1, k) == 1.
  std::size_t run_length(std::size_t i, std::size_t k) const {
    assert(i < n_ && k < m_);
    return r_[i * m_ + k];
  }

  // |com(i, i')| in O(1).
  std::size_t com_size(std::size_t i, std::size_t i2) const { return c_.at(i, i2); }

  // com_w(i, i') in O(1). Throws NoCostModel when built without costs.
  Cost com_weight(std::size_t i, std::size_t i2) const {
    if (!has_costs_) throw NoCostModel();
    return cw_.at(i, i2);
  }

  // Whether position k is common to all of S_i..S_{i'}.
  bool is_common(std::size_t i, std::size_t i2, std::size_t k) const {
    return run_length(i, k) >= i2 - i + 1;
  }

  // Ascending positions; com and unc partition [0, m). O(m).
  std::vector<std::size_t> com_positions(std::size_t i, std::size_t i2) const;
  std::vector<std::size_t> unc_positions(std::size_t i, std::size_t i2) const;

  // part(i, i', k): the runs tiling [i, i'] left to right.
  RunRange runs(std::size_t i, std::size_t i2, std::size_t k) const {
    assert(i <= i2 && i2 < n_ && k < m_);
    return RunRange(this, i, i2, k);
  }

  // lastj(i, i', k): start index of the last run. O(|part(i, i', k)|);
  // the solver keeps its own O(1) copy, this exists for inspection.
  std::size_t last_run_start(std::size_t i, std::size_t i2, std::size_t k) const;

private:
  CommonalityIndex() = default;
  void build_tables(const StringTuple& tuple, const CostModel* costs);

  const StringTuple* tuple_ = nullptr;
  std::size_t n_ = 0, m_ = 0;
  bool has_costs_ = false;
  std::vector<std::size_t> r_;  // n x m, row-major
  TriMatrix<std::size_t> c_;
  TriMatrix<Cost> cw_;
};

}  // namespace ofa
