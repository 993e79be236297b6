#include "ofa/commonality_index.hpp"

#include <limits>

namespace ofa {

namespace {

// Conservative bound: any value the weighted solvers accumulate is below
// 2 n^2 m max_unify + (n^2 + 1) max_choice, so cap that by half the Cost
// range and reject models that could exceed it.
void check_cost_range(std::size_t n, std::size_t m, const CostModel& costs) {
  using Wide = unsigned __int128;
  const Wide worst = Wide(2) * n * n * m * Wide(costs.max_unify()) +
                     (Wide(n) * n + 1) * Wide(costs.max_choice());
  if (worst > Wide(std::numeric_limits<Cost>::max() / 2)) {
    throw CostOverflow("cost model entries too large for this instance; totals could overflow");
  }
}

}  // namespace

RunRange::iterator RunRange::begin() const {
  const std::size_t len = ix_->run_length(lo_, k_);
  const std::size_t last = std::min(lo_ + len - 1, hi_);
  return iterator(ix_, hi_, k_, Run{lo_, last, ix_->tuple().at(lo_, k_)});
}

RunRange::iterator& RunRange::iterator::operator++() {
  if (run_.last >= hi_) {
    done_ = true;
    return *this;
  }
  const std::size_t first = run_.last + 1;
  const std::size_t last = std::min(first + ix_->run_length(first, k_) - 1, hi_);
  run_ = Run{first, last, ix_->tuple().at(first, k_)};
  return *this;
}

CommonalityIndex CommonalityIndex::build(const StringTuple& tuple) {
  CommonalityIndex ix;
  ix.build_tables(tuple, nullptr);
  return ix;
}

CommonalityIndex CommonalityIndex::build(const StringTuple& tuple, const CostModel& costs) {
  if (costs.positions() != tuple.length()) {
    throw CostModelMismatch("cost model covers " + std::to_string(costs.positions()) +
                            " positions, tuple has length " + std::to_string(tuple.length()));
  }
  check_cost_range(tuple.size(), tuple.length(), costs);
  CommonalityIndex ix;
  ix.build_tables(tuple, &costs);
  return ix;
}

void CommonalityIndex::build_tables(const StringTuple& tuple, const CostModel* costs) {
  tuple_ = &tuple;
  n_ = tuple.size();
  m_ = tuple.length();
  has_costs_ = costs != nullptr;

  // R(i, k), bottom row first: extend the block below whenever the
  // character repeats.
  r_.assign(n_ * m_, 1);
  for (std::size_t i = n_ - 1; i-- > 0;) {
    for (std::size_t k = 0; k < m_; ++k) {
      if (tuple.at(i, k) == tuple.at(i + 1, k)) {
        r_[i * m_ + k] = r_[(i + 1) * m_ + k] + 1;
      }
    }
  }

  // C(i, i') counts positions whose run from i spans the whole range.
  c_ = TriMatrix<std::size_t>(n_, 0);
  if (costs) cw_ = TriMatrix<Cost>(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t i2 = i; i2 < n_; ++i2) {
      const std::size_t need = i2 - i + 1;
      std::size_t count = 0;
      Cost weight = 0;
      for (std::size_t k = 0; k < m_; ++k) {
        if (r_[i * m_ + k] >= need) {
          ++count;
          if (costs) weight += costs->unify(k, tuple.at(i, k));
        }
      }
      c_.at(i, i2) = count;
      if (costs) cw_.at(i, i2) = weight;
    }
  }
}

std::vector<std::size_t> CommonalityIndex::com_positions(std::size_t i, std::size_t i2) const {
  std::vector<std::size_t> out;
  const std::size_t need = i2 - i + 1;
  for (std::size_t k = 0; k < m_; ++k) {
    if (run_length(i, k) >= need) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> CommonalityIndex::unc_positions(std::size_t i, std::size_t i2) const {
  std::vector<std::size_t> out;
  const std::size_t need = i2 - i + 1;
  for (std::size_t k = 0; k < m_; ++k) {
    if (run_length(i, k) < need) out.push_back(k);
  }
  return out;
}

std::size_t CommonalityIndex::last_run_start(std::size_t i, std::size_t i2, std::size_t k) const {
  std::size_t start = i;
  for (const Run& run : runs(i, i2, k)) start = run.first;
  return start;
}

}  // namespace ofa
