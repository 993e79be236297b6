#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace ofa {

// Dense upper-triangular n x n storage; only entries (i, j) with
// i <= j exist.
template <typename T>
class TriMatrix {
public:
  TriMatrix() = default;
  TriMatrix(std::size_t n, T fill) : n_(n), cells_(n * (n + 1) / 2, fill) {}

  std::size_t dim() const { return n_; }

  T& at(std::size_t i, std::size_t j) { return cells_[offset(i, j)]; }
  const T& at(std::size_t i, std::size_t j) const { return cells_[offset(i, j)]; }

private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    assert(i <= j && j < n_);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t n_ = 0;
  std::vector<T> cells_;
};

}  // namespace ofa
