#pragma once

// Dense square matrix of doubles, row-major with contiguous rows so the
// vector kernels can run over full or prefix rows.

#include <cstddef>
#include <vector>

namespace sqen {

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }

  double* row(std::size_t i) { return data_.data() + i * n_; }
  const double* row(std::size_t i) const { return data_.data() + i * n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace sqen
