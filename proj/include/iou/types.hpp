#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iou/errors.hpp"

namespace iou {

// Sample size n, kernel order r, output dimension d.
struct Dimensions {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;

  void validate() const {
    require(n >= 1, errc::config, "dimensions: n must be >= 1");
    require(r >= 1, errc::config, "dimensions: r must be >= 1");
    require(d >= 1, errc::config, "dimensions: d must be >= 1");
    require(r <= n, errc::config, "dimensions: r must not exceed n");
  }
};

// The i.i.d. sample as an n x p table, row-major, plus an optional response
// column for regression kernels. Immutable after construction.
class DataMatrix {
 public:
  DataMatrix(std::int64_t rows, std::int64_t cols, std::vector<double> values,
             std::vector<double> response = {})
      : rows_(rows), cols_(cols), values_(std::move(values)), response_(std::move(response)) {
    require(rows_ >= 1 && cols_ >= 1, errc::data, "data matrix: need at least one row and column");
    require(static_cast<std::int64_t>(values_.size()) == rows_ * cols_, errc::data,
            "data matrix: value count does not match rows*cols");
    require(response_.empty() || static_cast<std::int64_t>(response_.size()) == rows_, errc::data,
            "data matrix: response length must equal the row count");
    for (double v : values_)
      require(std::isfinite(v), errc::input, "data matrix: non-finite value");
    for (double v : response_)
      require(std::isfinite(v), errc::input, "data matrix: non-finite response");
  }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  double at(std::int64_t i, std::int64_t j) const { return values_[i * cols_ + j]; }
  std::span<const double> row(std::int64_t i) const {
    return {values_.data() + i * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<double>& values() const { return values_; }
  bool has_response() const { return !response_.empty(); }
  double response(std::int64_t i) const { return response_[i]; }
  const std::vector<double>& responses() const { return response_; }

 private:
  std::int64_t rows_;
  std::int64_t cols_;
  std::vector<double> values_;
  std::vector<double> response_;
};

// Canonical r-tuple of row indices: strictly increasing.
struct TupleIndex {
  std::vector<std::uint32_t> idx;

  // Sorts and validates distinctness. Idempotent on canonical input.
  static TupleIndex canonical(std::vector<std::uint32_t> v);
};

void canonicalize_indices(std::span<std::uint32_t> v);

}  // namespace iou
