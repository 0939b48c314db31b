#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ctrlgen::ad {

/// Dense tensor of 64-bit reals, rank 0 (scalar), 1 (vector) or 2 (matrix).
/// Storage is a flat row-major array. When requires_grad is set, `grad`
/// holds an accumulator of the same length; backward passes add into it and
/// never clear it, so callers zero it explicitly between steps.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;
  bool requires_grad = false;
  std::vector<double> grad;

  Tensor() = default;

  static Tensor zeros(std::vector<std::size_t> shape, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);
  static Tensor vec(std::vector<double> values, bool requires_grad = false);
  static Tensor mat(std::size_t rows, std::size_t cols, std::vector<double> values,
                    bool requires_grad = false);

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const { return rank() == 2 ? shape[0] : (rank() == 1 ? shape[0] : 1); }
  std::size_t cols() const { return rank() == 2 ? shape[1] : 1; }

  double& operator()(std::size_t i) { return data[i]; }
  double operator()(std::size_t i) const { return data[i]; }
  double& operator()(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }

  void set_requires_grad(bool on);
  void zero_grad();
  bool all_finite() const;
};

std::string shape_string(const std::vector<std::size_t>& shape);

}  // namespace ctrlgen::ad
