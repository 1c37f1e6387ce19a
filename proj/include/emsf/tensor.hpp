// Copyright 2025 The emsf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emsf/common.hpp"

namespace emsf {

// Dense row-major float32 tensor of rank 1..4. The canonical activation
// layout is [batch, height, width, channels] so the channel axis is
// contiguous. Tensors are value types; kernels never mutate their inputs,
// which makes any tensor safe to share across threads read-only.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    validate_shape();
    data_.assign(static_cast<size_t>(numel()), 0.0f);
  }

  static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int64_t> shape, float value) {
    Tensor t(std::move(shape));
    for (float& v : t.data_) v = value;
    return t;
  }

  static Tensor from_data(std::vector<int64_t> shape, std::vector<float> data) {
    Tensor t;
    t.shape_ = std::move(shape);
    t.validate_shape();
    check_cfg(static_cast<int64_t>(data.size()) == t.numel(),
              "tensor data length does not match shape");
    t.data_ = std::move(data);
    return t;
  }

  int rank() const { return static_cast<int>(shape_.size()); }
  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }

  int64_t numel() const {
    int64_t n = 1;
    for (int64_t d : shape_) n *= d;
    return shape_.empty() ? 0 : n;
  }

  bool empty() const { return shape_.empty(); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }

  float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  float& at(int64_t a) { return data_[static_cast<size_t>(a)]; }
  float at(int64_t a) const { return data_[static_cast<size_t>(a)]; }
  float& at(int64_t a, int64_t b) { return data_[static_cast<size_t>(a * shape_[1] + b)]; }
  float at(int64_t a, int64_t b) const { return data_[static_cast<size_t>(a * shape_[1] + b)]; }
  float& at(int64_t a, int64_t b, int64_t c) {
    return data_[static_cast<size_t>((a * shape_[1] + b) * shape_[2] + c)];
  }
  float at(int64_t a, int64_t b, int64_t c) const {
    return data_[static_cast<size_t>((a * shape_[1] + b) * shape_[2] + c)];
  }
  float& at(int64_t a, int64_t b, int64_t c, int64_t d) {
    return data_[static_cast<size_t>(((a * shape_[1] + b) * shape_[2] + c) * shape_[3] + d)];
  }
  float at(int64_t a, int64_t b, int64_t c, int64_t d) const {
    return data_[static_cast<size_t>(((a * shape_[1] + b) * shape_[2] + c) * shape_[3] + d)];
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  // Same data, new shape (extent product must match).
  Tensor reshaped(std::vector<int64_t> shape) const {
    Tensor t;
    t.shape_ = std::move(shape);
    t.validate_shape();
    check_cfg(t.numel() == numel(), "reshape changes element count");
    t.data_ = data_;
    return t;
  }

 private:
  void validate_shape() const {
    check_cfg(!shape_.empty() && shape_.size() <= 4, "tensor rank must be 1..4");
    for (int64_t d : shape_) check_cfg(d >= 1, "tensor extents must be >= 1");
  }

  std::vector<int64_t> shape_;
  std::vector<float> data_;
};

inline std::string shape_str(const std::vector<int64_t>& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

inline void check_finite(const Tensor& t, const char* op) {
  const float* p = t.data();
  const int64_t n = t.numel();
  for (int64_t i = 0; i < n; ++i) {
    if (!std::isfinite(p[i])) {
      throw NumericError(std::string(op) + ": non-finite value at flat index " +
                         std::to_string(i));
    }
  }
}

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
  check_cfg(a.numel() == b.numel(), "max_abs_diff: size mismatch");
  double m = 0.0;
  for (int64_t i = 0; i < a.numel(); ++i) {
    m = std::max(m, std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])));
  }
  return m;
}

}  // namespace emsf
