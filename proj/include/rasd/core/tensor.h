// Copyright 2026 rASD Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RASD_CORE_TENSOR_H_
#define RASD_CORE_TENSOR_H_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rasd/common/error.h"
#include "rasd/common/rng.h"

namespace rasd {
namespace core {

// Dense row-major tensor. Rank is dynamic but stays small (<= 4):
// (), (N), (C, T), (C, H, W) and (OC, C, KH, KW) cover everything here.
template <typename S>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    data_.assign(NumElements(shape_), S(0));
  }
  Tensor(std::vector<int64_t> shape, std::vector<S> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    RASD_CHECK(static_cast<int64_t>(data_.size()) == NumElements(shape_),
               InvalidInputError, "tensor data size does not match shape");
  }

  static int64_t NumElements(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) {
      RASD_CHECK(d >= 0, InvalidInputError, "negative dimension");
      n *= d;
    }
    return n;
  }

  static Tensor Scalar(S v) {
    Tensor t(std::vector<int64_t>{});
    t.data_[0] = v;
    return t;
  }

  static Tensor Full(std::vector<int64_t> shape, S v) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), v);
    return t;
  }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t dim(int i) const { return shape_.at(i); }
  int rank() const { return static_cast<int>(shape_.size()); }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  S* data() { return data_.data(); }
  const S* data() const { return data_.data(); }
  std::vector<S>& vec() { return data_; }
  const std::vector<S>& vec() const { return data_; }

  S& operator[](int64_t i) { return data_[i]; }
  S operator[](int64_t i) const { return data_[i]; }

  // Rank-2 / rank-3 indexed access used by the dsp and corpus code.
  S& at(int64_t r, int64_t c) { return data_[r * shape_[1] + c]; }
  S at(int64_t r, int64_t c) const { return data_[r * shape_[1] + c]; }
  S& at(int64_t c, int64_t h, int64_t w) {
    return data_[(c * shape_[1] + h) * shape_[2] + w];
  }
  S at(int64_t c, int64_t h, int64_t w) const {
    return data_[(c * shape_[1] + h) * shape_[2] + w];
  }

  bool SameShape(const Tensor& o) const { return shape_ == o.shape_; }

  Tensor Reshaped(std::vector<int64_t> shape) const {
    RASD_CHECK(NumElements(shape) == size(), InvalidInputError,
               "reshape changes element count");
    return Tensor(std::move(shape), data_);
  }

  bool AllFinite() const {
    for (S v : data_) {
      if (!std::isfinite(static_cast<double>(v))) return false;
    }
    return true;
  }

  void FillUniform(Rng& rng, double lo, double hi) {
    for (S& v : data_) v = static_cast<S>(rng.Uniform(lo, hi));
  }
  void FillGauss(Rng& rng, double stddev) {
    for (S& v : data_) v = static_cast<S>(rng.Gauss() * stddev);
  }

  template <typename U>
  Tensor<U> Cast() const {
    Tensor<U> out(shape_);
    for (int64_t i = 0; i < size(); ++i) out[i] = static_cast<U>(data_[i]);
    return out;
  }

  std::string ShapeStr() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < shape_.size(); ++i) {
      if (i) os << ",";
      os << shape_[i];
    }
    os << ")";
    return os.str();
  }

 private:
  std::vector<int64_t> shape_;
  std::vector<S> data_;
};

}  // namespace core

template <typename S>
using TensorT = core::Tensor<S>;
using TensorF = core::Tensor<float>;
using TensorD = core::Tensor<double>;

}  // namespace rasd

#endif  // RASD_CORE_TENSOR_H_
