#pragma once

#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "tpctf/error.hpp"

namespace tpctf {

/// Dense d-dimensional array, C order (last axis fastest).
template <typename T>
class TensorT {
 public:
  TensorT() = default;
  explicit TensorT(std::vector<size_t> shape)
      : shape_(std::move(shape)), data_(count(shape_)) {}
  TensorT(std::vector<size_t> shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (data_.size() != count(shape_)) throw ShapeError("tensor: data length != product of shape");
  }

  static size_t count(const std::vector<size_t>& shape) {
    size_t n = 1;
    for (size_t e : shape) n *= e;
    return n;
  }

  const std::vector<size_t>& shape() const { return shape_; }
  size_t ndim() const { return shape_.size(); }
  size_t size() const { return data_.size(); }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  T& operator[](size_t i) { return data_[i]; }
  const T& operator[](size_t i) const { return data_[i]; }

  std::vector<size_t> strides() const {
    std::vector<size_t> st(shape_.size(), 1);
    for (size_t i = shape_.size(); i-- > 1;) st[i - 1] = st[i] * shape_[i];
    return st;
  }

  bool same_shape(const TensorT& o) const { return shape_ == o.shape_; }

 private:
  std::vector<size_t> shape_;
  std::vector<T> data_;
};

using Tensor = TensorT<double>;
using CTensor = TensorT<std::complex<double>>;

inline CTensor to_complex(const Tensor& t) {
  CTensor out(t.shape());
  for (size_t i = 0; i < t.size(); ++i) out[i] = t[i];
  return out;
}

}  // namespace tpctf
