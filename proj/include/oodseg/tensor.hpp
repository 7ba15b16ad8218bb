#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace oodseg {

// Dense row-major tensor of doubles, up to 4 dimensions.
// All network math runs in 64-bit so finite-difference checks are meaningful.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(count(shape_)), 0.0);
  }
  Tensor(std::initializer_list<int> shape) : Tensor(std::vector<int>(shape)) {}

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    std::fill(t.data_.begin(), t.data_.end(), v);
    return t;
  }

  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  const std::vector<int>& shape() const { return shape_; }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  double& at2(int a, int b) { return data_[idx2(a, b)]; }
  double at2(int a, int b) const { return data_[idx2(a, b)]; }
  double& at3(int a, int b, int c) { return data_[idx3(a, b, c)]; }
  double at3(int a, int b, int c) const { return data_[idx3(a, b, c)]; }
  double& at4(int a, int b, int c, int d) { return data_[idx4(a, b, c, d)]; }
  double at4(int a, int b, int c, int d) const { return data_[idx4(a, b, c, d)]; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
  void zero() { fill(0.0); }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  // Elementwise accumulate; shapes must match.
  void add_(const Tensor& o) {
    assert(same_shape(o));
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  }
  void scale_(double s) {
    for (double& v : data_) v *= s;
  }

 private:
  static int64_t count(const std::vector<int>& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
  }
  size_t idx2(int a, int b) const {
    assert(ndim() == 2);
    return static_cast<size_t>(a) * shape_[1] + b;
  }
  size_t idx3(int a, int b, int c) const {
    assert(ndim() == 3);
    return (static_cast<size_t>(a) * shape_[1] + b) * shape_[2] + c;
  }
  size_t idx4(int a, int b, int c, int d) const {
    assert(ndim() == 4);
    return ((static_cast<size_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d;
  }

  std::vector<int> shape_;
  std::vector<double> data_;
};

}  // namespace oodseg
