#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oodseg/rng.hpp"
#include "oodseg/tensor.hpp"

namespace oodseg {

// Named handle to a parameter (or buffer) tensor and its gradient slot.
// Buffers (batch-norm running stats) are serialized and checksummed but
// never touched by the optimizer.
struct ParamRef {
  std::string name;
  Tensor* value = nullptr;
  Tensor* grad = nullptr;
  bool buffer = false;
};

// 2-D convolution, NCHW, square kernel.
class Conv2d {
 public:
  Conv2d() = default;
  Conv2d(int in_ch, int out_ch, int ksize, int stride = 1, int pad = 0, int dilation = 1);

  void init_params(Rng& rng);
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);
  void collect(const std::string& prefix, std::vector<ParamRef>& out);

  int out_size(int in) const {
    return (in + 2 * pad_ - dilation_ * (ksize_ - 1) - 1) / stride_ + 1;
  }

 private:
  int in_ch_ = 0, out_ch_ = 0, ksize_ = 0, stride_ = 1, pad_ = 0, dilation_ = 1;
  Tensor weight_, bias_, wgrad_, bgrad_;
  Tensor cols_;                 // cached im2col, [B, Cin*k*k, OH*OW]
  std::vector<int> in_shape_;
};

// Batch normalization over the channel axis. Accepts [B,C,H,W] (stats over
// B*H*W) or [N,C] (stats over N).
class BatchNorm {
 public:
  BatchNorm() = default;
  explicit BatchNorm(int features);

  void set_training(bool on) { training_ = on; }
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);
  void collect(const std::string& prefix, std::vector<ParamRef>& out);

 private:
  int features_ = 0;
  bool training_ = true;
  double eps_ = 1e-5;
  double momentum_ = 0.1;
  Tensor gamma_, beta_, ggrad_, bgrad_;
  Tensor running_mean_, running_var_;
  Tensor xhat_, inv_std_;
  std::vector<int> in_shape_;
  int64_t per_channel_ = 0;
};

class ReLU {
 public:
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);

 private:
  std::vector<uint8_t> mask_;
};

// Fully connected layer on [N, in] -> [N, out].
class Linear {
 public:
  Linear() = default;
  Linear(int in, int out);

  void init_params(Rng& rng);
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);
  void collect(const std::string& prefix, std::vector<ParamRef>& out);

 private:
  int in_ = 0, out_ = 0;
  Tensor weight_, bias_, wgrad_, bgrad_;
  Tensor input_;
};

class Sigmoid {
 public:
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);

 private:
  Tensor output_;
};

// Bilinear upsampling by an integer factor (half-pixel centers).
class BilinearUpsample {
 public:
  BilinearUpsample() = default;
  explicit BilinearUpsample(int scale) : scale_(scale) {}

  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);

 private:
  int scale_ = 1;
  std::vector<int> in_shape_;
};

// Row-wise L2 normalization of [N, D] onto the unit sphere.
class L2Normalize {
 public:
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);

 private:
  Tensor output_;
  std::vector<double> norms_;
};

// conv -> bn -> relu -> conv -> bn (+ projection skip) -> relu
class ResidualBlock {
 public:
  ResidualBlock() = default;
  ResidualBlock(int in_ch, int out_ch, int stride);

  void init_params(Rng& rng);
  void set_training(bool on);
  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& gy);
  void collect(const std::string& prefix, std::vector<ParamRef>& out);

 private:
  Conv2d conv1_, conv2_, proj_;
  BatchNorm bn1_, bn2_, proj_bn_;
  ReLU relu1_, relu_out_;
  bool has_proj_ = false;
};

// FNV-1a over the raw bytes of every value tensor in `params`.
uint64_t param_checksum(const std::vector<ParamRef>& params);

}  // namespace oodseg
