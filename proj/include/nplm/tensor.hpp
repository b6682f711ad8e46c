#ifndef NPLM_TENSOR_HPP
#define NPLM_TENSOR_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nplm {

// Dense row-major f64 tensor. All learnable parameters and activations in
// this repo live in these; there are no sparse or reduced-precision paths.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s, double fill = 0.0)
      : shape(std::move(s)),
        data(std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                             std::multiplies<>()),
             fill) {}

  std::size_t size() const { return data.size(); }

  double& at(std::size_t i) { return data[i]; }
  double at(std::size_t i) const { return data[i]; }
  // 2-d access, shape = {rows, cols}
  double& at(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

struct AdamState {
  std::size_t step = 0;
  Tensor m, v;
  double lr = 3e-4;  // alignment default
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  explicit AdamState(const Tensor& params, double lr_ = 3e-4)
      : m(params.shape), v(params.shape), lr(lr_) {}
};

// In-place Adam update with bias correction. Deterministic: identical
// inputs give bit-identical outputs.
inline void adam_step(Tensor& params, const Tensor& grads, AdamState& state) {
  if (!params.same_shape(grads) || !params.same_shape(state.m))
    throw std::invalid_argument("adam_step: shape mismatch");
  if (!(state.lr > 0.0)) throw std::invalid_argument("adam_step: lr must be > 0");
  state.step += 1;
  const double b1 = state.beta1, b2 = state.beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads.data[i];
    state.m.data[i] = b1 * state.m.data[i] + (1.0 - b1) * g;
    state.v.data[i] = b2 * state.v.data[i] + (1.0 - b2) * g * g;
    const double mhat = state.m.data[i] / c1;
    const double vhat = state.v.data[i] / c2;
    params.data[i] -= state.lr * mhat / (std::sqrt(vhat) + state.eps);
  }
}

// loss = -log softmax(logits)[target], grad = softmax(logits) - onehot(target).
// Max-subtraction keeps exp() in range for any finite logits.
inline double softmax_cross_entropy(const std::vector<double>& logits,
                                    std::size_t target,
                                    std::vector<double>* grad) {
  const std::size_t v = logits.size();
  if (v < 2) throw std::invalid_argument("softmax_cross_entropy: need V >= 2");
  if (target >= v) throw std::invalid_argument("softmax_cross_entropy: target out of range");
  double mx = logits[0];
  for (double x : logits) {
    if (!std::isfinite(x)) throw std::runtime_error("softmax_cross_entropy: non-finite logit");
    if (x > mx) mx = x;
  }
  double z = 0.0;
  for (double x : logits) z += std::exp(x - mx);
  const double logz = std::log(z) + mx;
  if (grad) {
    grad->resize(v);
    for (std::size_t i = 0; i < v; ++i)
      (*grad)[i] = std::exp(logits[i] - logz) - (i == target ? 1.0 : 0.0);
  }
  return logz - logits[target];
}

// Central-difference gradient check. f evaluates the scalar loss at the
// given parameter vector; analytic is the gradient under test. Returns the
// max over coordinates of |analytic - numeric| / max(1e-8, |analytic| + |numeric|).
inline double grad_check(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<double>& params,
                         const std::vector<double>& analytic, double h = 1e-5) {
  if (params.size() != analytic.size())
    throw std::invalid_argument("grad_check: size mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("grad_check: h must be > 0");
  double worst = 0.0;
  std::vector<double> p = params;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double orig = p[i];
    p[i] = orig + h;
    const double fp = f(p);
    p[i] = orig - h;
    const double fm = f(p);
    p[i] = orig;
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw std::runtime_error("grad_check: non-finite loss");
    const double numeric = (fp - fm) / (2.0 * h);
    const double denom = std::max(1e-8, std::fabs(analytic[i]) + std::fabs(numeric));
    const double rel = std::fabs(analytic[i] - numeric) / denom;
    if (rel > worst) worst = rel;
  }
  return worst;
}

}  // namespace nplm

#endif  // NPLM_TENSOR_HPP
