#include "hqreg/vqr.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hqreg/errors.hpp"

namespace hqreg {

std::vector<double> encode(std::span<const double> embedding) {
  std::vector<double> angles(embedding.size());
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    if (!std::isfinite(embedding[i])) {
      throw std::domain_error("embedding entry " + std::to_string(i) +
                              " is not finite");
    }
    angles[i] = std::atan(embedding[i]) + std::numbers::pi / 2.0;
  }
  return angles;
}

double encode_derivative(double x) { return 1.0 / (1.0 + x * x); }

double vqr_forward(std::span<const double> embedding, const VqrParams& params,
                   const CircuitTemplate& tmpl, const QuantumEvaluator& eval) {
  const auto angles = encode(embedding);
  return eval.run(tmpl, angles, params.angles);
}

VqrGradient param_shift_grad(std::span<const double> embedding,
                             const VqrParams& params,
                             const CircuitTemplate& tmpl,
                             const QuantumEvaluator& eval) {
  if (embedding.size() != static_cast<std::size_t>(tmpl.n_qubits())) {
    throw ShapeError("embedding length does not match template qubit count");
  }
  if (params.angles.size() != static_cast<std::size_t>(tmpl.param_count())) {
    throw ShapeError("parameter count does not match template");
  }
  constexpr double kShift = std::numbers::pi / 2.0;

  const std::vector<double> enc = encode(embedding);
  VqrGradient grad;
  grad.d_params.resize(params.angles.size());
  grad.d_inputs.resize(embedding.size());

  std::vector<double> shifted = params.angles;
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    const double orig = shifted[j];
    shifted[j] = orig + kShift;
    const double plus = eval.run(tmpl, enc, shifted);
    shifted[j] = orig - kShift;
    const double minus = eval.run(tmpl, enc, shifted);
    shifted[j] = orig;
    grad.d_params[j] = 0.5 * (plus - minus);
  }

  std::vector<double> enc_shifted = enc;
  for (std::size_t i = 0; i < enc_shifted.size(); ++i) {
    const double orig = enc_shifted[i];
    enc_shifted[i] = orig + kShift;
    const double plus = eval.run(tmpl, enc_shifted, params.angles);
    enc_shifted[i] = orig - kShift;
    const double minus = eval.run(tmpl, enc_shifted, params.angles);
    enc_shifted[i] = orig;
    grad.d_inputs[i] = 0.5 * (plus - minus) * encode_derivative(embedding[i]);
  }
  return grad;
}

}  // namespace hqreg
