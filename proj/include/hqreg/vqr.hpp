#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hqreg/circuit.hpp"
#include "hqreg/noise.hpp"

namespace hqreg {

// Angle embedding theta_i = arctan(x_i) + pi/2, strictly increasing per
// coordinate with range (0, pi).
std::vector<double> encode(std::span<const double> embedding);

// d theta / d x = 1 / (1 + x^2)
double encode_derivative(double x);

// Trainable rotation angles, block-major (block 0 qubits 0..n-1, block 1 ...).
struct VqrParams {
  std::vector<double> angles;
};

struct VqrGradient {
  std::vector<double> d_params;  // one per ansatz angle
  std::vector<double> d_inputs;  // one per embedding coordinate
};

// Runs a template either exactly (statevector) or under a noise profile
// (density matrix). One switch point so forward and gradient paths always
// agree on the backend.
class QuantumEvaluator {
public:
  QuantumEvaluator() = default;
  explicit QuantumEvaluator(NoiseProfile profile)
      : profile_(std::move(profile)) {}

  bool noisy() const { return profile_.has_value(); }
  const NoiseProfile* profile() const {
    return profile_ ? &*profile_ : nullptr;
  }

  double run(const CircuitTemplate& tmpl, std::span<const double> enc,
             std::span<const double> params) const {
    return profile_ ? run_noisy_template(tmpl, enc, params, *profile_)
                    : tmpl.run(enc, params);
  }

private:
  std::optional<NoiseProfile> profile_;
};

// Decoder output for an embedding: run_template(tmpl, encode(embedding),
// params.angles). Result is bounded by [-n_qubits, n_qubits].
double vqr_forward(std::span<const double> embedding, const VqrParams& params,
                   const CircuitTemplate& tmpl,
                   const QuantumEvaluator& eval = {});

// Exact gradients via the two-point parameter-shift rule:
//   dE/dtheta_j = (E(theta_j + pi/2) - E(theta_j - pi/2)) / 2
// Input gradients shift the encoding angle the same way and chain through
// the arctan derivative.
VqrGradient param_shift_grad(std::span<const double> embedding,
                             const VqrParams& params,
                             const CircuitTemplate& tmpl,
                             const QuantumEvaluator& eval = {});

}  // namespace hqreg
