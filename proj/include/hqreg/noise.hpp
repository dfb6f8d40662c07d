#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hqreg/circuit.hpp"
#include "hqreg/density.hpp"

namespace hqreg {

// Completely positive trace-preserving map given by Kraus operators.
struct KrausChannel {
  int arity = 1;                        // 1 or 2 qubits
  std::vector<std::vector<cplx>> ops;   // each (2^arity)^2, row-major

  std::size_t op_dim() const { return std::size_t{1} << arity; }

  // max elementwise deviation of sum K^dagger K from the identity
  double trace_preserving_error() const;
};

// Per-hardware error rates and timing constants.
struct NoiseProfile {
  std::string name;
  double two_qubit_error = 0.0;
  double sx_error = 0.0;
  double readout_error = 0.0;
  double t1_seconds = 1.0;
  double t2_seconds = 1.0;
  double gate_time_seconds = 0.0;

  // Throws DataError when probabilities leave [0,1], times are not positive,
  // or t2 > 2*t1 (no physical pure-dephasing rate).
  void validate() const;
};

// Uniform Pauli-mixture channel. arity 1: {sqrt(1-p) I, sqrt(p/3) X/Y/Z};
// arity 2: {sqrt(1-p) II} + sqrt(p/15) times the 15 non-identity Pauli pairs.
// p = 0 degenerates to a single identity operator.
KrausChannel depolarizing_channel(double p, int arity);

// Relaxation and dephasing channels for one gate application:
// gamma = 1 - exp(-t_gate/T1), lambda = 1 - exp(-t_gate/Tphi) with the pure
// dephasing rate 1/Tphi = 1/T2 - 1/(2*T1) clamped at zero.
std::pair<KrausChannel, KrausChannel> damping_channels(
    const NoiseProfile& profile);

// Density-matrix evolution of the template with per-gate noise insertion:
// every Ry is followed by (1q depolarizing, amplitude damping, phase damping)
// on its qubit; every CNOT by (2q depolarizing, then amplitude + phase
// damping on both qubits). The readout error scales the final expectation:
// sum_i (1 - 2*readout_error) * <sigma_z^i>.
double run_noisy_template(const CircuitTemplate& tmpl,
                          std::span<const double> encoding_angles,
                          std::span<const double> params,
                          const NoiseProfile& profile);

// Final noisy state, before readout scaling.
DensityMatrix run_noisy_template_state(const CircuitTemplate& tmpl,
                                       std::span<const double> encoding_angles,
                                       std::span<const double> params,
                                       const NoiseProfile& profile);

// Loads a noise catalog CSV with header
//   name,two_qubit_error,sx_error,readout_error,t1_seconds,t2_seconds,gate_time_seconds
// Errors name the offending row and field. An empty catalog is allowed but
// warned about.
std::map<std::string, NoiseProfile> load_noise_catalog(
    const std::string& path);

}  // namespace hqreg
