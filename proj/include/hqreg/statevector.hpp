#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hqreg {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 12;

// Pure n-qubit state as a dense vector of 2^n complex amplitudes.
//
// Bit convention used throughout the project: qubit 0 is the MOST significant
// bit of the basis index, so for n qubits the basis state |q0 q1 ... q(n-1)>
// has index q0*2^(n-1) + q1*2^(n-2) + ... + q(n-1).
class StateVector {
public:
  // |0...0>
  explicit StateVector(int n_qubits);

  static StateVector zero_state(int n_qubits) { return StateVector(n_qubits); }

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }
  cplx amplitude(std::size_t basis_index) const { return amps_[basis_index]; }

  double norm() const;

  // Ry(theta) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]] on one qubit.
  void apply_ry(int qubit, double theta);

  // Flips the target bit of every basis state whose control bit is 1.
  void apply_cnot(int control, int target);

  // sum_i <psi| sigma_z^i |psi> = sum_x |a_x|^2 * (n - 2*popcount(x)).
  double expect_z_sum() const;

  // <psi| sigma_z^qubit |psi>
  double expect_z(int qubit) const;

private:
  std::uint64_t qubit_mask(int qubit) const;
  void check_qubit(int qubit) const;

  int n_qubits_;
  std::vector<cplx> amps_;
};

// Value-returning forms matching the functional contracts.
StateVector new_zero_state(int n_qubits);
StateVector apply_ry(const StateVector& state, int qubit, double theta);
StateVector apply_cnot(const StateVector& state, int control, int target);
double expect_z_sum(const StateVector& state);

}  // namespace hqreg
