#pragma once

#include <span>
#include <vector>

#include "hqreg/statevector.hpp"

namespace hqreg {

struct KrausChannel;

// Mixed n-qubit state as a dense 2^n x 2^n complex matrix (row-major).
// Same bit convention as StateVector: qubit 0 is the most significant bit.
class DensityMatrix {
public:
  // |0...0><0...0|
  explicit DensityMatrix(int n_qubits);

  static DensityMatrix from_statevector(const StateVector& psi);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return dim_; }

  cplx at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
  cplx& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  const std::vector<cplx>& entries() const { return m_; }

  double trace_real() const;
  double purity() const;  // tr(rho^2)

  // max_{r,c} |rho[r][c] - conj(rho[c][r])|
  double hermiticity_error() const;

  // Smallest eigenvalue of the Hermitian part, via cyclic Jacobi.
  double min_eigenvalue() const;

  // rho -> U rho U^dagger with U a 2^k x 2^k matrix on the given qubits
  // (qubits[0] = most significant bit of the local operator index).
  void apply_unitary(std::span<const cplx> u, std::span<const int> qubits);

  // rho -> sum_K (K rho K^dagger) on the given qubits; preserves trace.
  void apply_channel(const KrausChannel& ch, std::span<const int> qubits);

  double expect_z(int qubit) const;
  double expect_z_sum() const;

private:
  void check_qubits(std::span<const int> qubits, std::size_t op_dim) const;
  void left_multiply(std::span<const cplx> op,
                     std::span<const std::uint64_t> patterns);
  void right_multiply_dagger(std::span<const cplx> op,
                             std::span<const std::uint64_t> patterns);
  std::vector<std::uint64_t> bit_patterns(std::span<const int> qubits) const;

  int n_qubits_;
  std::size_t dim_;
  std::vector<cplx> m_;
};

DensityMatrix from_statevector(const StateVector& psi);

}  // namespace hqreg
