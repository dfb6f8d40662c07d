#include "hqreg/statevector.hpp"

#include <bit>
#include <cmath>

#include "hqreg/errors.hpp"

namespace hqreg {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = cplx{1.0, 0.0};
}

std::uint64_t StateVector::qubit_mask(int qubit) const {
  // Qubit 0 is the most significant bit of the basis index.
  return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n_qubits_) +
                            " qubits");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply_ry(int qubit, double theta) {
  check_qubit(qubit);
  if (!std::isfinite(theta)) {
    throw std::domain_error("Ry angle must be finite");
  }
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const std::uint64_t mask = qubit_mask(qubit);
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::uint64_t j = i | mask;
    const cplx a0 = amps_[i];
    const cplx a1 = amps_[j];
    amps_[i] = c * a0 - s * a1;
    amps_[j] = s * a0 + c * a1;
  }
}

void StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::domain_error("CNOT control and target must differ");
  }
  const std::uint64_t cmask = qubit_mask(control);
  const std::uint64_t tmask = qubit_mask(target);
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amps_[i], amps_[i | tmask]);
    }
  }
}

double StateVector::expect_z_sum() const {
  const int n = n_qubits_;
  double e = 0.0;
  for (std::uint64_t x = 0; x < amps_.size(); ++x) {
    const double p = std::norm(amps_[x]);
    if (p != 0.0) e += p * (n - 2 * std::popcount(x));
  }
  return e;
}

double StateVector::expect_z(int qubit) const {
  check_qubit(qubit);
  const std::uint64_t mask = qubit_mask(qubit);
  double e = 0.0;
  for (std::uint64_t x = 0; x < amps_.size(); ++x) {
    const double p = std::norm(amps_[x]);
    e += (x & mask) ? -p : p;
  }
  return e;
}

StateVector new_zero_state(int n_qubits) { return StateVector(n_qubits); }

StateVector apply_ry(const StateVector& state, int qubit, double theta) {
  StateVector out = state;
  out.apply_ry(qubit, theta);
  return out;
}

StateVector apply_cnot(const StateVector& state, int control, int target) {
  StateVector out = state;
  out.apply_cnot(control, target);
  return out;
}

double expect_z_sum(const StateVector& state) { return state.expect_z_sum(); }

}  // namespace hqreg
