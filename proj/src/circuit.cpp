#include "hqreg/circuit.hpp"

#include <string>

#include "hqreg/errors.hpp"

namespace hqreg {

CircuitTemplate::CircuitTemplate(int n_qubits, int depth_d)
    : n_qubits_(n_qubits), depth_(depth_d) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
  if (depth_d < 0) {
    throw ConfigError("depth_d must be >= 0, got " + std::to_string(depth_d));
  }
  ansatz_.reserve(static_cast<std::size_t>(depth_) *
                  (2 * n_qubits_ - (n_qubits_ > 1 ? 1 : 0)));
  for (int b = 0; b < depth_; ++b) {
    for (int q = 0; q < n_qubits_; ++q) {
      ansatz_.push_back(
          GateOp{GateOp::Kind::Ry, q, -1, b * n_qubits_ + q});
    }
    for (int q = 0; q + 1 < n_qubits_; ++q) {
      ansatz_.push_back(GateOp{GateOp::Kind::Cnot, q + 1, q, -1});
    }
  }
}

void CircuitTemplate::check_shapes(std::span<const double> encoding_angles,
                                   std::span<const double> params) const {
  if (encoding_angles.size() != static_cast<std::size_t>(n_qubits_)) {
    throw ShapeError("expected " + std::to_string(n_qubits_) +
                     " encoding angles, got " +
                     std::to_string(encoding_angles.size()));
  }
  if (params.size() != static_cast<std::size_t>(param_count())) {
    throw ShapeError("expected " + std::to_string(param_count()) +
                     " ansatz parameters, got " +
                     std::to_string(params.size()));
  }
}

void CircuitTemplate::visit_gates(
    std::span<const double> encoding_angles, std::span<const double> params,
    const std::function<void(const GateOp&, double)>& fn) const {
  check_shapes(encoding_angles, params);
  for (int q = 0; q < n_qubits_; ++q) {
    fn(GateOp{GateOp::Kind::Ry, q, -1, -1}, encoding_angles[q]);
  }
  for (const GateOp& g : ansatz_) {
    fn(g, g.kind == GateOp::Kind::Ry ? params[g.angle_slot] : 0.0);
  }
}

StateVector CircuitTemplate::run_state(std::span<const double> encoding_angles,
                                       std::span<const double> params) const {
  StateVector psi(n_qubits_);
  visit_gates(encoding_angles, params, [&](const GateOp& g, double angle) {
    if (g.kind == GateOp::Kind::Ry) {
      psi.apply_ry(g.target, angle);
    } else {
      psi.apply_cnot(g.control, g.target);
    }
  });
  return psi;
}

double CircuitTemplate::run(std::span<const double> encoding_angles,
                            std::span<const double> params) const {
  return run_state(encoding_angles, params).expect_z_sum();
}

}  // namespace hqreg
