#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hqreg/statevector.hpp"

namespace hqreg {

struct GateOp {
  enum class Kind { Ry, Cnot };
  Kind kind = Kind::Ry;
  int target = 0;
  int control = -1;     // CNOT only
  int angle_slot = -1;  // Ry only: index into the trainable parameter array,
                        // or -1 for an encoding gate (angle supplied at run
                        // time, slot = target qubit)
};

// Encoder + ansatz circuit structure. The encoder is one Ry per qubit whose
// angle is supplied at run time. The ansatz stacks `depth_d` blocks, each
// being Ry on every qubit (ascending) followed by the open CNOT chain
// q0->q1, q1->q2, ..., q(n-2)->q(n-1). Trainable parameters are laid out
// block-major: block b, qubit q -> slot b*n + q.
class CircuitTemplate {
public:
  CircuitTemplate(int n_qubits, int depth_d);

  int n_qubits() const { return n_qubits_; }
  int depth() const { return depth_; }
  int param_count() const { return depth_ * n_qubits_; }

  // Ansatz gates only, in application order.
  const std::vector<GateOp>& ansatz_gates() const { return ansatz_; }

  // Walks the full circuit (encoding gates, then ansatz) in application
  // order, passing each gate and its resolved angle (0 for CNOT).
  void visit_gates(std::span<const double> encoding_angles,
                   std::span<const double> params,
                   const std::function<void(const GateOp&, double)>& fn) const;

  // Evolves |0...0> through the circuit and returns expect_z_sum.
  double run(std::span<const double> encoding_angles,
             std::span<const double> params) const;

  // Final state instead of the decoded expectation.
  StateVector run_state(std::span<const double> encoding_angles,
                        std::span<const double> params) const;

private:
  void check_shapes(std::span<const double> encoding_angles,
                    std::span<const double> params) const;

  int n_qubits_;
  int depth_;
  std::vector<GateOp> ansatz_;
};

inline double run_template(const CircuitTemplate& tmpl,
                           std::span<const double> encoding_angles,
                           std::span<const double> params) {
  return tmpl.run(encoding_angles, params);
}

}  // namespace hqreg
