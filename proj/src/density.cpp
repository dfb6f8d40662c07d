#include "hqreg/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hqreg/errors.hpp"
#include "hqreg/noise.hpp"

namespace hqreg {

DensityMatrix::DensityMatrix(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                      "], got " + std::to_string(n_qubits));
  }
  dim_ = std::size_t{1} << n_qubits;
  m_.assign(dim_ * dim_, cplx{0.0, 0.0});
  m_[0] = cplx{1.0, 0.0};
}

DensityMatrix DensityMatrix::from_statevector(const StateVector& psi) {
  DensityMatrix rho(psi.n_qubits());
  const auto& a = psi.amplitudes();
  for (std::size_t r = 0; r < rho.dim_; ++r) {
    for (std::size_t c = 0; c < rho.dim_; ++c) {
      rho.m_[r * rho.dim_ + c] = a[r] * std::conj(a[c]);
    }
  }
  return rho;
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += m_[i * dim_ + i].real();
  return t;
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum_{r,c} rho[r,c] * rho[c,r]; for Hermitian rho this is
  // sum |rho[r,c]|^2.
  double p = 0.0;
  for (const cplx& v : m_) p += std::norm(v);
  return p;
}

double DensityMatrix::hermiticity_error() const {
  double e = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      e = std::max(e, std::abs(m_[r * dim_ + c] -
                               std::conj(m_[c * dim_ + r])));
    }
  }
  return e;
}

double DensityMatrix::min_eigenvalue() const {
  // Cyclic Jacobi on the Hermitian part. Matrices here are small (dim <=
  // 2^12) and the method is only used for validation, so simplicity wins.
  const std::size_t n = dim_;
  std::vector<cplx> a(m_);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      cplx h = 0.5 * (a[r * n + c] + std::conj(a[c * n + r]));
      a[r * n + c] = h;
    }
  }
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        off += std::norm(a[p * n + q]);
      }
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx z = a[p * n + q];
        const double r = std::abs(z);
        if (r < 1e-300) continue;
        const cplx phase = z / r;  // e^{i phi}
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double tau = (aqq - app) / (2.0 * r);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx spos = s * phase;        // s e^{i phi}
        const cplx sneg = s * std::conj(phase);
        // columns: A <- A J
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a[i * n + p];
          const cplx aiq = a[i * n + q];
          a[i * n + p] = aip * c - aiq * sneg;
          a[i * n + q] = aip * spos + aiq * c;
        }
        // rows: A <- J^dagger A
        for (std::size_t i = 0; i < n; ++i) {
          const cplx api = a[p * n + i];
          const cplx aqi = a[q * n + i];
          a[p * n + i] = c * api - spos * aqi;
          a[q * n + i] = sneg * api + c * aqi;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  double mn = a[0].real();
  for (std::size_t i = 1; i < n; ++i) {
    mn = std::min(mn, a[i * n + i].real());
  }
  return mn;
}

std::vector<std::uint64_t> DensityMatrix::bit_patterns(
    std::span<const int> qubits) const {
  // patterns[l] = global index bits for local operator index l, where
  // qubits[0] is the most significant bit of l.
  const int k = static_cast<int>(qubits.size());
  const std::size_t od = std::size_t{1} << k;
  std::vector<std::uint64_t> patterns(od, 0);
  for (std::size_t l = 0; l < od; ++l) {
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1) {
        patterns[l] |= std::uint64_t{1} << (n_qubits_ - 1 - qubits[j]);
      }
    }
  }
  return patterns;
}

void DensityMatrix::check_qubits(std::span<const int> qubits,
                                 std::size_t op_dim) const {
  if ((std::size_t{1} << qubits.size()) != op_dim) {
    throw ShapeError("operator arity does not match qubit list length");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_qubits_) {
      throw std::out_of_range("qubit index out of range");
    }
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::domain_error("qubit indices must be distinct");
      }
    }
  }
}

void DensityMatrix::left_multiply(std::span<const cplx> op,
                                  std::span<const std::uint64_t> patterns) {
  const std::size_t od = patterns.size();
  std::uint64_t sel = 0;
  for (auto p : patterns) sel |= p;
  std::vector<cplx> in(od), out(od);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t base = 0; base < dim_; ++base) {
      if (base & sel) continue;
      for (std::size_t l = 0; l < od; ++l) {
        in[l] = m_[(base | patterns[l]) * dim_ + c];
      }
      for (std::size_t i = 0; i < od; ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t l = 0; l < od; ++l) {
          acc += op[i * od + l] * in[l];
        }
        out[i] = acc;
      }
      for (std::size_t i = 0; i < od; ++i) {
        m_[(base | patterns[i]) * dim_ + c] = out[i];
      }
    }
  }
}

void DensityMatrix::right_multiply_dagger(
    std::span<const cplx> op, std::span<const std::uint64_t> patterns) {
  const std::size_t od = patterns.size();
  std::uint64_t sel = 0;
  for (auto p : patterns) sel |= p;
  std::vector<cplx> in(od), out(od);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t base = 0; base < dim_; ++base) {
      if (base & sel) continue;
      for (std::size_t l = 0; l < od; ++l) {
        in[l] = m_[r * dim_ + (base | patterns[l])];
      }
      // (rho K^dagger)[r, i] = sum_l rho[r, l] * conj(K[i, l])
      for (std::size_t i = 0; i < od; ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t l = 0; l < od; ++l) {
          acc += in[l] * std::conj(op[i * od + l]);
        }
        out[i] = acc;
      }
      for (std::size_t i = 0; i < od; ++i) {
        m_[r * dim_ + (base | patterns[i])] = out[i];
      }
    }
  }
}

void DensityMatrix::apply_unitary(std::span<const cplx> u,
                                  std::span<const int> qubits) {
  const std::size_t od = std::size_t{1} << qubits.size();
  if (u.size() != od * od) {
    throw ShapeError("unitary size does not match qubit count");
  }
  check_qubits(qubits, od);
  const auto patterns = bit_patterns(qubits);
  left_multiply(u, patterns);
  right_multiply_dagger(u, patterns);
}

void DensityMatrix::apply_channel(const KrausChannel& ch,
                                  std::span<const int> qubits) {
  check_qubits(qubits, ch.op_dim());
  const auto patterns = bit_patterns(qubits);
  std::vector<cplx> acc(dim_ * dim_, cplx{0.0, 0.0});
  std::vector<cplx> original = m_;
  for (const auto& op : ch.ops) {
    m_ = original;
    left_multiply(op, patterns);
    right_multiply_dagger(op, patterns);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += m_[i];
  }
  m_ = std::move(acc);
}

double DensityMatrix::expect_z(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << (n_qubits_ - 1 - qubit);
  double e = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double p = m_[i * dim_ + i].real();
    e += (i & mask) ? -p : p;
  }
  return e;
}

double DensityMatrix::expect_z_sum() const {
  double e = 0.0;
  for (int q = 0; q < n_qubits_; ++q) e += expect_z(q);
  return e;
}

DensityMatrix from_statevector(const StateVector& psi) {
  return DensityMatrix::from_statevector(psi);
}

}  // namespace hqreg
