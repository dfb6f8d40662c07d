#include "hqreg/noise.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hqreg/errors.hpp"
#include "hqreg/log.hpp"

namespace hqreg {

namespace {

using Mat2 = std::array<cplx, 4>;

constexpr cplx kI{0.0, 1.0};

const std::array<Mat2, 4> kPauli = {
    Mat2{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}},    // I
    Mat2{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}},    // X
    Mat2{cplx{0, 0}, -kI, kI, cplx{0, 0}},                   // Y
    Mat2{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}}};  // Z

std::vector<cplx> kron2(const Mat2& a, const Mat2& b) {
  std::vector<cplx> out(16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out[(i * 2 + k) * 4 + (j * 2 + l)] = a[i * 2 + j] * b[k * 2 + l];
  return out;
}

std::vector<cplx> scaled(std::vector<cplx> m, double f) {
  for (cplx& v : m) v *= f;
  return m;
}

}  // namespace

double KrausChannel::trace_preserving_error() const {
  const std::size_t d = op_dim();
  std::vector<cplx> acc(d * d, cplx{0.0, 0.0});
  for (const auto& k : ops) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        cplx s{0.0, 0.0};
        for (std::size_t m = 0; m < d; ++m) {
          s += std::conj(k[m * d + r]) * k[m * d + c];
        }
        acc[r * d + c] += s;
      }
    }
  }
  double err = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const cplx target = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      err = std::max(err, std::abs(acc[r * d + c] - target));
    }
  }
  return err;
}

void NoiseProfile::validate() const {
  auto check_prob = [this](double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DataError("noise profile '" + name + "': " + field +
                      " must be in [0, 1]");
    }
  };
  check_prob(two_qubit_error, "two_qubit_error");
  check_prob(sx_error, "sx_error");
  check_prob(readout_error, "readout_error");
  auto check_time = [this](double t, const char* field) {
    if (!(t > 0.0)) {
      throw DataError("noise profile '" + name + "': " + field +
                      " must be > 0");
    }
  };
  check_time(t1_seconds, "t1_seconds");
  check_time(t2_seconds, "t2_seconds");
  check_time(gate_time_seconds, "gate_time_seconds");
  if (t2_seconds > 2.0 * t1_seconds) {
    throw DataError("noise profile '" + name +
                    "': t2_seconds > 2*t1_seconds is unphysical");
  }
}

KrausChannel depolarizing_channel(double p, int arity) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("depolarizing probability must be in [0, 1]");
  }
  if (arity != 1 && arity != 2) {
    throw std::domain_error("depolarizing arity must be 1 or 2");
  }
  KrausChannel ch;
  ch.arity = arity;
  if (arity == 1) {
    if (p == 0.0) {
      ch.ops.push_back({kPauli[0].begin(), kPauli[0].end()});
      return ch;
    }
    const double w0 = std::sqrt(1.0 - p);
    const double w = std::sqrt(p / 3.0);
    ch.ops.push_back(scaled({kPauli[0].begin(), kPauli[0].end()}, w0));
    for (int i = 1; i < 4; ++i) {
      ch.ops.push_back(scaled({kPauli[i].begin(), kPauli[i].end()}, w));
    }
  } else {
    if (p == 0.0) {
      ch.ops.push_back(kron2(kPauli[0], kPauli[0]));
      return ch;
    }
    const double w0 = std::sqrt(1.0 - p);
    const double w = std::sqrt(p / 15.0);
    ch.ops.push_back(scaled(kron2(kPauli[0], kPauli[0]), w0));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == 0 && j == 0) continue;
        ch.ops.push_back(scaled(kron2(kPauli[i], kPauli[j]), w));
      }
    }
  }
  return ch;
}

std::pair<KrausChannel, KrausChannel> damping_channels(
    const NoiseProfile& profile) {
  const double t = profile.gate_time_seconds;
  const double gamma = 1.0 - std::exp(-t / profile.t1_seconds);

  double phi_rate =
      1.0 / profile.t2_seconds - 1.0 / (2.0 * profile.t1_seconds);
  if (phi_rate < 0.0) {
    warn("noise profile '" + profile.name +
         "': negative pure-dephasing rate clamped to zero");
    phi_rate = 0.0;
  }
  const double lambda = 1.0 - std::exp(-t * phi_rate);

  KrausChannel amp;
  amp.arity = 1;
  amp.ops.push_back({cplx{1, 0}, cplx{0, 0}, cplx{0, 0},
                     cplx{std::sqrt(1.0 - gamma), 0}});
  amp.ops.push_back({cplx{0, 0}, cplx{std::sqrt(gamma), 0}, cplx{0, 0},
                     cplx{0, 0}});

  KrausChannel phase;
  phase.arity = 1;
  phase.ops.push_back({cplx{1, 0}, cplx{0, 0}, cplx{0, 0},
                       cplx{std::sqrt(1.0 - lambda), 0}});
  phase.ops.push_back({cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
                       cplx{std::sqrt(lambda), 0}});

  return {amp, phase};
}

DensityMatrix run_noisy_template_state(const CircuitTemplate& tmpl,
                                       std::span<const double> encoding_angles,
                                       std::span<const double> params,
                                       const NoiseProfile& profile) {
  profile.validate();
  const auto [amp, phase] = damping_channels(profile);
  const KrausChannel dep1 = depolarizing_channel(profile.sx_error, 1);
  const KrausChannel dep2 = depolarizing_channel(profile.two_qubit_error, 2);

  DensityMatrix rho(tmpl.n_qubits());
  tmpl.visit_gates(encoding_angles, params, [&](const GateOp& g,
                                                double angle) {
    if (g.kind == GateOp::Kind::Ry) {
      const double c = std::cos(0.5 * angle);
      const double s = std::sin(0.5 * angle);
      const std::array<cplx, 4> u = {cplx{c, 0}, cplx{-s, 0}, cplx{s, 0},
                                     cplx{c, 0}};
      const std::array<int, 1> q = {g.target};
      rho.apply_unitary(u, q);
      rho.apply_channel(dep1, q);
      rho.apply_channel(amp, q);
      rho.apply_channel(phase, q);
    } else {
      // CNOT in the |control target> local basis.
      static const std::array<cplx, 16> u = {
          cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
          cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0},
          cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0},
          cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0}};
      const std::array<int, 2> qq = {g.control, g.target};
      rho.apply_unitary(u, qq);
      rho.apply_channel(dep2, qq);
      for (int q : qq) {
        const std::array<int, 1> one = {q};
        rho.apply_channel(amp, one);
        rho.apply_channel(phase, one);
      }
    }
  });
  return rho;
}

double run_noisy_template(const CircuitTemplate& tmpl,
                          std::span<const double> encoding_angles,
                          std::span<const double> params,
                          const NoiseProfile& profile) {
  const DensityMatrix rho =
      run_noisy_template_state(tmpl, encoding_angles, params, profile);
  const double readout_scale = 1.0 - 2.0 * profile.readout_error;
  double e = 0.0;
  for (int q = 0; q < tmpl.n_qubits(); ++q) {
    e += readout_scale * rho.expect_z(q);
  }
  return e;
}

namespace {

double parse_field(const std::string& text, int line_no,
                   const std::string& field) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw DataError("noise catalog row " + std::to_string(line_no) +
                    ": field '" + field + "' is not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::map<std::string, NoiseProfile> load_noise_catalog(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open noise catalog: " + path);
  }
  static const std::vector<std::string> kFields = {
      "name",        "two_qubit_error", "sx_error",         "readout_error",
      "t1_seconds",  "t2_seconds",      "gate_time_seconds"};

  std::map<std::string, NoiseProfile> catalog;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv_line(line);
    if (!saw_header) {
      if (cells.size() != kFields.size()) {
        throw DataError("noise catalog header must have " +
                        std::to_string(kFields.size()) + " columns");
      }
      for (std::size_t i = 0; i < kFields.size(); ++i) {
        if (cells[i] != kFields[i]) {
          throw DataError("noise catalog header column " + std::to_string(i) +
                          " must be '" + kFields[i] + "', got '" + cells[i] +
                          "'");
        }
      }
      saw_header = true;
      continue;
    }
    if (cells.size() != kFields.size()) {
      throw DataError("noise catalog row " + std::to_string(line_no) +
                      ": expected " + std::to_string(kFields.size()) +
                      " columns, got " + std::to_string(cells.size()));
    }
    NoiseProfile p;
    p.name = cells[0];
    if (p.name.empty()) {
      throw DataError("noise catalog row " + std::to_string(line_no) +
                      ": field 'name' is empty");
    }
    p.two_qubit_error = parse_field(cells[1], line_no, "two_qubit_error");
    p.sx_error = parse_field(cells[2], line_no, "sx_error");
    p.readout_error = parse_field(cells[3], line_no, "readout_error");
    p.t1_seconds = parse_field(cells[4], line_no, "t1_seconds");
    p.t2_seconds = parse_field(cells[5], line_no, "t2_seconds");
    p.gate_time_seconds = parse_field(cells[6], line_no, "gate_time_seconds");
    p.validate();
    if (catalog.count(p.name)) {
      throw DataError("noise catalog row " + std::to_string(line_no) +
                      ": duplicate profile name '" + p.name + "'");
    }
    catalog.emplace(p.name, std::move(p));
  }
  if (catalog.empty()) {
    warn("noise catalog '" + path + "' contains no profiles");
  }
  return catalog;
}

}  // namespace hqreg
