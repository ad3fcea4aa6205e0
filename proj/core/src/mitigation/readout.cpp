// Copyright 2026 The cvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvqe/mitigation/readout.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <string>

#include "cvqe/errors.h"
#include "cvqe/rng.h"

namespace cvqe {
namespace {

// Gauss-Jordan inverse with partial pivoting. Dimensions here are <= 16.
RMatrix invert(const RMatrix& m) {
  const std::size_t n = m.rows();
  RMatrix a = m;
  RMatrix inv = RMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0) throw MitigationError("readout calibration matrix is singular");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const double d = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0.0) continue;
      const double f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

double one_norm(const RMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += std::abs(m(r, c));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

void ReadoutCalibration::validate() const {
  const std::size_t dim = std::size_t{1} << q;
  if (q < 1 || matrix.rows() != dim || matrix.cols() != dim)
    throw ValidationError("ReadoutCalibration: matrix must be 2^q square");
  for (std::size_t c = 0; c < dim; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      if (matrix(r, c) < 0.0) throw ValidationError("ReadoutCalibration: negative entry");
      s += matrix(r, c);
    }
    if (std::abs(s - 1.0) > 1e-12) throw ValidationError("ReadoutCalibration: column does not sum to 1");
  }
}

ReadoutCalibration calibrate_readout(const BasisStateSampler& sampler, int q, std::uint64_t shots_per_state,
                                     std::uint64_t seed) {
  if (shots_per_state == 0) throw std::invalid_argument("calibrate_readout: shots_per_state must be >= 1");
  const std::size_t dim = std::size_t{1} << q;
  ReadoutCalibration cal{q, RMatrix(dim, dim), shots_per_state};
  for (std::uint64_t s = 0; s < dim; ++s) {
    const ShotCounts counts = sampler(s, shots_per_state, derive_seed(seed, s));
    if (counts.num_bits() != q) throw DimensionError("calibrate_readout: sampler returned the wrong width");
    const auto f = counts.frequencies();
    for (std::size_t r = 0; r < dim; ++r) cal.matrix(r, s) = f[r];
  }
  return cal;
}

ReadoutCalibration exact_readout_calibration(std::span<const ReadoutError> readout) {
  const int q = static_cast<int>(readout.size());
  const std::size_t dim = std::size_t{1} << q;
  ReadoutCalibration cal{q, RMatrix(dim, dim), 0};
  for (std::size_t s = 0; s < dim; ++s) {
    std::vector<double> basis(dim, 0.0);
    basis[s] = 1.0;
    const auto col = apply_readout_channel(basis, q, readout);
    for (std::size_t r = 0; r < dim; ++r) cal.matrix(r, s) = col[r];
  }
  return cal;
}

std::vector<double> apply_readout_correction(std::span<const double> observed, const ReadoutCalibration& cal) {
  const std::size_t dim = std::size_t{1} << cal.q;
  if (observed.size() != dim) throw DimensionError("apply_readout_correction: outcome width differs from calibration");
  const RMatrix inv = invert(cal.matrix);
  const double condition = one_norm(cal.matrix) * one_norm(inv);
  if (!(condition <= kMaxCalibrationCondition))
    throw MitigationError("readout calibration is ill-conditioned (condition " + std::to_string(condition) + ")");
  std::vector<double> p = matvec(inv, observed);
  for (double& x : p) x = std::max(x, 0.0);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(total > 0.0)) throw MitigationError("readout correction produced an empty distribution");
  for (double& x : p) x /= total;
  return p;
}

std::vector<double> apply_readout_correction(const ShotCounts& counts, const ReadoutCalibration& cal) {
  if (counts.num_bits() != cal.q) throw DimensionError("apply_readout_correction: outcome width differs from calibration");
  return apply_readout_correction(counts.frequencies(), cal);
}

void write_calibration(std::ostream& out, const ReadoutCalibration& cal) {
  out << "q " << cal.q << '\n' << "shots_per_state " << cal.shots_per_state << '\n';
  out << std::setprecision(17);
  for (std::size_t r = 0; r < cal.matrix.rows(); ++r) {
    for (std::size_t c = 0; c < cal.matrix.cols(); ++c) out << (c ? " " : "") << cal.matrix(r, c);
    out << '\n';
  }
}

ReadoutCalibration read_calibration(std::istream& in) {
  ReadoutCalibration cal;
  std::string key;
  if (!(in >> key >> cal.q) || key != "q" || cal.q < 1 || cal.q > 12)
    throw std::invalid_argument("calibration file: expected 'q <qubits>'");
  if (!(in >> key >> cal.shots_per_state) || key != "shots_per_state")
    throw std::invalid_argument("calibration file: expected 'shots_per_state <n>'");
  const std::size_t dim = std::size_t{1} << cal.q;
  cal.matrix = RMatrix(dim, dim);
  for (double& x : cal.matrix.data())
    if (!(in >> x)) throw std::invalid_argument("calibration file: matrix truncated");
  return cal;
}

}  // namespace cvqe
