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

#include "cvqe/hubbard/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cvqe/errors.h"

namespace cvqe {
namespace {

double off_diagonal_norm2(const CMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return acc;
}

double frobenius2(const CMatrix& a) {
  double acc = 0.0;
  for (const Complex& x : a.data()) acc += std::norm(x);
  return acc;
}

// One rotation annihilating a(p, q), p < q. W = [[c, s], [-s conj(u), c conj(u)]]
// on the (p, q) plane, with u = a_pq / |a_pq|; A <- W^dagger A W, V <- V W.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex u = apq / r;
  const Complex ub = std::conj(u);
  const double app = a(p, p).real(), aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * ub * akq;
    a(k, q) = s * akp + c * ub * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * u * aqk;
    a(q, k) = s * apk + c * u * aqk;
  }
  a(p, q) = a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - s * ub * vkq;
    v(k, q) = s * vkp + c * ub * vkq;
  }
}

}  // namespace

EigenDecomposition eigh(const CMatrix& h) {
  if (!h.square()) throw DimensionError("eigh: matrix is not square");
  const double scale = std::sqrt(frobenius2(h));
  if (hermiticity_defect(h) > 1e-12 * std::max(1.0, scale)) throw ValidationError("eigh: matrix is not Hermitian");

  const std::size_t n = h.rows();
  CMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  CMatrix v = CMatrix::identity(n);
  const double target = std::pow(1e-15 * std::max(scale, 1e-300), 2);
  for (int sweep = 0; sweep < 100 && off_diagonal_norm2(a) > target; ++sweep)
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenDecomposition out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> eigenvalues(const CMatrix& h) { return eigh(h).values; }

GroundState ground_state_dense(const CMatrix& h) {
  if (h.rows() > kMaxDenseDimension) throw ResourceError("ground_state_dense: dimension exceeds dense limit");
  if (h.rows() == 0) throw DimensionError("ground_state_dense: empty matrix");
  EigenDecomposition d = eigh(h);
  GroundState g{d.values.front(), std::vector<Complex>(h.rows())};
  for (std::size_t r = 0; r < h.rows(); ++r) g.vector[r] = d.vectors(r, 0);
  return g;
}

double eigen_residual(const CMatrix& h, std::span<const Complex> v, double e) {
  const auto hv = matvec(h, v);
  double acc = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) acc += std::norm(hv[i] - e * v[i]);
  return std::sqrt(acc);
}

}  // namespace cvqe
