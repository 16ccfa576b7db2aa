// Copyright 2026 The tdbound Authors.
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


#include "tdbound/montecarlo/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace tdb::mc {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(trial_seed(seed, index));
}

Matrix sample_haar(int d, Rng& rng, HaarGroup group) {
  if (d < 1) throw std::invalid_argument("matrix size must be >= 1");
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix z(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) z(r, c) = Complex(normal(rng), normal(rng));

  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    q.col(c) *= mag > 0.0 ? diag / mag : Complex(1.0);
  }
  if (group == HaarGroup::Special) {
    const Complex det = q.determinant();
    q *= std::exp(Complex(0.0, -std::arg(det) / d));
  }
  return q;
}

Matrix lift_two_mode(const Matrix& block, int d, int i, int j) {
  if (block.rows() != 2 || block.cols() != 2)
    throw std::invalid_argument("two-mode block must be 2x2");
  if (i == j || i < 0 || j < 0 || i >= d || j >= d)
    throw std::invalid_argument("two-mode indices must be distinct and < d");
  Matrix m = Matrix::Identity(d, d);
  m(i, i) = block(0, 0);
  m(i, j) = block(0, 1);
  m(j, i) = block(1, 0);
  m(j, j) = block(1, 1);
  return m;
}

GateSetSample sample_gate_set(int d, GateSetKind kind, long size,
                              std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  validate_size(kind, size);
  GateSetSample out;
  out.kind = kind;
  out.seed = seed;
  out.d = d;
  Rng rng(seed);
  switch (kind) {
    case GateSetKind::Plain:
      for (long k = 0; k < size; ++k)
        out.unitaries.push_back(sample_haar(d, rng));
      break;
    case GateSetKind::Symmetric: {
      for (long k = 0; k < size / 2; ++k)
        out.unitaries.push_back(sample_haar(d, rng));
      for (long k = 0; k < size / 2; ++k)
        out.unitaries.push_back(out.unitaries[k].adjoint());
      break;
    }
    case GateSetKind::BeamsplitterLifted:
      for (long k = 0; k < size; ++k) {
        const Matrix b = sample_haar(2, rng);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            if (i != j) out.unitaries.push_back(lift_two_mode(b, d, i, j));
      }
      break;
  }
  return out;
}

double unitarity_defect(const Matrix& u) {
  const Matrix e = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return e.cwiseAbs().maxCoeff();
}

}  // namespace tdb::mc
