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


// Haar sampling of U(d)/SU(d) and random gate-set construction.

#ifndef TDBOUND_MONTECARLO_SAMPLING_HPP_
#define TDBOUND_MONTECARLO_SAMPLING_HPP_

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "tdbound/bounds/gate_set.hpp"

namespace tdb::mc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

// Independent stream for trial `index` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);
Rng make_rng(std::uint64_t seed, std::uint64_t index);

enum class HaarGroup { Unitary, Special };

// Ginibre matrix, QR, and the phases of diag(R) folded back into Q.
// Special divides by a d-th root of the determinant.
Matrix sample_haar(int d, Rng& rng, HaarGroup group = HaarGroup::Special);

// Embeds a 2x2 block into rows/columns (i, j) of the d x d identity.
Matrix lift_two_mode(const Matrix& block, int d, int i, int j);

struct GateSetSample {
  std::vector<Matrix> unitaries;
  GateSetKind kind = GateSetKind::Plain;
  std::uint64_t seed = 0;
  int d = 2;
};

// Plain: `size` SU(d) draws. Symmetric: size/2 draws followed by their
// inverses. BeamsplitterLifted: `size` SU(2) seeds, each lifted onto every
// ordered pair of modes (d(d-1) gates per seed).
GateSetSample sample_gate_set(int d, GateSetKind kind, long size,
                              std::uint64_t seed);

// max |U^dagger U - 1| entry.
double unitarity_defect(const Matrix& u);

}  // namespace tdb::mc

#endif  // TDBOUND_MONTECARLO_SAMPLING_HPP_
