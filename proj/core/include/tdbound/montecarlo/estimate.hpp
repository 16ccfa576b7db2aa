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


// Empirical side: delta(nu_S, t) = ||T_{nu_S,t} - T_{mu,t}||, tail
// frequencies over seeded trials, and SU(2) character averages.

#ifndef TDBOUND_MONTECARLO_ESTIMATE_HPP_
#define TDBOUND_MONTECARLO_ESTIMATE_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tdbound/montecarlo/moment.hpp"
#include "tdbound/montecarlo/sampling.hpp"

namespace tdb::mc {

struct PowerOptions {
  double relative_tolerance = 1e-8;
  int max_iterations = 20000;
  int restarts = 3;
  std::uint64_t seed = 0x5eed;
};

struct DeltaEstimate {
  double delta = 0.0;
  int iterations = 0;  // summed over restarts
  int restarts = 0;
  // Residual norm of the top Ritz pair over its Ritz value, best run.
  double last_change = 0.0;
};

class PowerIterationFailed : public std::runtime_error {
 public:
  PowerIterationFailed(const std::string& what, DeltaEstimate partial)
      : std::runtime_error(what), partial_(partial) {}
  const DeltaEstimate& partial() const { return partial_; }

 private:
  DeltaEstimate partial_;
};

// Largest singular value of T - Pi from the top eigenvalue of
// (T - Pi)^dagger (T - Pi): restarted Lanczos (a Krylov-accelerated power
// iteration) until the Ritz residual is within relative_tolerance, keeping
// the best of `restarts` random starts. max_iterations counts products.
DeltaEstimate estimate_delta(const MomentOperator& moment,
                             const HaarProjector& projector,
                             const PowerOptions& options = {});
DeltaEstimate estimate_delta(const GateSetSample& sample, int t,
                             const PowerOptions& options = {});

struct TrialRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  int iterations = 0;
};

struct TailEstimate {
  double fraction = 0.0;
  double stderr_fraction = 0.0;
  double mean_delta = 0.0;
  double stderr_mean = 0.0;
  std::vector<TrialRecord> trials;
};

// Fraction of trials with delta estimate >= delta_threshold. Trial k uses
// trial_seed(seed, k) for both sampling and power-iteration starts; results
// are reduced in trial order.
TailEstimate empirical_tail(int d, int t, GateSetKind kind, long size,
                            double delta_threshold, int trials,
                            std::uint64_t seed);

// Spin j = j_times_2/2 irrep of SU(2) on homogeneous polynomials of degree
// n = j_times_2, basis x^a y^(n-a)/sqrt(a!(n-a)!) with index m = n - a,
// acting by (pi(U) f)(z) = f(U^T z).
Matrix su2_irrep_matrix(int j_times_2, const Matrix& u);

struct McMean {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

// Haar average of tr pi(U^n) / (j_times_2 + 1) over SU(2).
McMean estimate_fs_indicator_mc(int j_times_2, int n, int trials,
                                std::uint64_t seed);

}  // namespace tdb::mc

#endif  // TDBOUND_MONTECARLO_ESTIMATE_HPP_
