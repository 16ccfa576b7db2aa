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


// Inversion of the bounds: minimal gate-set sizes, depth amplification and
// the Clifford-group comparison.

#ifndef TDBOUND_SOLVER_SOLVER_HPP_
#define TDBOUND_SOLVER_SOLVER_HPP_

#include <optional>

#include "tdbound/bounds/bounds.hpp"
#include "tdbound/repcore/weights.hpp"

namespace tdb {

struct MinSizeResult {
  // Full cardinality |S|; even for symmetric methods.
  long size = 0;
  BoundMethod method = BoundMethod::MasterPlain;
  // Total bound at size and at the previous admissible size (size - 1, or
  // size - 2 for symmetric methods). The latter is empty when size is the
  // smallest admissible value.
  double log_bound = 0.0;
  std::optional<double> log_bound_before;
  int d = 0;
  int t = 0;
  double delta = 0.0;
  double prob = 0.0;

  double raw_bound() const;
  // Number of generators: size/2 pairs for symmetric sets, size otherwise.
  long reported_size() const;
};

// ceil(2 (log(2 sum d_lambda) - log(1-P)) / log((1+delta)^(1+delta)
// (1-delta)^(1-delta))).
MinSizeResult min_size_closed_form(int d, int t, double delta, double prob,
                                   const rep::RepConfig& config = {});
long min_size_closed_form(const rep::BigInt& dimension_sum, double delta,
                          double prob);

// Smallest admissible S with total bound <= 1 - P. Exponential bracket then
// binary search; throws std::logic_error if the bound is seen to increase
// with S.
MinSizeResult min_size_search(const TotalBound& total, double delta,
                              double prob);
MinSizeResult min_size_search(int d, int t, double delta, double prob,
                              BoundMethod method,
                              const rep::RepConfig& config = {});

// Over-estimate with sum d_lambda replaced by d^(2t); not rounded.
double min_size_scaling(int d, int t, double delta, double prob);

// log((1+delta)^(1+delta) (1-delta)^(1-delta)).
double rate_denominator(double delta);

// |C_n| = 2^(n^2+2n) prod_{j=1..n} (4^j - 1).
rep::BigInt clifford_cardinality(int n);

struct CliffordRatio {
  int qubits = 0;
  rep::BigInt cardinality;
  // ceil(2e4 (log(2^(4n+1) - 3 2^(2n+1) + 2) + 4.61)).
  long rounded_size = 0;
  // The closed-form minimal size at d = 2^n, t = 2, delta = 0.01, P = 0.99,
  // using sum d_lambda = d^4 - 3 d^2 + 1.
  long exact_size = 0;
  rep::Rational ratio;  // |C_n| / rounded_size
  double log10_ratio = 0.0;
  double log10_ratio_exact = 0.0;  // |C_n| / exact_size
};

// Defined for 1 <= n <= 50.
CliffordRatio clifford_ratio(int n);

// Smallest l with delta0^l <= target.
int depth_for_target(double delta0, double target);

}  // namespace tdb

#endif  // TDBOUND_SOLVER_SOLVER_HPP_
