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

// Haar averages of power maps over SU(d), delta_lambda(n) =
// (1/d_lambda) E chi_lambda(U^n), and the gamma_lambda(k) coefficients that
// enter the symmetric master bound. Weights are read in SU(d): the U(d)
// weight over an SU(d) weight mu is mu + (sum(lambda)/d)(1, ..., 1).

#ifndef TDBOUND_REPCORE_INDICATOR_HPP_
#define TDBOUND_REPCORE_INDICATOR_HPP_

#include <vector>

#include "tdbound/repcore/weights.hpp"

namespace tdb::rep {

enum class IndicatorPath {
  // Shortcut m_lambda(0)/d_lambda for |n| >= d+1.
  Auto,
  // Always evaluate the signed sum over S_d.
  WeylSum,
};

// Multiplicity of the SU(d) zero weight, i.e. of the U(d) weight
// (sum/d, ..., sum/d); 0 when d does not divide sum(lambda).
BigInt zero_weight_multiplicity(const HighestWeight& lambda,
                                const RepConfig& config = {});

// delta_lambda(n). Needs the S_d sum for 1 <= |n| <= d, so throws
// WeylGroupTooLarge there when d is beyond the cap.
Rational fs_indicator(const HighestWeight& lambda, int n,
                      const RepConfig& config = {},
                      IndicatorPath path = IndicatorPath::Auto);

// delta_lambda(2) for a zero-sum lambda without touching S_d: such irreps
// factor through PU(d), so a self-dual one is real (indicator +1) and any
// other is complex (indicator 0). Used past the Weyl-group cap.
Rational fs_indicator_two_by_duality(const HighestWeight& lambda);

// gamma_lambda(k) for k in [-d, d].
class GammaTable {
 public:
  GammaTable() = default;
  GammaTable(int d, std::vector<Rational> values);

  int rank() const { return d_; }
  const Rational& at(int k) const;
  double value(int k) const;

 private:
  int d_ = 0;
  std::vector<Rational> values_;
  std::vector<double> doubles_;
};

GammaTable gamma_coefficients(const HighestWeight& lambda,
                              const RepConfig& config = {});

}  // namespace tdb::rep

#endif  // TDBOUND_REPCORE_INDICATOR_HPP_
