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

// Dimensions and weight multiplicities of U(d) irreps, in exact arithmetic.
//
// Two independent multiplicity engines are provided: the Kostant alternating
// sum over S_d and the Freudenthal recursion. The Kostant partition function
// counts expressions over *all* positive roots e_i - e_j (i < j); restricting
// to simple roots would give the wrong count already at d = 3.

#ifndef TDBOUND_REPCORE_MULTIPLICITY_HPP_
#define TDBOUND_REPCORE_MULTIPLICITY_HPP_

#include <map>
#include <span>
#include <vector>

#include "tdbound/repcore/weights.hpp"

namespace tdb::rep {

// Weyl dimension formula, exact.
BigInt weyl_dimension(const HighestWeight& lambda);

// Memoized Kostant partition function for the A_{d-1} positive roots.
// Not thread-safe; use one instance per thread.
class KostantCounter {
 public:
  explicit KostantCounter(int d);

  int rank() const { return d_; }
  // Zero for vectors that do not sum to zero or leave the positive cone.
  BigInt count(std::span<const int> mu);

 private:
  BigInt count_from(std::size_t root, std::vector<int>& rest);

  int d_;
  std::vector<std::pair<int, int>> roots_;
  std::vector<std::map<std::vector<int>, BigInt>> memo_;
};

// Number of ways to write mu as a nonnegative integer combination of the
// positive roots. Non-integral or non-zero-sum mu gives 0.
BigInt kostant_partition(const WeightVector& mu, int d);

// m_lambda(mu) through the Kostant alternating sum over S_d. Throws
// WeylGroupTooLarge when d exceeds config.max_weyl_rank.
BigInt weight_multiplicity(const HighestWeight& lambda, const WeightVector& mu,
                           const RepConfig& config = {});

// m_lambda(mu) through the Freudenthal recursion. Same contract as
// weight_multiplicity.
BigInt freudenthal_multiplicity(const HighestWeight& lambda,
                                const WeightVector& mu,
                                const RepConfig& config = {});

// Caches m_lambda on dominant representatives for repeated queries against
// one lambda. Not thread-safe.
class MultiplicityTable {
 public:
  enum class Engine { Kostant, Freudenthal };

  MultiplicityTable(HighestWeight lambda, Engine engine = Engine::Kostant,
                    const RepConfig& config = {});

  const HighestWeight& lambda() const { return lambda_; }
  BigInt at(std::span<const int> mu);
  BigInt at(const WeightVector& mu);

  // Every weight in the integer box [-max|lambda_i|, max|lambda_i|]^d with
  // its multiplicity (zeros omitted).
  std::vector<std::pair<std::vector<int>, BigInt>> weight_system();

 private:
  BigInt kostant_dominant(const std::vector<int>& mu);
  BigInt freudenthal_dominant(const std::vector<int>& mu);
  bool dominated(const std::vector<int>& sorted_mu) const;

  HighestWeight lambda_;
  Engine engine_;
  KostantCounter kostant_;
  std::map<std::vector<int>, BigInt> cache_;
};

}  // namespace tdb::rep

#endif  // TDBOUND_REPCORE_MULTIPLICITY_HPP_
