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

// Irrep labels of U -> U^{(x)t} (x) conj(U)^{(x)t}.
//
// Every nonzero label with ||lambda||_1 = 2k is built from a partition of k
// into exactly n parts (the positive block) and a partition of k into at
// most d-n parts (the negated, reversed negative block).

#ifndef TDBOUND_REPCORE_LAMBDA_SET_HPP_
#define TDBOUND_REPCORE_LAMBDA_SET_HPP_

#include <vector>

#include "tdbound/repcore/weights.hpp"

namespace tdb::rep {

// All partitions of k into exactly n positive parts, parts nonincreasing.
std::vector<std::vector<int>> partitions_exact(int k, int n);

// p(k), p_n(k) (exactly n parts) and p~_n(k) (at most n parts).
BigInt partition_count(int k);
BigInt partition_count_exact(int k, int n);
BigInt partition_count_at_most(int k, int n);

// The nonzero labels of the t-th moment operator, ordered by norm and then
// descending lexicographically. Throws std::invalid_argument for d < 2 or
// t < 1.
std::vector<HighestWeight> enumerate_lambda_set(int d, int t);

// Number of labels with ||lambda||_1 = 2k.
BigInt count_irreps_by_norm(int d, int k);

}  // namespace tdb::rep

#endif  // TDBOUND_REPCORE_LAMBDA_SET_HPP_
