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

#ifndef TDBOUND_REPCORE_PERMUTATIONS_HPP_
#define TDBOUND_REPCORE_PERMUTATIONS_HPP_

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace tdb::rep {

inline int permutation_sign(std::span<const int> sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

// Calls f(sigma, sgn(sigma)) for every sigma in S_n, identity first, in
// lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    f(std::span<const int>(sigma), permutation_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Number of cycles of a permutation given in one-line notation.
inline int cycle_count(std::span<const int> sigma) {
  std::vector<char> seen(sigma.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j]))
      seen[j] = 1;
  }
  return cycles;
}

}  // namespace tdb::rep

#endif  // TDBOUND_REPCORE_PERMUTATIONS_HPP_
