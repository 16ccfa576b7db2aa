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

#include "tdbound/repcore/lambda_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdb::rep {
namespace {

void partitions_rec(int remaining, int parts_left, int max_part,
                    std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // Each of the remaining parts is at least 1 and at most max_part.
  if (remaining < parts_left ||
      remaining > static_cast<long>(parts_left) * max_part)
    return;
  const int hi = std::min(remaining - (parts_left - 1), max_part);
  for (int part = hi; part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, parts_left - 1, part, prefix, out);
    prefix.pop_back();
  }
}

// table[n][k] = number of partitions of k into exactly n parts.
std::vector<std::vector<BigInt>> exact_table(int k_max, int n_max) {
  std::vector<std::vector<BigInt>> p(
      static_cast<std::size_t>(n_max + 1),
      std::vector<BigInt>(static_cast<std::size_t>(k_max + 1)));
  p[0][0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int k = n; k <= k_max; ++k)
      // Either some part equals 1 (drop it) or all parts >= 2 (subtract 1
      // from each).
      p[n][k] = p[n - 1][k - 1] + p[n][k - n];
  return p;
}

}  // namespace

std::vector<std::vector<int>> partitions_exact(int k, int n) {
  std::vector<std::vector<int>> out;
  if (k < 0 || n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(k, n, std::max(k, 1), prefix, out);
  return out;
}

BigInt partition_count_exact(int k, int n) {
  if (k < 0 || n < 0 || n > k) return (k == 0 && n == 0) ? 1 : 0;
  return exact_table(k, n)[n][k];
}

BigInt partition_count_at_most(int k, int n) {
  if (k < 0 || n < 0) return 0;
  const int cap = std::min(n, k);
  const auto p = exact_table(k, cap);
  BigInt total = 0;
  for (int j = 0; j <= cap; ++j) total += p[j][k];
  return total;
}

BigInt partition_count(int k) { return partition_count_at_most(k, k); }

BigInt count_irreps_by_norm(int d, int k) {
  if (d < 2 || k < 1)
    throw std::invalid_argument("count_irreps_by_norm needs d >= 2, k >= 1");
  const int n_max = std::min(d - 1, k);
  const auto p = exact_table(k, std::min(d, k));
  BigInt total = 0;
  for (int n = 1; n <= n_max; ++n) {
    BigInt at_most = 0;
    for (int j = 0; j <= std::min(d - n, k); ++j) at_most += p[j][k];
    total += p[n][k] * at_most;
  }
  return total;
}

std::vector<HighestWeight> enumerate_lambda_set(int d, int t) {
  if (d < 2) throw std::invalid_argument("enumerate_lambda_set needs d >= 2");
  if (t < 1) throw std::invalid_argument("enumerate_lambda_set needs t >= 1");

  std::vector<HighestWeight> out;
  for (int k = 1; k <= t; ++k) {
    std::vector<HighestWeight> slice;
    for (int n = 1; n <= std::min(d - 1, k); ++n) {
      const auto positive = partitions_exact(k, n);
      for (int m = 1; m <= std::min(d - n, k); ++m) {
        const auto negative = partitions_exact(k, m);
        for (const auto& eta : positive) {
          for (const auto& zeta : negative) {
            std::vector<int> entries(static_cast<std::size_t>(d), 0);
            std::copy(eta.begin(), eta.end(), entries.begin());
            for (int i = 0; i < m; ++i) entries[d - 1 - i] = -zeta[i];
            slice.emplace_back(std::move(entries));
          }
        }
      }
    }
    std::sort(slice.begin(), slice.end(),
              [](const HighestWeight& a, const HighestWeight& b) {
                return b < a;
              });
    for (auto& w : slice) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace tdb::rep
