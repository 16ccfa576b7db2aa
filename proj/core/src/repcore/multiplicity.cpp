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

#include "tdbound/repcore/multiplicity.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "tdbound/repcore/permutations.hpp"

namespace tdb::rep {
namespace {

long vec_sum(std::span<const int> v) {
  return std::accumulate(v.begin(), v.end(), 0L);
}

long vec_norm1(std::span<const int> v) {
  long s = 0;
  for (int x : v) s += std::labs(x);
  return s;
}

bool nonnegative_prefixes(std::span<const int> v) {
  long run = 0;
  for (int x : v) {
    run += x;
    if (run < 0) return false;
  }
  return true;
}

std::vector<int> sorted_desc(std::span<const int> v) {
  std::vector<int> s(v.begin(), v.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// Kostant alternating sum at mu, without any Weyl-orbit shortcut.
BigInt kostant_sum(const HighestWeight& lambda, std::span<const int> mu,
                   KostantCounter& counter) {
  const int d = lambda.rank();
  std::vector<int> shifted(static_cast<std::size_t>(d));
  BigInt total = 0;
  for_each_permutation(d, [&](std::span<const int> sigma, int sign) {
    // sigma.(lambda + rho) - (mu + rho), with rho_i = (d-1)/2 - i.
    for (int i = 0; i < d; ++i)
      shifted[i] = lambda[sigma[i]] - mu[i] + i - sigma[i];
    if (!nonnegative_prefixes(shifted)) return;
    const BigInt p = counter.count(shifted);
    if (sign > 0)
      total += p;
    else
      total -= p;
  });
  return total;
}

}  // namespace

BigInt weyl_dimension(const HighestWeight& lambda) {
  const int d = lambda.rank();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

KostantCounter::KostantCounter(int d) : d_(d) {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) roots_.emplace_back(i, j);
  memo_.resize(roots_.size());
}

BigInt KostantCounter::count(std::span<const int> mu) {
  if (static_cast<int>(mu.size()) != d_) return 0;
  if (vec_sum(mu) != 0 || !nonnegative_prefixes(mu)) return 0;
  std::vector<int> rest(mu.begin(), mu.end());
  return count_from(0, rest);
}

BigInt KostantCounter::count_from(std::size_t root, std::vector<int>& rest) {
  if (root == roots_.size()) {
    return std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })
               ? 1
               : 0;
  }
  auto& memo = memo_[root];
  if (auto it = memo.find(rest); it != memo.end()) return it->second;

  const auto [i, j] = roots_[root];
  BigInt total = 0;
  const int available = rest[i];
  if (available >= 0) {
    // Roots with head i are the only ones that can still lower coordinate i,
    // and the last of them must absorb whatever is left.
    const bool last_for_head = (j == d_ - 1);
    const int lo = last_for_head ? available : 0;
    for (int c = lo; c <= available; ++c) {
      rest[i] -= c;
      rest[j] += c;
      total += count_from(root + 1, rest);
      rest[i] += c;
      rest[j] -= c;
    }
  }
  memo.emplace(rest, total);
  return total;
}

BigInt kostant_partition(const WeightVector& mu, int d) {
  if (mu.rank() != d) return 0;
  const auto integral = mu.integral();
  if (!integral) return 0;
  KostantCounter counter(d);
  return counter.count(*integral);
}

BigInt weight_multiplicity(const HighestWeight& lambda, const WeightVector& mu,
                           const RepConfig& config) {
  const int d = lambda.rank();
  config.require_rank(d);
  if (mu.rank() != d) return 0;
  const auto integral = mu.integral();
  if (!integral) return 0;
  if (vec_sum(*integral) != lambda.sum() ||
      vec_norm1(*integral) > lambda.norm1())
    return 0;
  KostantCounter counter(d);
  return kostant_sum(lambda, *integral, counter);
}

BigInt freudenthal_multiplicity(const HighestWeight& lambda,
                                const WeightVector& mu,
                                const RepConfig& config) {
  MultiplicityTable table(lambda, MultiplicityTable::Engine::Freudenthal,
                          config);
  return table.at(mu);
}

MultiplicityTable::MultiplicityTable(HighestWeight lambda, Engine engine,
                                     const RepConfig& config)
    : lambda_(std::move(lambda)), engine_(engine), kostant_(lambda_.rank()) {
  config.require_rank(lambda_.rank());
}

bool MultiplicityTable::dominated(const std::vector<int>& sorted_mu) const {
  long run = 0;
  for (int i = 0; i < lambda_.rank(); ++i) {
    run += lambda_[i] - sorted_mu[i];
    if (run < 0) return false;
  }
  return run == 0;
}

BigInt MultiplicityTable::at(const WeightVector& mu) {
  if (mu.rank() != lambda_.rank()) return 0;
  const auto integral = mu.integral();
  if (!integral) return 0;
  return at(*integral);
}

BigInt MultiplicityTable::at(std::span<const int> mu) {
  if (static_cast<int>(mu.size()) != lambda_.rank()) return 0;
  if (vec_sum(mu) != lambda_.sum() || vec_norm1(mu) > lambda_.norm1())
    return 0;
  auto dominant = sorted_desc(mu);
  if (!dominated(dominant)) return 0;
  if (auto it = cache_.find(dominant); it != cache_.end()) return it->second;
  BigInt m = engine_ == Engine::Kostant ? kostant_dominant(dominant)
                                        : freudenthal_dominant(dominant);
  cache_.emplace(std::move(dominant), m);
  return m;
}

BigInt MultiplicityTable::kostant_dominant(const std::vector<int>& mu) {
  return kostant_sum(lambda_, mu, kostant_);
}

BigInt MultiplicityTable::freudenthal_dominant(const std::vector<int>& mu) {
  const int d = lambda_.rank();
  if (std::equal(mu.begin(), mu.end(), lambda_.entries().begin())) return 1;

  // (lambda+rho, lambda+rho) - (mu+rho, mu+rho), using the Euclidean form on
  // Z^d and 2 rho_i = d - 1 - 2i.
  long denom = 0;
  for (int i = 0; i < d; ++i) {
    denom += static_cast<long>(lambda_[i]) * lambda_[i] -
             static_cast<long>(mu[i]) * mu[i];
    denom += static_cast<long>(lambda_[i] - mu[i]) * (d - 1 - 2 * i);
  }

  BigInt sum = 0;
  std::vector<int> shifted(mu);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      shifted = mu;
      for (int k = 1;; ++k) {
        ++shifted[i];
        --shifted[j];
        const BigInt m = at(shifted);
        // Root strings through a weight are unbroken.
        if (m == 0) break;
        sum += m * (mu[i] - mu[j] + 2 * k);
      }
    }
  }
  return 2 * sum / denom;
}

std::vector<std::pair<std::vector<int>, BigInt>>
MultiplicityTable::weight_system() {
  const int d = lambda_.rank();
  int bound = 0;
  for (int x : lambda_.entries()) bound = std::max(bound, std::abs(x));
  const long target = lambda_.sum();

  std::vector<std::pair<std::vector<int>, BigInt>> out;
  std::vector<int> mu(static_cast<std::size_t>(d));
  std::function<void(int, long)> rec = [&](int pos, long partial) {
    if (pos == d - 1) {
      const long last = target - partial;
      if (std::labs(last) > bound) return;
      mu[pos] = static_cast<int>(last);
      BigInt m = at(mu);
      if (m != 0) out.emplace_back(mu, std::move(m));
      return;
    }
    for (int v = -bound; v <= bound; ++v) {
      mu[pos] = v;
      rec(pos + 1, partial + v);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace tdb::rep
