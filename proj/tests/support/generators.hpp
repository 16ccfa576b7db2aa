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


// Hand-rolled generators for the property suites: a seeded stream and
// helpers that draw valid inputs for each module.

#ifndef TDBOUND_TESTS_SUPPORT_GENERATORS_HPP_
#define TDBOUND_TESTS_SUPPORT_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace tdb::gen {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::uint64_t bits() { return rng_(); }

  // Nonincreasing d-tuple with entries in [-bound, bound].
  std::vector<int> highest_weight(int d, int bound) {
    std::vector<int> v(static_cast<std::size_t>(d));
    for (auto& x : v) x = integer(-bound, bound);
    std::sort(v.rbegin(), v.rend());
    return v;
  }

  // Nonzero zero-sum label with positive part at most t.
  std::vector<int> lambda_set_member(int d, int t) {
    for (;;) {
      auto v = highest_weight(d, t);
      int sum = 0;
      int pos = 0;
      for (int x : v) {
        sum += x;
        pos += std::max(x, 0);
      }
      // Push the sum to zero by adjusting the extreme entries.
      while (sum > 0 && v.front() > 0) {
        --v.front();
        --sum;
        std::sort(v.rbegin(), v.rend());
      }
      while (sum < 0 && v.back() < 0) {
        ++v.back();
        ++sum;
        std::sort(v.rbegin(), v.rend());
      }
      pos = 0;
      bool zero = true;
      for (int x : v) {
        pos += std::max(x, 0);
        zero &= x == 0;
      }
      if (sum == 0 && pos <= t && !zero) return v;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tdb::gen

#endif  // TDBOUND_TESTS_SUPPORT_GENERATORS_HPP_
