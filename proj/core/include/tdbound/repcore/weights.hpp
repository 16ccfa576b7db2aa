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

#ifndef TDBOUND_REPCORE_WEIGHTS_HPP_
#define TDBOUND_REPCORE_WEIGHTS_HPP_

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdb::rep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation would iterate the Weyl group S_d beyond the
// configured rank cap.
class WeylGroupTooLarge : public std::domain_error {
 public:
  WeylGroupTooLarge(int d, int cap);
  int rank() const { return rank_; }
  int cap() const { return cap_; }

 private:
  int rank_;
  int cap_;
};

struct RepConfig {
  // Largest d for which sums over S_d are attempted (8! = 40320 terms).
  int max_weyl_rank = 8;

  void require_rank(int d) const;
};

// Highest weight of a U(d) irrep: a nonincreasing integer d-tuple.
class HighestWeight {
 public:
  HighestWeight() = default;
  // Throws std::invalid_argument unless d >= 2 and entries are nonincreasing.
  explicit HighestWeight(std::vector<int> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  long sum() const;
  long norm1() const;
  // Sum of the strictly positive entries.
  long positive_sum() const;
  bool is_zero() const;
  // Zero-sum with positive part at most t.
  bool in_lambda_set(int t) const;

  // "(1,0,-1)"
  std::string to_string() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<int> entries_;
};

// SU(d) highest weight in the fundamental-weight basis (d-1 nonnegative
// integers).
class DynkinLabel {
 public:
  DynkinLabel() = default;
  explicit DynkinLabel(std::vector<int> entries);

  int rank() const { return static_cast<int>(entries_.size()) + 1; }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const DynkinLabel&, const DynkinLabel&) = default;

 private:
  std::vector<int> entries_;
};

// A weight mu in the L_i coordinates. Entries are rational so that
// (rho - sigma.rho)/n can be formed before the integrality test.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> entries);
  static WeightVector from_integers(std::span<const int> entries);
  static WeightVector zero(int d);

  int rank() const { return static_cast<int>(entries_.size()); }
  std::span<const Rational> entries() const { return entries_; }

  // Integer coordinates, or nullopt if any entry is fractional.
  std::optional<std::vector<int>> integral() const;

 private:
  std::vector<Rational> entries_;
};

DynkinLabel to_dynkin(const HighestWeight& lambda);

// lambda_i = m + sum_{j >= i} lambda^s_j.
HighestWeight to_u_weight(const DynkinLabel& label, int m);

// The zero-sum U(d) lift with m = -(1/d) sum_j j lambda^s_j, or nullopt when
// that m is not an integer (then the SU(d) irrep has no zero weight).
std::optional<HighestWeight> zero_sum_lift(const DynkinLabel& label);

}  // namespace tdb::rep

#endif  // TDBOUND_REPCORE_WEIGHTS_HPP_
