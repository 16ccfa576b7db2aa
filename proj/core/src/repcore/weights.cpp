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

#include "tdbound/repcore/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace tdb::rep {

WeylGroupTooLarge::WeylGroupTooLarge(int d, int cap)
    : std::domain_error("Weyl group S_" + std::to_string(d) +
                        " exceeds the configured rank cap " +
                        std::to_string(cap)),
      rank_(d),
      cap_(cap) {}

void RepConfig::require_rank(int d) const {
  if (d > max_weyl_rank) throw WeylGroupTooLarge(d, max_weyl_rank);
}

HighestWeight::HighestWeight(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2)
    throw std::invalid_argument("highest weight needs d >= 2 entries");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1] < entries_[i])
      throw std::invalid_argument("highest weight " + to_string() +
                                  " is not nonincreasing");
  }
}

long HighestWeight::sum() const {
  long s = 0;
  for (int x : entries_) s += x;
  return s;
}

long HighestWeight::norm1() const {
  long s = 0;
  for (int x : entries_) s += std::labs(x);
  return s;
}

long HighestWeight::positive_sum() const {
  long s = 0;
  for (int x : entries_)
    if (x > 0) s += x;
  return s;
}

bool HighestWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int x) { return x == 0; });
}

bool HighestWeight::in_lambda_set(int t) const {
  return sum() == 0 && positive_sum() <= t;
}

std::string HighestWeight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

DynkinLabel::DynkinLabel(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("Dynkin label needs at least one entry");
  for (int x : entries_)
    if (x < 0) throw std::invalid_argument("Dynkin label entries must be >= 0");
}

WeightVector::WeightVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {}

WeightVector WeightVector::from_integers(std::span<const int> entries) {
  std::vector<Rational> v;
  v.reserve(entries.size());
  for (int x : entries) v.emplace_back(x);
  return WeightVector(std::move(v));
}

WeightVector WeightVector::zero(int d) {
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(d)));
}

std::optional<std::vector<int>> WeightVector::integral() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) {
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    out.push_back(
        static_cast<int>(boost::multiprecision::numerator(q)));
  }
  return out;
}

DynkinLabel to_dynkin(const HighestWeight& lambda) {
  std::vector<int> s;
  for (int i = 0; i + 1 < lambda.rank(); ++i)
    s.push_back(lambda[i] - lambda[i + 1]);
  return DynkinLabel(std::move(s));
}

HighestWeight to_u_weight(const DynkinLabel& label, int m) {
  const int d = label.rank();
  std::vector<int> lambda(static_cast<std::size_t>(d), m);
  int tail = 0;
  for (int i = d - 2; i >= 0; --i) {
    tail += label[i];
    lambda[i] = m + tail;
  }
  return HighestWeight(std::move(lambda));
}

std::optional<HighestWeight> zero_sum_lift(const DynkinLabel& label) {
  const int d = label.rank();
  long weighted = 0;
  for (int j = 1; j < d; ++j) weighted += static_cast<long>(j) * label[j - 1];
  if (weighted % d != 0) return std::nullopt;
  return to_u_weight(label, static_cast<int>(-weighted / d));
}

}  // namespace tdb::rep
