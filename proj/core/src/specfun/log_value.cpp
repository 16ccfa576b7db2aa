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

#include "tdbound/specfun/log_value.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdb::specfun {

LogValue LogValue::from_double(double x) {
  if (x == 0.0) return LogValue();
  return LogValue(std::log(std::fabs(x)), x > 0 ? 1 : -1);
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.is_zero()) throw std::domain_error("LogValue division by zero");
  return LogValue(a.log_abs_ - b.log_abs_, a.sign_ * b.sign_);
}

LogValue operator+(LogValue a, LogValue b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.log_abs_ < b.log_abs_) std::swap(a, b);
  const double r = std::exp(b.log_abs_ - a.log_abs_);
  const double s = 1.0 + (a.sign_ == b.sign_ ? r : -r);
  if (s == 0.0) return LogValue();
  return LogValue(a.log_abs_ + std::log(s), a.sign_);
}

LogValue log_sum(std::span<const LogValue> terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (!t.is_zero()) peak = std::max(peak, t.log_abs());
  if (!std::isfinite(peak)) {
    if (peak > 0) throw std::overflow_error("log_sum: infinite term");
    return LogValue();
  }

  // Kahan-compensated sum of the rescaled terms.
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const double y = t.sign() * std::exp(t.log_abs() - peak) - carry;
    const double next = sum + y;
    carry = (next - sum) - y;
    sum = next;
  }
  if (sum == 0.0) return LogValue();
  return LogValue(peak + std::log(std::fabs(sum)), sum > 0 ? 1 : -1);
}

double log_sum_exp(std::span<const double> logs) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double x : logs) peak = std::max(peak, x);
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (double x : logs) sum += std::exp(x - peak);
  return peak + std::log(sum);
}

}  // namespace tdb::specfun
