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

#ifndef TDBOUND_SPECFUN_LOG_VALUE_HPP_
#define TDBOUND_SPECFUN_LOG_VALUE_HPP_

#include <cmath>
#include <limits>
#include <span>

namespace tdb::specfun {

// sign * exp(log_abs). Zero is sign 0 with log_abs = -inf.
class LogValue {
 public:
  constexpr LogValue() = default;
  constexpr LogValue(double log_abs, int sign)
      : log_abs_(sign == 0 ? -std::numeric_limits<double>::infinity()
                           : log_abs),
        sign_(sign == 0 ? 0 : (sign > 0 ? 1 : -1)) {}

  static LogValue from_double(double x);
  static LogValue from_log(double log_abs) { return LogValue(log_abs, 1); }
  static constexpr LogValue zero() { return LogValue(); }

  double log_abs() const { return log_abs_; }
  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  double to_double() const {
    return sign_ == 0 ? 0.0 : sign_ * std::exp(log_abs_);
  }

  LogValue operator-() const { return LogValue(log_abs_, -sign_); }
  friend LogValue operator*(LogValue a, LogValue b) {
    return LogValue(a.log_abs_ + b.log_abs_, a.sign_ * b.sign_);
  }
  friend LogValue operator/(LogValue a, LogValue b);
  friend LogValue operator+(LogValue a, LogValue b);
  friend LogValue operator-(LogValue a, LogValue b) { return a + (-b); }
  LogValue& operator+=(LogValue b) { return *this = *this + b; }
  LogValue& operator*=(LogValue b) { return *this = *this * b; }

 private:
  double log_abs_ = -std::numeric_limits<double>::infinity();
  int sign_ = 0;
};

// Signed sum of LogValues, accumulated relative to the largest magnitude so
// that nothing overflows and cancellation is confined to one pass.
LogValue log_sum(std::span<const LogValue> terms);

// log(sum exp(x_i)) for plain log-magnitudes.
double log_sum_exp(std::span<const double> logs);

}  // namespace tdb::specfun

#endif  // TDBOUND_SPECFUN_LOG_VALUE_HPP_
