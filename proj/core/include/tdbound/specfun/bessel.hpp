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

// Modified Bessel functions of the first kind, integer order, carried as
// logarithms so that I_n(x) for x up to 1e6 never overflows.

#ifndef TDBOUND_SPECFUN_BESSEL_HPP_
#define TDBOUND_SPECFUN_BESSEL_HPP_

#include <vector>

#include "tdbound/specfun/log_value.hpp"

namespace tdb::specfun {

// log I_n(x); -inf for n >= 1 at x = 0. Throws std::domain_error for n < 0,
// x < 0 or non-finite x.
double log_bessel_i(int n, double x);

// log I_0(x), ..., log I_{n_max}(x) from a single recurrence.
std::vector<double> log_bessel_i_sequence(int n_max, double x);

// I_n at a signed argument: I_n(-x) = (-1)^n I_n(x).
LogValue bessel_i_signed(int n, double x);

struct RatioBounds {
  double lower;
  double upper;
};

// Bounds on I_n(x) / I_{n-1}(x) for n >= 1, x > 0:
//   x / (n - 1/2 + sqrt((n + 1/2)^2 + x^2))  <  ratio  <
//   x / (n - 1 + sqrt((n + 1)^2 + x^2)).
RatioBounds bessel_ratio_bounds(int n, double x);

}  // namespace tdb::specfun

#endif  // TDBOUND_SPECFUN_BESSEL_HPP_
