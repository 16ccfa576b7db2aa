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

#include "tdbound/specfun/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tdb::specfun {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_args(int n, double x) {
  if (n < 0)
    throw std::domain_error("Bessel order must be >= 0, got " +
                            std::to_string(n));
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("Bessel argument must be finite and >= 0");
}

// Ascending series sum_k (x/2)^{2k+n} / (k! (n+k)!), in logs. All terms are
// positive; used where the term ratio (x/2)^2/((k+1)(n+k+1)) is small.
double log_series(int n, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= q / ((k + 1.0) * (n + k + 1.0));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return n * std::log(0.5 * x) - std::lgamma(n + 1.0) + std::log(sum);
}

bool use_series(int n, double x) { return x <= 1.0 || x * x <= n + 1.0; }

// Miller's downward recurrence I_{k-1} = I_{k+1} + (2k/x) I_k, normalized by
// e^x = I_0 + 2 sum_{k>=1} I_k. Values are rescaled whenever they grow large
// and the accumulated scale is tracked in logs.
std::vector<double> log_miller(int n_max, double x) {
  const int start =
      n_max + 40 + static_cast<int>(std::ceil(12.0 * std::sqrt(x)));
  constexpr double kBig = 1e250;
  const double log_big = std::log(kBig);

  std::vector<double> out(static_cast<std::size_t>(n_max + 1));
  double above = 0.0;  // f_{k+1}
  double here = 1e-300;  // f_k
  double scale = 0.0;
  double norm = 0.0;  // 2 sum_{j>k} f_j in the current scale
  for (int k = start; k >= 1; --k) {
    if (k <= n_max) out[static_cast<std::size_t>(k)] = std::log(here) + scale;
    norm += 2.0 * here;
    const double below = above + (2.0 * k / x) * here;
    above = here;
    here = below;
    if (here > kBig) {
      here /= kBig;
      above /= kBig;
      norm /= kBig;
      scale += log_big;
    }
  }
  out[0] = std::log(here) + scale;
  norm += here;
  const double log_norm = std::log(norm) + scale;
  for (auto& v : out) v += x - log_norm;
  return out;
}

}  // namespace

double log_bessel_i(int n, double x) {
  check_args(n, x);
  if (x == 0.0) return n == 0 ? 0.0 : kNegInf;
  if (use_series(n, x)) return log_series(n, x);
  return log_miller(n, x)[static_cast<std::size_t>(n)];
}

std::vector<double> log_bessel_i_sequence(int n_max, double x) {
  check_args(n_max, x);
  std::vector<double> out(static_cast<std::size_t>(n_max + 1), kNegInf);
  if (x == 0.0) {
    out[0] = 0.0;
    return out;
  }
  if (use_series(0, x)) {
    for (int n = 0; n <= n_max; ++n)
      out[static_cast<std::size_t>(n)] = log_series(n, x);
    return out;
  }
  out = log_miller(n_max, x);
  // Orders deep in the small-argument regime are better served by the series.
  for (int n = 0; n <= n_max; ++n)
    if (use_series(n, x)) out[static_cast<std::size_t>(n)] = log_series(n, x);
  return out;
}

LogValue bessel_i_signed(int n, double x) {
  const double lg = log_bessel_i(n, std::fabs(x));
  if (lg == kNegInf) return LogValue::zero();
  const int sign = (x < 0 && n % 2 == 1) ? -1 : 1;
  return LogValue(lg, sign);
}

RatioBounds bessel_ratio_bounds(int n, double x) {
  if (n < 1) throw std::domain_error("ratio bounds need n >= 1");
  if (!(x > 0.0)) throw std::domain_error("ratio bounds need x > 0");
  const double lower =
      x / (n - 0.5 + std::sqrt((n + 0.5) * (n + 0.5) + x * x));
  const double upper = x / (n - 1.0 + std::sqrt((n + 1.0) * (n + 1.0) + x * x));
  return {lower, upper};
}

}  // namespace tdb::specfun
