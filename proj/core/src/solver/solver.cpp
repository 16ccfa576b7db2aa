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


#include "tdbound/solver/solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tdbound/repcore/lambda_set.hpp"
#include "tdbound/repcore/multiplicity.hpp"

namespace tdb {
namespace {

void check_inputs(double delta, double prob) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(prob > 0.0 && prob < 1.0))
    throw std::invalid_argument("probability must lie in (0, 1)");
}

rep::BigInt dimension_sum(int d, int t) {
  rep::BigInt sum = 0;
  for (const auto& lambda : rep::enumerate_lambda_set(d, t))
    sum += rep::weyl_dimension(lambda);
  return sum;
}

// Relative slack for the monotonicity check; the symmetric master bound is an
// optimizer output and carries that much noise.
bool increased(double later, double earlier) {
  return later > earlier + 1e-9 * std::max(1.0, std::fabs(earlier));
}

}  // namespace

double MinSizeResult::raw_bound() const { return std::exp(log_bound); }

long MinSizeResult::reported_size() const {
  return kind_of(method) == GateSetKind::Symmetric ? size / 2 : size;
}

double rate_denominator(double delta) {
  return (1.0 + delta) * std::log1p(delta) + (1.0 - delta) * std::log1p(-delta);
}

long min_size_closed_form(const rep::BigInt& dimension_sum, double delta,
                          double prob) {
  check_inputs(delta, prob);
  const double rhs = 2.0 *
                     (std::log(2.0) + log_of(dimension_sum) -
                      std::log1p(-prob)) /
                     rate_denominator(delta);
  return static_cast<long>(std::ceil(rhs));
}

MinSizeResult min_size_closed_form(int d, int t, double delta, double prob,
                                   const rep::RepConfig&) {
  const auto sum = dimension_sum(d, t);
  MinSizeResult r;
  r.size = min_size_closed_form(sum, delta, prob);
  r.method = BoundMethod::MasterPlain;
  r.log_bound = master_plain_closed_form(sum, r.size, delta);
  if (r.size > 1)
    r.log_bound_before = master_plain_closed_form(sum, r.size - 1, delta);
  r.d = d;
  r.t = t;
  r.delta = delta;
  r.prob = prob;
  return r;
}

MinSizeResult min_size_search(const TotalBound& total, double delta,
                              double prob) {
  check_inputs(delta, prob);
  const long step =
      kind_of(total.method()) == GateSetKind::Symmetric ? 2 : 1;
  const double target = std::log1p(-prob);
  auto f = [&](long s) { return total.at(s, delta).log_bound; };

  MinSizeResult r;
  r.method = total.method();
  r.d = total.d();
  r.t = total.t();
  r.delta = delta;
  r.prob = prob;

  long lo = 0;
  double f_lo = std::numeric_limits<double>::infinity();
  long hi = step;
  double f_hi = f(hi);
  constexpr long kMaxSize = 1L << 50;
  while (f_hi > target) {
    if (increased(f_hi, f_lo))
      throw std::logic_error("bound increased between S=" +
                             std::to_string(lo) + " and S=" +
                             std::to_string(hi));
    if (hi >= kMaxSize)
      throw std::runtime_error("no admissible size below 2^50");
    lo = hi;
    f_lo = f_hi;
    hi *= 2;
    f_hi = f(hi);
  }
  // Invariant: f(lo) > target >= f(hi), lo and hi multiples of step.
  while (hi - lo > step) {
    const long mid = lo + ((hi - lo) / (2 * step)) * step;
    const double f_mid = f(mid);
    if (increased(f_mid, f_lo) || increased(f_hi, f_mid))
      throw std::logic_error("bound is not monotone in S near S=" +
                             std::to_string(mid));
    if (f_mid > target) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  r.size = hi;
  r.log_bound = f_hi;
  if (lo > 0) r.log_bound_before = f_lo;
  return r;
}

MinSizeResult min_size_search(int d, int t, double delta, double prob,
                              BoundMethod method,
                              const rep::RepConfig& config) {
  return min_size_search(TotalBound(d, t, method, config), delta, prob);
}

double min_size_scaling(int d, int t, double delta, double prob) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  check_inputs(delta, prob);
  return 2.0 *
         (2.0 * t * std::log(static_cast<double>(d)) + std::log(2.0) -
          std::log1p(-prob)) /
         rate_denominator(delta);
}

rep::BigInt clifford_cardinality(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  rep::BigInt out = rep::BigInt(1) << (n * n + 2 * n);
  rep::BigInt four = 1;
  for (int j = 1; j <= n; ++j) {
    four <<= 2;
    out *= four - 1;
  }
  return out;
}

CliffordRatio clifford_ratio(int n) {
  if (n < 1 || n > 50)
    throw std::invalid_argument("qubit count must lie in [1, 50]");
  CliffordRatio r;
  r.qubits = n;
  r.cardinality = clifford_cardinality(n);

  const rep::BigInt one = 1;
  const rep::BigInt inner =
      (one << (4 * n + 1)) - 3 * (one << (2 * n + 1)) + 2;
  r.rounded_size =
      static_cast<long>(std::ceil(2e4 * (log_of(inner) + 4.61)));

  const rep::BigInt d = one << n;
  const rep::BigInt sum = d * d * d * d - 3 * d * d + 1;
  r.exact_size = min_size_closed_form(sum, 0.01, 0.99);

  r.ratio = rep::Rational(r.cardinality, rep::BigInt(r.rounded_size));
  const double ln10 = std::log(10.0);
  r.log10_ratio =
      (log_of(r.cardinality) - std::log(static_cast<double>(r.rounded_size))) /
      ln10;
  r.log10_ratio_exact =
      (log_of(r.cardinality) - std::log(static_cast<double>(r.exact_size))) /
      ln10;
  return r;
}

int depth_for_target(double delta0, double target) {
  if (!(delta0 > 0.0 && delta0 < 1.0))
    throw std::invalid_argument("delta0 must lie in (0, 1)");
  if (!(target > 0.0 && target <= delta0))
    throw std::invalid_argument("target must lie in (0, delta0]");
  int l = std::max(
      1, static_cast<int>(std::ceil(std::log(target) / std::log(delta0))));
  // Guard the rounding of the log ratio against exact powers.
  while (l > 1 && std::pow(delta0, l - 1) <= target) --l;
  while (std::pow(delta0, l) > target) ++l;
  return l;
}

}  // namespace tdb
