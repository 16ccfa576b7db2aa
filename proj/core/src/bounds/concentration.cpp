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


#include "tdbound/bounds/concentration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdb {
namespace {

void check_common(long size, double alpha) {
  if (size < 1) throw std::invalid_argument("gate-set size must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be positive and finite");
}

}  // namespace

double concentration_bound_t(int d, int t, long size, double alpha) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  check_common(size, alpha);
  const double tt = static_cast<double>(t);
  return std::exp(-d * static_cast<double>(size) * alpha * alpha /
                  (32.0 * tt * tt));
}

double concentration_bound_lambda(int d, const rep::HighestWeight& lambda,
                                  long size, double alpha) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (lambda.rank() != d)
    throw std::invalid_argument("highest weight length differs from d");
  if (lambda.is_zero())
    throw std::invalid_argument("trivial block has no concentration bound");
  check_common(size, alpha);
  const double norm = static_cast<double>(lambda.norm1());
  return std::exp(-d * static_cast<double>(size) * alpha * alpha /
                  (2.0 * std::numbers::pi * std::numbers::pi * norm * norm));
}

double concentration_bound_beamsplitter(int t, long size, double alpha) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  check_common(size, alpha);
  const double tt = static_cast<double>(t);
  return std::exp(-static_cast<double>(size) * alpha * alpha /
                  (16.0 * tt * tt));
}

double equivalent_plain_size(int d, long size) {
  if (d <= 2)
    throw std::invalid_argument("beamsplitter lifting needs d > 2");
  if (size < 1) throw std::invalid_argument("gate-set size must be >= 1");
  return 2.0 * static_cast<double>(size) / d;
}

}  // namespace tdb
