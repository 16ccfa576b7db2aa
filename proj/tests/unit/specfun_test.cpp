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


#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tdbound/specfun/bessel.hpp"
#include "tdbound/specfun/log_value.hpp"

namespace tdb::specfun {
namespace {

TEST(LogValue, Arithmetic) {
  const auto a = LogValue::from_double(3.0);
  const auto b = LogValue::from_double(-5.0);
  EXPECT_NEAR((a * b).to_double(), -15.0, 1e-12);
  EXPECT_NEAR((a + b).to_double(), -2.0, 1e-12);
  EXPECT_NEAR((a - b).to_double(), 8.0, 1e-12);
  EXPECT_NEAR((a / b).to_double(), -0.6, 1e-12);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(LogValue::from_double(0.0).is_zero());
  EXPECT_EQ((LogValue::zero() + b).sign(), -1);
}

TEST(LogValue, NoOverflow) {
  const auto big = LogValue::from_log(1e4);
  const auto sum = big + big;
  EXPECT_NEAR(sum.log_abs(), 1e4 + std::log(2.0), 1e-9);
  const std::vector<LogValue> terms = {big, -LogValue::from_log(1e4 - 1.0),
                                       LogValue::from_log(1.0)};
  const auto s = log_sum(terms);
  EXPECT_EQ(s.sign(), 1);
  EXPECT_NEAR(s.log_abs(), 1e4 + std::log1p(-std::exp(-1.0)), 1e-9);
  const std::vector<double> logs = {1000.0, 1000.0, 999.0};
  EXPECT_NEAR(log_sum_exp(logs),
              1000.0 + std::log(2.0 + std::exp(-1.0)), 1e-12);
}

TEST(Bessel, Origin) {
  EXPECT_EQ(log_bessel_i(0, 0.0), 0.0);
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(log_bessel_i(n, 0.0), -std::numeric_limits<double>::infinity());
}

TEST(Bessel, RejectsBadInput) {
  EXPECT_THROW(log_bessel_i(-1, 1.0), std::domain_error);
  EXPECT_THROW(log_bessel_i(1, -1.0), std::domain_error);
  EXPECT_THROW(log_bessel_i(1, std::nan("")), std::domain_error);
}

TEST(Bessel, MatchesSeries) {
  const long double want = oracle::bessel_i_series(1, 2.0L, 40);
  EXPECT_NEAR(log_bessel_i(1, 2.0), std::log(static_cast<double>(want)),
              1e-13);
  for (int n = 0; n <= 20; ++n)
    for (double x : {0.01, 0.5, 1.0, 3.0, 7.5, 15.0}) {
      const double ref =
          std::log(static_cast<double>(oracle::bessel_i_series(n, x)));
      EXPECT_NEAR(log_bessel_i(n, x), ref, 1e-12 * std::max(1.0, std::abs(ref)))
          << n << " " << x;
    }
}

TEST(Bessel, MatchesBoostScaled) {
  // boost overflows I_n(x) past x ~ 700, so compare in the range where the
  // unscaled value fits and trust the normalization test beyond it.
  for (int n = 0; n <= 128; n += 7)
    for (double x : {20.0, 50.0, 120.0, 400.0, 700.0}) {
      const double ref = std::log(boost::math::cyl_bessel_i(n, x));
      EXPECT_NEAR(log_bessel_i(n, x), ref, 1e-12 * std::abs(ref))
          << n << " " << x;
    }
}

TEST(Bessel, SequenceAgreesWithPointwise) {
  for (double x : {0.3, 4.0, 80.0, 5e3, 1e6}) {
    const auto seq = log_bessel_i_sequence(16, x);
    ASSERT_EQ(seq.size(), 17u);
    for (int n = 0; n <= 16; ++n)
      EXPECT_NEAR(seq[n], log_bessel_i(n, x), 1e-12 * std::max(1.0, std::abs(seq[n])));
  }
}

TEST(Bessel, Normalization) {
  for (double x : {1.0, 10.0, 100.0, 1e3, 1e5, 1e6}) {
    const int kmax = static_cast<int>(std::min(1e5, 10.0 * std::sqrt(x) + 60));
    const auto seq = log_bessel_i_sequence(kmax, x);
    long double total = std::exp(static_cast<long double>(seq[0]) - x);
    for (int k = 1; k <= kmax; ++k)
      total += 2.0L * std::exp(static_cast<long double>(seq[k]) - x);
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-10) << x;
  }
}

TEST(Bessel, Monotone) {
  for (int n = 0; n <= 10; ++n) {
    double prev = log_bessel_i(n, 0.05);
    for (double x = 0.1; x < 200.0; x *= 1.7) {
      const double cur = log_bessel_i(n, x);
      EXPECT_GT(cur, prev) << n << " " << x;
      prev = cur;
    }
  }
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    for (int n = 1; n <= 30; ++n)
      EXPECT_LT(log_bessel_i(n, x), log_bessel_i(n - 1, x)) << n << " " << x;
  }
}

TEST(Bessel, SignedArgument) {
  for (int n = 0; n <= 4; ++n) {
    const auto neg = bessel_i_signed(n, -2.5);
    EXPECT_EQ(neg.sign(), n % 2 == 0 ? 1 : -1);
    EXPECT_NEAR(neg.log_abs(), log_bessel_i(n, 2.5), 1e-14);
  }
}

TEST(BesselRatio, Containment) {
  for (int n = 1; n <= 20; ++n)
    for (double x : {0.1, 1.0, 2.0, 10.0, 100.0, 1000.0}) {
      const auto b = bessel_ratio_bounds(n, x);
      const double ratio = std::exp(log_bessel_i(n, x) - log_bessel_i(n - 1, x));
      EXPECT_LT(b.lower, ratio) << n << " " << x;
      EXPECT_LT(ratio, b.upper) << n << " " << x;
    }
}

TEST(BesselRatio, SmallArgument) {
  const auto b = bessel_ratio_bounds(1, 1e-9);
  EXPECT_LT(b.upper, 1e-8);
  EXPECT_GT(b.lower, 0.0);
}

}  // namespace
}  // namespace tdb::specfun
