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

#include "tdbound/bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tdbound/repcore/lambda_set.hpp"
#include "tdbound/repcore/multiplicity.hpp"
#include "tdbound/specfun/bessel.hpp"
#include "tdbound/specfun/log_value.hpp"
#include "tdbound/util/parallel.hpp"

namespace tdb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
}

void check_size(long size) {
  if (size < 1) throw std::invalid_argument("gate-set size must be >= 1");
}

void require_level(const IrrepProfile& profile, IrrepProfile::Level level) {
  if (static_cast<int>(profile.level) < static_cast<int>(level))
    throw std::logic_error("irrep profile for " + profile.lambda.to_string() +
                           " lacks the data this bound needs");
}

BoundResult make_result(BoundMethod method, double log_bound) {
  BoundResult r;
  r.method = method;
  r.log_bound = log_bound;
  r.clipped = log_bound > 0.0;
  return r;
}

struct BranchMinimum {
  double theta = 0.0;
  double value = kInf;
  bool at_cap = false;
};

// Minimizes g over (0, cap]. The bracket grows by doubling from start; if g
// already rises at the first step the search walks downward instead.
template <typename G>
BranchMinimum minimize_branch(G&& g, double start, double cap,
                              double rel_tol) {
  double a = std::min(start, cap);
  double ga = g(a);
  double b = std::min(2.0 * a, cap);
  double gb = g(b);
  double lo;
  double hi;

  if (gb <= ga && b < cap) {
    // Walk up: keep (prev, cur, next) until g(next) > g(cur).
    double prev = a;
    double cur = b;
    double gcur = gb;
    for (;;) {
      const double next = std::min(2.0 * cur, cap);
      const double gnext = g(next);
      if (gnext > gcur) {
        lo = prev;
        hi = next;
        break;
      }
      if (next >= cap) {
        return {next, gnext, true};
      }
      prev = cur;
      cur = next;
      gcur = gnext;
    }
  } else if (gb <= ga) {
    return {b, gb, true};
  } else {
    // Walk down: g(a) < g(2a); halve until g(a/2) > g(a).
    double cur = a;
    double gcur = ga;
    double upper = b;
    for (int i = 0; i < 200; ++i) {
      const double next = 0.5 * cur;
      const double gnext = g(next);
      if (gnext > gcur) break;
      upper = cur;
      cur = next;
      gcur = gnext;
    }
    lo = 0.5 * cur;
    hi = upper;
  }

  // Golden-section refinement on [lo, hi].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int i = 0; i < 400 && (hi - lo) > rel_tol * std::max(x1, x2); ++i) {
    if (g1 <= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    }
  }
  return g1 <= g2 ? BranchMinimum{x1, g1, false} : BranchMinimum{x2, g2, false};
}

}  // namespace

std::string_view to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::BernsteinPlain:
      return "bernstein-plain";
    case BoundMethod::BernsteinSymmetric:
      return "bernstein-symmetric";
    case BoundMethod::MasterPlain:
      return "master-plain";
    case BoundMethod::MasterSymmetric:
      return "master-symmetric";
    case BoundMethod::MasterSymmetricSimplified:
      return "master-symmetric-simplified";
  }
  return "unknown";
}

BoundMethod parse_bound_method(std::string_view text) {
  for (BoundMethod m : kAllMethods)
    if (to_string(m) == text) return m;
  throw std::invalid_argument("unknown bound method '" + std::string(text) +
                              "'");
}

GateSetKind kind_of(BoundMethod method) {
  switch (method) {
    case BoundMethod::BernsteinPlain:
    case BoundMethod::MasterPlain:
      return GateSetKind::Plain;
    default:
      return GateSetKind::Symmetric;
  }
}

void BoundQuery::validate() const {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  check_delta(delta);
  validate_size(kind, size);
  if (const int* t = std::get_if<int>(&target)) {
    if (*t < 1) throw std::invalid_argument("t must be >= 1");
  } else if (std::get<rep::HighestWeight>(target).rank() != d) {
    throw std::invalid_argument("highest weight length differs from d");
  }
}

double BoundResult::raw() const { return std::exp(log_bound); }

double BoundResult::probability() const {
  return log_bound >= 0.0 ? 1.0 : std::exp(log_bound);
}

double log_of(const rep::BigInt& value) {
  if (value <= 0) throw std::domain_error("log of a nonpositive integer");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 1000) return std::log(value.convert_to<double>());
  const auto shift = bits - 60;
  const rep::BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

IrrepProfile IrrepProfile::build(const rep::HighestWeight& lambda, Level level,
                                 const rep::RepConfig& config) {
  IrrepProfile p;
  p.lambda = lambda;
  p.level = level;
  p.dim = rep::weyl_dimension(lambda);
  p.log_dim = log_of(p.dim);
  const int d = lambda.rank();
  if (level == Level::Full) {
    config.require_rank(d);
    p.zero_weight_fraction =
        rep::Rational(rep::zero_weight_multiplicity(lambda, config), p.dim);
    p.gamma = rep::gamma_coefficients(lambda, config);
    // delta(2) = m(0)/d_lambda + gamma(2), since 2 <= d.
    p.fs_two = p.zero_weight_fraction + p.gamma.at(2);
  } else if (level == Level::Indicator) {
    p.fs_two = d <= config.max_weyl_rank
                   ? rep::fs_indicator(lambda, 2, config)
                   : rep::fs_indicator_two_by_duality(lambda);
  }
  return p;
}

IrrepProfile::Level required_level(BoundMethod method) {
  switch (method) {
    case BoundMethod::BernsteinPlain:
    case BoundMethod::MasterPlain:
      return IrrepProfile::Level::Dimension;
    case BoundMethod::BernsteinSymmetric:
      return IrrepProfile::Level::Indicator;
    default:
      return IrrepProfile::Level::Full;
  }
}

BoundResult bernstein_bound(const IrrepProfile& profile, GateSetKind kind,
                            long size, double delta) {
  check_delta(delta);
  check_size(size);
  const double s = static_cast<double>(size);
  if (kind == GateSetKind::Plain) {
    return make_result(BoundMethod::BernsteinPlain,
                       std::log(2.0) + profile.log_dim -
                           3.0 * s * delta * delta / (6.0 + 2.0 * delta));
  }
  if (kind == GateSetKind::Symmetric) {
    require_level(profile, IrrepProfile::Level::Indicator);
    const double fs = profile.fs_two.convert_to<double>();
    return make_result(
        BoundMethod::BernsteinSymmetric,
        std::log(2.0) + profile.log_dim -
            3.0 * s * delta * delta / (6.0 * (1.0 + fs) + 4.0 * delta));
  }
  throw std::invalid_argument("no Bernstein bound for beamsplitter sets");
}

BoundResult master_bound_plain(const IrrepProfile& profile, long size,
                               double delta) {
  check_delta(delta);
  check_size(size);
  const double s = static_cast<double>(size);
  return make_result(BoundMethod::MasterPlain,
                     std::log(2.0) + profile.log_dim -
                         0.5 * s * std::log1p(-delta * delta) -
                         delta * s * std::atanh(delta));
}

std::optional<double> log_symmetric_bracket(const IrrepProfile& profile,
                                            double x) {
  require_level(profile, IrrepProfile::Level::Full);
  const int d = profile.lambda.rank();
  const double m0 = profile.zero_weight_fraction.convert_to<double>();
  const auto bessel = specfun::log_bessel_i_sequence(d, std::fabs(x));

  std::vector<specfun::LogValue> terms;
  terms.reserve(static_cast<std::size_t>(2 * d + 2));
  terms.emplace_back(std::log(m0) + x, 1);
  for (int k = -d; k <= d; ++k) {
    const double g = profile.gamma.value(k);
    if (g == 0.0) continue;
    const int n = std::abs(k);
    const double lb = bessel[static_cast<std::size_t>(n)];
    if (lb == -kInf) continue;
    const int sign = (g > 0 ? 1 : -1) * ((x < 0 && n % 2 == 1) ? -1 : 1);
    terms.emplace_back(std::log(std::fabs(g)) + lb, sign);
  }
  const auto total = specfun::log_sum(terms);
  if (total.sign() <= 0) return std::nullopt;
  return total.log_abs();
}

double symmetric_objective(const IrrepProfile& profile, long size, double delta,
                           double theta, int sign) {
  const double s = static_cast<double>(size);
  const double x = (sign < 0 ? -2.0 : 2.0) * theta / s;
  const auto lb = log_symmetric_bracket(profile, x);
  if (!lb) return kInf;
  return -theta * delta + 0.5 * s * *lb;
}

double simplified_theta(long size, double delta) {
  return static_cast<double>(size) * delta / std::sqrt(1.0 - delta * delta);
}

BoundResult master_bound_symmetric(const IrrepProfile& profile, long size,
                                   double delta, const ThetaSearch& search) {
  check_delta(delta);
  check_size(size);
  require_level(profile, IrrepProfile::Level::Full);
  const double theta0 = simplified_theta(size, delta);
  const double cap = search.max_theta_per_size * static_cast<double>(size);

  BranchMinimum branch[2];
  for (int b = 0; b < 2; ++b) {
    const int sign = b == 0 ? 1 : -1;
    branch[b] = minimize_branch(
        [&](double theta) {
          return symmetric_objective(profile, size, delta, theta, sign);
        },
        theta0 / 16.0, cap, search.relative_tolerance);
    if (!std::isfinite(branch[b].value))
      throw BoundUnavailable("symmetric master bound unavailable for " +
                             profile.lambda.to_string() +
                             ": bracket nonpositive on the search path");
  }
  const double both[2] = {branch[0].value, branch[1].value};
  auto r = make_result(BoundMethod::MasterSymmetric,
                       profile.log_dim + specfun::log_sum_exp(both));
  r.theta_star = branch[0].theta;
  r.theta_star_negative = branch[1].theta;
  return r;
}

BoundResult master_bound_symmetric_simplified(const IrrepProfile& profile,
                                              long size, double delta) {
  check_delta(delta);
  check_size(size);
  const double theta0 = simplified_theta(size, delta);
  const double plus = symmetric_objective(profile, size, delta, theta0, 1);
  const double minus = symmetric_objective(profile, size, delta, theta0, -1);
  if (!std::isfinite(plus) || !std::isfinite(minus))
    throw BoundUnavailable("simplified symmetric master bound unavailable for " +
                           profile.lambda.to_string() +
                           ": bracket nonpositive at theta0");
  const double both[2] = {plus, minus};
  auto r = make_result(BoundMethod::MasterSymmetricSimplified,
                       profile.log_dim + specfun::log_sum_exp(both));
  r.theta_star = theta0;
  r.theta_star_negative = theta0;
  return r;
}

BoundResult evaluate_block(const IrrepProfile& profile, BoundMethod method,
                           long size, double delta) {
  switch (method) {
    case BoundMethod::BernsteinPlain:
      return bernstein_bound(profile, GateSetKind::Plain, size, delta);
    case BoundMethod::BernsteinSymmetric:
      return bernstein_bound(profile, GateSetKind::Symmetric, size, delta);
    case BoundMethod::MasterPlain:
      return master_bound_plain(profile, size, delta);
    case BoundMethod::MasterSymmetric:
      return master_bound_symmetric(profile, size, delta);
    case BoundMethod::MasterSymmetricSimplified:
      return master_bound_symmetric_simplified(profile, size, delta);
  }
  throw std::invalid_argument("unknown bound method");
}

BoundResult evaluate(const BoundQuery& query, BoundMethod method,
                     const rep::RepConfig& config) {
  query.validate();
  if (kind_of(method) != query.kind)
    throw std::invalid_argument(std::string(to_string(method)) +
                                " does not apply to " +
                                std::string(to_string(query.kind)) +
                                " gate-sets");
  if (const int* t = std::get_if<int>(&query.target))
    return TotalBound(query.d, *t, method, config).at(query.size, query.delta);
  const auto& lambda = std::get<rep::HighestWeight>(query.target);
  const auto profile =
      IrrepProfile::build(lambda, required_level(method), config);
  return evaluate_block(profile, method, query.size, query.delta);
}

TotalBound::TotalBound(int d, int t, BoundMethod method,
                       const rep::RepConfig& config)
    : d_(d), t_(t), method_(method) {
  const auto labels = rep::enumerate_lambda_set(d, t);
  const auto level = required_level(method);
  if (level == IrrepProfile::Level::Full) config.require_rank(d);
  profiles_.resize(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) {
    profiles_[i] = IrrepProfile::build(labels[i], level, config);
  });
  for (const auto& p : profiles_) dimension_sum_ += p.dim;
}

BoundResult TotalBound::at(long size, double delta) const {
  if (delta == 0.0) {
    validate_size(kind_of(method_), size);
    return make_result(method_, std::log(2.0) + log_of(dimension_sum_));
  }
  check_delta(delta);
  validate_size(kind_of(method_), size);
  std::vector<double> logs(profiles_.size());
  parallel_for(profiles_.size(), [&](std::size_t i) {
    logs[i] = evaluate_block(profiles_[i], method_, size, delta).log_bound;
  });
  return make_result(method_, specfun::log_sum_exp(logs));
}

BoundResult total_bound(int d, int t, GateSetKind kind, long size,
                        double delta, BoundMethod method,
                        const rep::RepConfig& config) {
  if (kind_of(method) != kind)
    throw std::invalid_argument(std::string(to_string(method)) +
                                " does not apply to " +
                                std::string(to_string(kind)) + " gate-sets");
  return TotalBound(d, t, method, config).at(size, delta);
}

double master_plain_closed_form(const rep::BigInt& dimension_sum, long size,
                                double delta) {
  check_delta(delta);
  check_size(size);
  const double s = static_cast<double>(size);
  return std::log(2.0) + log_of(dimension_sum) -
         0.5 * s * std::log1p(-delta * delta) - delta * s * std::atanh(delta);
}

}  // namespace tdb
