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

// Upper bounds on P(||T_{nu_S,lambda}|| >= delta) for Haar random gate-sets,
// per irrep block and summed over the nonzero labels of the t-th moment
// operator (union bound). All values are carried as natural logarithms; the
// raw bound may exceed 1.

#ifndef TDBOUND_BOUNDS_BOUNDS_HPP_
#define TDBOUND_BOUNDS_BOUNDS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tdbound/bounds/gate_set.hpp"
#include "tdbound/repcore/indicator.hpp"
#include "tdbound/repcore/weights.hpp"

namespace tdb {

enum class BoundMethod {
  BernsteinPlain,
  BernsteinSymmetric,
  MasterPlain,
  MasterSymmetric,
  MasterSymmetricSimplified,
};

inline constexpr BoundMethod kAllMethods[] = {
    BoundMethod::BernsteinPlain, BoundMethod::BernsteinSymmetric,
    BoundMethod::MasterPlain, BoundMethod::MasterSymmetric,
    BoundMethod::MasterSymmetricSimplified};

std::string_view to_string(BoundMethod method);
BoundMethod parse_bound_method(std::string_view text);
GateSetKind kind_of(BoundMethod method);

// The symmetric master bound cannot be formed at any admissible theta.
class BoundUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundQuery {
  int d = 2;
  std::variant<int, rep::HighestWeight> target = 1;
  GateSetKind kind = GateSetKind::Plain;
  long size = 1;
  double delta = 0.5;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

struct BoundResult {
  BoundMethod method = BoundMethod::MasterPlain;
  double log_bound = 0.0;
  // Minimizers of the +theta and -theta branches (symmetric master only).
  std::optional<double> theta_star;
  std::optional<double> theta_star_negative;
  bool clipped = false;

  double raw() const;
  double probability() const;
};

// Everything the bounds need to know about one irrep block.
struct IrrepProfile {
  enum class Level {
    Dimension,  // d_lambda only
    Indicator,  // plus delta_lambda(2)
    Full,       // plus m_lambda(0) and gamma_lambda(k)
  };

  rep::HighestWeight lambda;
  rep::BigInt dim;
  double log_dim = 0.0;
  rep::Rational fs_two;
  rep::Rational zero_weight_fraction;  // m_lambda(0) / d_lambda
  rep::GammaTable gamma;
  Level level = Level::Dimension;

  // delta_lambda(2) comes from the S_d sum within config's rank cap and from
  // the self-duality rule beyond it. Level::Full requires d within the cap.
  static IrrepProfile build(const rep::HighestWeight& lambda, Level level,
                            const rep::RepConfig& config = {});
};

IrrepProfile::Level required_level(BoundMethod method);

double log_of(const rep::BigInt& value);

// Per-block bounds. `size` is |S| (symmetric sets count inverses).
BoundResult bernstein_bound(const IrrepProfile& profile, GateSetKind kind,
                            long size, double delta);
BoundResult master_bound_plain(const IrrepProfile& profile, long size,
                               double delta);

struct ThetaSearch {
  double relative_tolerance = 1e-10;
  // Search domain (0, max_theta_per_size * size].
  double max_theta_per_size = 1e4;
};

BoundResult master_bound_symmetric(const IrrepProfile& profile, long size,
                                   double delta, const ThetaSearch& search = {});
BoundResult master_bound_symmetric_simplified(const IrrepProfile& profile,
                                              long size, double delta);

// log of the bracket in F(theta, lambda, S):
//   (m_lambda(0)/d_lambda) e^x + sum_{k=-d}^{d} gamma_lambda(k) I_|k|(x),
// with x = 2 theta / S (theta may be negative). nullopt when the bracket is
// not positive.
std::optional<double> log_symmetric_bracket(const IrrepProfile& profile,
                                            double x);

// -theta delta + (S/2) log bracket(sign * 2 theta / S); +inf where the
// bracket is not positive.
double symmetric_objective(const IrrepProfile& profile, long size, double delta,
                           double theta, int sign);

// The theta used by the simplified bound: S delta / sqrt(1 - delta^2).
double simplified_theta(long size, double delta);

BoundResult evaluate_block(const IrrepProfile& profile, BoundMethod method,
                           long size, double delta);

// Single-query entry point; a t target sums over the label set.
BoundResult evaluate(const BoundQuery& query, BoundMethod method,
                     const rep::RepConfig& config = {});

// Union bound over the nonzero labels of the t-th moment operator. Profiles
// are built once and reused for every (size, delta).
class TotalBound {
 public:
  TotalBound(int d, int t, BoundMethod method,
             const rep::RepConfig& config = {});

  int d() const { return d_; }
  int t() const { return t_; }
  BoundMethod method() const { return method_; }
  const std::vector<IrrepProfile>& profiles() const { return profiles_; }
  const rep::BigInt& dimension_sum() const { return dimension_sum_; }

  // delta = 0 returns the delta -> 0+ limit 2 sum d_lambda shared by every
  // method.
  BoundResult at(long size, double delta) const;

 private:
  int d_;
  int t_;
  BoundMethod method_;
  std::vector<IrrepProfile> profiles_;
  rep::BigInt dimension_sum_;
};

BoundResult total_bound(int d, int t, GateSetKind kind, long size,
                        double delta, BoundMethod method,
                        const rep::RepConfig& config = {});

// The factored master-plain union bound:
//   log 2 + log(sum d_lambda) - (S/2) log(1 - delta^2) - delta S atanh(delta).
double master_plain_closed_form(const rep::BigInt& dimension_sum, long size,
                                double delta);

}  // namespace tdb

#endif  // TDBOUND_BOUNDS_BOUNDS_HPP_
