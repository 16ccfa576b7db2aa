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

#include "tdbound/repcore/indicator.hpp"

#include <cstdlib>
#include <map>
#include <tuple>
#include <mutex>
#include <stdexcept>

#include "tdbound/repcore/multiplicity.hpp"
#include "tdbound/repcore/permutations.hpp"

namespace tdb::rep {
namespace {

// One term of the S_d sum. For the SU(d) weight (rho - sigma.rho)/n the
// U(d) weight of pi_lambda lying over it is (sigma(i) - i)/n + sum(lambda)/d;
// with sum(lambda) = q d + r the stored vector is that weight minus q.
struct Displacement {
  std::vector<int> mu;
  int sign;
  bool identity;
};

// Terms whose lifted weight is integral, for S_d, step n != 0 and residue
// r = sum(lambda) mod d. Shared across calls and threads.
const std::vector<Displacement>& displacements(int d, int n, int r) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::vector<Displacement>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({d, n, r});
  if (!inserted) return it->second;

  auto& out = it->second;
  const long k = std::labs(n);
  const long denom = k * d;
  for_each_permutation(d, [&](std::span<const int> sigma, int sign) {
    std::vector<int> mu(static_cast<std::size_t>(d));
    bool identity = true;
    for (int i = 0; i < d; ++i) {
      const long shift = n > 0 ? sigma[i] - i : i - sigma[i];
      const long num = shift * d + k * r;
      if (num % denom != 0) return;
      mu[i] = static_cast<int>(num / denom);
      identity = identity && shift == 0;
    }
    out.push_back({std::move(mu), sign, identity});
  });
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// sum over sigma (optionally skipping the identity) of
// sgn(sigma) m_lambda((rho - sigma.rho)/n), the weight read in SU(d).
BigInt signed_weyl_sum(MultiplicityTable& table, int n, bool skip_identity) {
  const auto& lambda = table.lambda();
  const int d = lambda.rank();
  const long q = floor_div(lambda.sum(), d);
  const int r = static_cast<int>(lambda.sum() - q * d);
  BigInt total = 0;
  std::vector<int> mu(static_cast<std::size_t>(d));
  for (const auto& term : displacements(d, n, r)) {
    if (skip_identity && term.identity) continue;
    for (std::size_t i = 0; i < mu.size(); ++i)
      mu[i] = term.mu[i] + static_cast<int>(q);
    // The table prunes weights with ||mu||_1 > ||lambda||_1.
    const BigInt m = table.at(mu);
    if (term.sign > 0)
      total += m;
    else
      total -= m;
  }
  return total;
}

}  // namespace

BigInt zero_weight_multiplicity(const HighestWeight& lambda,
                                const RepConfig& config) {
  const int d = lambda.rank();
  if (lambda.sum() % d != 0) return 0;
  MultiplicityTable table(lambda, MultiplicityTable::Engine::Kostant, config);
  return table.at(std::vector<int>(static_cast<std::size_t>(d),
                                   static_cast<int>(lambda.sum() / d)));
}

Rational fs_indicator(const HighestWeight& lambda, int n,
                      const RepConfig& config, IndicatorPath path) {
  if (n == 0) return Rational(1);
  const int d = lambda.rank();
  const BigInt dim = weyl_dimension(lambda);
  MultiplicityTable table(lambda, MultiplicityTable::Engine::Kostant, config);
  if (path == IndicatorPath::Auto && std::abs(n) >= d + 1)
    return Rational(zero_weight_multiplicity(lambda, config), dim);
  return Rational(signed_weyl_sum(table, n, false), dim);
}

Rational fs_indicator_two_by_duality(const HighestWeight& lambda) {
  if (lambda.sum() != 0)
    throw std::invalid_argument(
        "duality rule for delta_lambda(2) needs a zero-sum weight");
  const int d = lambda.rank();
  for (int i = 0; i < d; ++i)
    if (lambda[i] != -lambda[d - 1 - i]) return Rational(0);
  return Rational(BigInt(1), weyl_dimension(lambda));
}

GammaTable::GammaTable(int d, std::vector<Rational> values)
    : d_(d), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(2 * d + 1))
    throw std::invalid_argument("gamma table needs 2d+1 values");
  doubles_.reserve(values_.size());
  for (const auto& v : values_) doubles_.push_back(v.convert_to<double>());
}

const Rational& GammaTable::at(int k) const {
  if (k < -d_ || k > d_) throw std::out_of_range("gamma index out of range");
  return values_[static_cast<std::size_t>(k + d_)];
}

double GammaTable::value(int k) const {
  if (k < -d_ || k > d_) throw std::out_of_range("gamma index out of range");
  return doubles_[static_cast<std::size_t>(k + d_)];
}

GammaTable gamma_coefficients(const HighestWeight& lambda,
                              const RepConfig& config) {
  const int d = lambda.rank();
  const BigInt dim = weyl_dimension(lambda);
  MultiplicityTable table(lambda, MultiplicityTable::Engine::Kostant, config);
  const BigInt m0 = zero_weight_multiplicity(lambda, config);

  std::vector<Rational> values(static_cast<std::size_t>(2 * d + 1));
  values[static_cast<std::size_t>(d)] = Rational(1) - Rational(m0, dim);
  for (int k = 1; k <= d; ++k) {
    values[static_cast<std::size_t>(d + k)] =
        Rational(signed_weyl_sum(table, k, true), dim);
    values[static_cast<std::size_t>(d - k)] =
        Rational(signed_weyl_sum(table, -k, true), dim);
  }
  return GammaTable(d, std::move(values));
}

}  // namespace tdb::rep
