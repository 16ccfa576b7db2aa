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


#include "tdbound/montecarlo/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tdbound/util/parallel.hpp"

namespace tdb::mc {
namespace {

Vector random_unit(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = Complex(normal(rng), normal(rng));
  v.normalize();
  return v;
}

// z^k by repeated multiplication; std::pow(0, 0) on complex is not 1.
Complex ipow(Complex z, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

struct PowerRun {
  double value = 0.0;
  int iterations = 0;
  double last_change = 0.0;
  bool converged = false;
};

// Lanczos on (T - Pi)^dagger (T - Pi) with full reorthogonalization,
// restarted from the top Ritz vector until its residual drops below
// tolerance * Ritz value. Each step costs one product, like a power step.
PowerRun power_run(const MomentOperator& moment, const HaarProjector& projector,
                   Vector v, const PowerOptions& options) {
  const auto dim = static_cast<Eigen::Index>(moment.dimension());
  const int steps = static_cast<int>(std::min<Eigen::Index>(dim, 30));
  Vector tv;
  Vector pv;
  Vector w;
  auto product = [&](const Vector& x, Vector& out) {
    moment.apply(x, tv);
    projector.apply(x, pv);
    w = tv - pv;
    moment.apply_adjoint(w, tv);
    projector.apply(w, pv);
    out = tv - pv;
  };

  PowerRun run;
  std::vector<Vector> basis(static_cast<std::size_t>(steps));
  std::vector<double> alpha(static_cast<std::size_t>(steps));
  std::vector<double> beta(static_cast<std::size_t>(steps));
  Vector z;
  v.normalize();
  while (run.iterations < options.max_iterations) {
    int k = 0;
    bool invariant = false;
    Vector q = v;
    for (int j = 0; j < steps && run.iterations < options.max_iterations; ++j) {
      basis[j] = q;
      product(q, z);
      ++run.iterations;
      alpha[j] = q.dot(z).real();
      // Two passes of Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i <= j; ++i) z -= basis[i].dot(z) * basis[i];
      beta[j] = z.norm();
      k = j + 1;
      if (beta[j] <= 1e-14 * std::max(1.0, std::fabs(alpha[j]))) {
        invariant = true;
        break;
      }
      q = z / beta[j];
    }
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tri);
    const double value = eig.eigenvalues()(k - 1);
    const Eigen::VectorXd y = eig.eigenvectors().col(k - 1);
    v.setZero(dim);
    for (int i = 0; i < k; ++i) v += y(i) * basis[i];
    v.normalize();
    run.value = std::max(value, 0.0);
    const double residual = invariant ? 0.0 : beta[k - 1] * std::fabs(y(k - 1));
    if (run.value <= 1e-300) {
      run.value = 0.0;
      run.last_change = 0.0;
      run.converged = true;
      return run;
    }
    run.last_change = residual / run.value;
    if (run.last_change <= options.relative_tolerance || invariant) {
      run.converged = true;
      return run;
    }
  }
  return run;
}

}  // namespace

DeltaEstimate estimate_delta(const MomentOperator& moment,
                             const HaarProjector& projector,
                             const PowerOptions& options) {
  if (moment.d() != projector.d() || moment.t() != projector.t())
    throw std::invalid_argument("moment operator and projector disagree");
  if (options.restarts < 1)
    throw std::invalid_argument("at least one power-iteration start needed");
  Rng rng(options.seed);
  DeltaEstimate best;
  double best_value = -1.0;
  for (int r = 0; r < options.restarts; ++r) {
    const auto run = power_run(moment, projector,
                               random_unit(moment.dimension(), rng), options);
    best.iterations += run.iterations;
    best.restarts = r + 1;
    if (!run.converged) {
      std::ostringstream msg;
      msg << "power iteration did not converge: d=" << moment.d()
          << " t=" << moment.t() << " start=" << r
          << " iterations=" << run.iterations
          << " estimate=" << std::sqrt(run.value)
          << " relative change=" << run.last_change;
      best.delta = std::sqrt(std::max(best_value, run.value));
      best.last_change = run.last_change;
      throw PowerIterationFailed(msg.str(), best);
    }
    if (run.value > best_value) {
      best_value = run.value;
      best.last_change = run.last_change;
    }
  }
  best.delta = std::sqrt(best_value);
  return best;
}

DeltaEstimate estimate_delta(const GateSetSample& sample, int t,
                             const PowerOptions& options) {
  const MomentOperator moment(sample.unitaries, t);
  const HaarProjector projector(sample.d, t);
  return estimate_delta(moment, projector, options);
}

TailEstimate empirical_tail(int d, int t, GateSetKind kind, long size,
                            double delta_threshold, int trials,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const HaarProjector projector(d, t);
  TailEstimate out;
  out.trials.resize(static_cast<std::size_t>(trials));
  parallel_for(out.trials.size(), [&](std::size_t k) {
    const std::uint64_t s = trial_seed(seed, k);
    const auto sample = sample_gate_set(d, kind, size, s);
    const MomentOperator moment(sample.unitaries, t);
    PowerOptions options;
    options.seed = trial_seed(s, 0x706f776572ULL);
    const auto est = estimate_delta(moment, projector, options);
    out.trials[k] = {k, s, est.delta, est.iterations};
  });

  const double n = static_cast<double>(trials);
  double hits = 0.0;
  double sum = 0.0;
  for (const auto& r : out.trials) {
    if (r.delta >= delta_threshold) hits += 1.0;
    sum += r.delta;
  }
  out.fraction = hits / n;
  out.stderr_fraction = std::sqrt(out.fraction * (1.0 - out.fraction) / n);
  out.mean_delta = sum / n;
  if (trials > 1) {
    double ss = 0.0;
    for (const auto& r : out.trials)
      ss += (r.delta - out.mean_delta) * (r.delta - out.mean_delta);
    out.stderr_mean = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

Matrix su2_irrep_matrix(int j_times_2, const Matrix& u) {
  if (j_times_2 < 0) throw std::invalid_argument("j_times_2 must be >= 0");
  if (u.rows() != 2 || u.cols() != 2)
    throw std::invalid_argument("SU(2) element must be 2x2");
  const int n = j_times_2;
  std::vector<double> log_fact(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) log_fact[k] = std::lgamma(k + 1.0);
  auto binom = [&](int a, int b) {
    return std::exp(log_fact[a] - log_fact[b] - log_fact[a - b]);
  };
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);

  // f(U^T z) with f = x^a y^(n-a): (u00 x + u10 y)^a (u01 x + u11 y)^(n-a).
  Matrix out = Matrix::Zero(n + 1, n + 1);
  for (int a = 0; a <= n; ++a) {
    for (int p = 0; p <= a; ++p) {
      for (int q = 0; q <= n - a; ++q) {
        const int b = p + q;  // power of x in the product
        const Complex term = binom(a, p) * binom(n - a, q) *
                             ipow(u00, p) * ipow(u10, a - p) * ipow(u01, q) *
                             ipow(u11, n - a - q);
        const double scale = std::exp(
            0.5 * (log_fact[b] + log_fact[n - b] - log_fact[a] -
                   log_fact[n - a]));
        out(n - b, n - a) += term * scale;
      }
    }
  }
  return out;
}

McMean estimate_fs_indicator_mc(int j_times_2, int n, int trials,
                                std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("trials must be >= 2");
  Rng rng = make_rng(seed, 0);
  const double dim = j_times_2 + 1.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < trials; ++k) {
    const Matrix u = sample_haar(2, rng);
    Matrix power = Matrix::Identity(2, 2);
    const Matrix base = n >= 0 ? u : Matrix(u.adjoint());
    for (int e = 0; e < std::abs(n); ++e) power = power * base;
    const double x = su2_irrep_matrix(j_times_2, power).trace().real() / dim;
    sum += x;
    sum_sq += x * x;
  }
  const double m = sum / trials;
  const double var = (sum_sq - trials * m * m) / (trials - 1.0);
  return {m, std::sqrt(std::max(var, 0.0) / trials)};
}

}  // namespace tdb::mc
