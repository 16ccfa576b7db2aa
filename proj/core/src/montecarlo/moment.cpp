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


#include "tdbound/montecarlo/moment.hpp"

#include <stdexcept>
#include <string>

#include "tdbound/repcore/permutations.hpp"

namespace tdb::mc {

std::size_t moment_dimension(int d, int t, std::size_t cap) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  std::size_t dim = 1;
  for (int k = 0; k < 2 * t; ++k) {
    dim *= static_cast<std::size_t>(d);
    if (dim > cap)
      throw std::invalid_argument("d^(2t) exceeds the dimension cap " +
                                  std::to_string(cap));
  }
  return dim;
}

void apply_mode(const Matrix& m, int mode, int modes, int d, Vector& v,
                Vector& scratch) {
  std::size_t inner = 1;
  for (int k = mode + 1; k < modes; ++k) inner *= static_cast<std::size_t>(d);
  const std::size_t block = inner * static_cast<std::size_t>(d);
  const std::size_t outer = static_cast<std::size_t>(v.size()) / block;
  scratch.resize(v.size());
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = o * block;
    for (int a = 0; a < d; ++a) {
      Complex* dst = scratch.data() + base + a * inner;
      for (std::size_t r = 0; r < inner; ++r) dst[r] = 0.0;
      for (int b = 0; b < d; ++b) {
        const Complex w = m(a, b);
        if (w == Complex(0.0)) continue;
        const Complex* src = v.data() + base + b * inner;
        // Spelled out: operator* on std::complex carries NaN/inf recovery
        // that dominates this loop.
        const double wr = w.real();
        const double wi = w.imag();
        for (std::size_t r = 0; r < inner; ++r) {
          const double sr = src[r].real();
          const double si = src[r].imag();
          dst[r] += Complex(wr * sr - wi * si, wr * si + wi * sr);
        }
      }
    }
  }
  v.swap(scratch);
}

MomentOperator::MomentOperator(std::vector<Matrix> gates, int t,
                               std::size_t cap)
    : t_(t), gates_(std::move(gates)) {
  if (gates_.empty()) throw std::invalid_argument("gate list is empty");
  d_ = static_cast<int>(gates_.front().rows());
  for (const auto& g : gates_)
    if (g.rows() != d_ || g.cols() != d_)
      throw std::invalid_argument("gates must share one square size");
  dim_ = moment_dimension(d_, t_, cap);
  for (const auto& g : gates_) {
    conj_.push_back(g.conjugate());
    adj_.push_back(g.adjoint());
    trans_.push_back(g.transpose());
  }
}

void MomentOperator::accumulate(const Vector& in, Vector& out,
                                bool adjoint) const {
  if (static_cast<std::size_t>(in.size()) != dim_)
    throw std::invalid_argument("vector length differs from d^(2t)");
  out = Vector::Zero(static_cast<Eigen::Index>(dim_));
  thread_local Vector work;
  thread_local Vector scratch;
  const int modes = 2 * t_;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Matrix& left = adjoint ? adj_[g] : gates_[g];
    const Matrix& right = adjoint ? trans_[g] : conj_[g];
    work = in;
    for (int k = 0; k < t_; ++k) apply_mode(left, k, modes, d_, work, scratch);
    for (int k = t_; k < modes; ++k)
      apply_mode(right, k, modes, d_, work, scratch);
    out += work;
  }
  out /= static_cast<double>(gates_.size());
}

void MomentOperator::apply(const Vector& in, Vector& out) const {
  accumulate(in, out, false);
}

void MomentOperator::apply_adjoint(const Vector& in, Vector& out) const {
  accumulate(in, out, true);
}

HaarProjector::HaarProjector(int d, int t, std::size_t cap)
    : d_(d), t_(t), dim_(moment_dimension(d, t, cap)) {
  if (t > 6) throw std::invalid_argument("t! exceeds 720");
  std::vector<std::vector<int>> perms;
  rep::for_each_permutation(t, [&](std::span<const int> sigma, int) {
    perms.emplace_back(sigma.begin(), sigma.end());
  });

  std::size_t half = 1;
  for (int k = 0; k < t; ++k) half *= static_cast<std::size_t>(d);

  // vec(P_sigma)[i, j] = prod_k [i_k == j_{sigma(k)}].
  std::vector<int> digits(static_cast<std::size_t>(t));
  std::vector<int> jdigits(static_cast<std::size_t>(t));
  for (const auto& sigma : perms) {
    std::vector<std::size_t> rows;
    rows.reserve(half);
    for (std::size_t i = 0; i < half; ++i) {
      std::size_t rest = i;
      for (int k = t - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(rest % d);
        rest /= d;
      }
      for (int k = 0; k < t; ++k) jdigits[sigma[k]] = digits[k];
      std::size_t j = 0;
      for (int k = 0; k < t; ++k) j = j * d + jdigits[k];
      rows.push_back(i * half + j);
    }
    supports_.push_back(std::move(rows));
  }

  const auto n = static_cast<Eigen::Index>(perms.size());
  gram_.resize(n, n);
  std::vector<int> inv(static_cast<std::size_t>(t));
  std::vector<int> comp(static_cast<std::size_t>(t));
  for (Eigen::Index a = 0; a < n; ++a) {
    for (int k = 0; k < t; ++k) inv[perms[a][k]] = k;
    for (Eigen::Index b = 0; b < n; ++b) {
      for (int k = 0; k < t; ++k) comp[k] = inv[perms[b][k]];
      gram_(a, b) = std::pow(static_cast<double>(d), rep::cycle_count(comp));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_);
  const double top = eig.eigenvalues().cwiseAbs().maxCoeff();
  const double threshold = 1e-10 * top;
  Eigen::VectorXd inv_vals = Eigen::VectorXd::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (eig.eigenvalues()(k) > threshold) {
      inv_vals(k) = 1.0 / eig.eigenvalues()(k);
      ++rank_;
    }
  }
  pinv_ = eig.eigenvectors() * inv_vals.asDiagonal() *
          eig.eigenvectors().transpose();
}

void HaarProjector::apply(const Vector& in, Vector& out) const {
  if (static_cast<std::size_t>(in.size()) != dim_)
    throw std::invalid_argument("vector length differs from d^(2t)");
  const auto n = static_cast<Eigen::Index>(supports_.size());
  Vector overlap(n);
  for (Eigen::Index s = 0; s < n; ++s) {
    Complex acc = 0.0;
    for (std::size_t row : supports_[s]) acc += in[row];
    overlap(s) = acc;
  }
  const Vector coeff = pinv_ * overlap;
  out = Vector::Zero(static_cast<Eigen::Index>(dim_));
  for (Eigen::Index s = 0; s < n; ++s)
    for (std::size_t row : supports_[s]) out[row] += coeff(s);
}

Eigen::MatrixXcd HaarProjector::dense() const {
  Eigen::MatrixXcd out(dim_, dim_);
  Vector e = Vector::Zero(static_cast<Eigen::Index>(dim_));
  Vector col;
  for (std::size_t c = 0; c < dim_; ++c) {
    e[c] = 1.0;
    apply(e, col);
    out.col(c) = col;
    e[c] = 0.0;
  }
  return out;
}

}  // namespace tdb::mc
