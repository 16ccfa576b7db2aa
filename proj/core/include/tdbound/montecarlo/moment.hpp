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


// Matrix-free t-th moment operators on (C^d)^{(x)2t}. Vectors are stored
// row-major over 2t modes of size d: mode 0 is the most significant index,
// modes 0..t-1 carry U and modes t..2t-1 carry conj(U).

#ifndef TDBOUND_MONTECARLO_MOMENT_HPP_
#define TDBOUND_MONTECARLO_MOMENT_HPP_

#include <cstddef>
#include <vector>

#include "tdbound/montecarlo/sampling.hpp"

namespace tdb::mc {

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 16;

// d^(2t), throwing std::invalid_argument above cap.
std::size_t moment_dimension(int d, int t,
                             std::size_t cap = kDefaultDimensionCap);

// v <- (1_{d^k} (x) m (x) 1) v on mode `mode`; scratch is resized as needed.
void apply_mode(const Matrix& m, int mode, int modes, int d, Vector& v,
                Vector& scratch);

// T = (1/S) sum_U U^{(x)t} (x) conj(U)^{(x)t}.
class MomentOperator {
 public:
  MomentOperator(std::vector<Matrix> gates, int t,
                 std::size_t cap = kDefaultDimensionCap);

  int d() const { return d_; }
  int t() const { return t_; }
  std::size_t dimension() const { return dim_; }
  std::size_t gate_count() const { return gates_.size(); }

  void apply(const Vector& in, Vector& out) const;
  void apply_adjoint(const Vector& in, Vector& out) const;

 private:
  void accumulate(const Vector& in, Vector& out, bool adjoint) const;

  int d_;
  int t_;
  std::size_t dim_;
  std::vector<Matrix> gates_;
  std::vector<Matrix> conj_;
  std::vector<Matrix> adj_;
  std::vector<Matrix> trans_;
};

// Orthogonal projector onto span{vec(P_sigma) : sigma in S_t}, which equals
// the Haar moment operator.
class HaarProjector {
 public:
  HaarProjector(int d, int t, std::size_t cap = kDefaultDimensionCap);

  int d() const { return d_; }
  int t() const { return t_; }
  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rank_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const Eigen::MatrixXd& gram_pinv() const { return pinv_; }

  // For each sigma, the rows where vec(P_sigma) is 1 (all other entries 0).
  const std::vector<std::vector<std::size_t>>& supports() const {
    return supports_;
  }

  void apply(const Vector& in, Vector& out) const;
  Eigen::MatrixXcd dense() const;

 private:
  int d_;
  int t_;
  std::size_t dim_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::size_t>> supports_;  // per sigma
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd pinv_;
};

}  // namespace tdb::mc

#endif  // TDBOUND_MONTECARLO_MOMENT_HPP_
