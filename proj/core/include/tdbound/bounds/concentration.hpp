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


// Concentration of ||T_{nu_S,t}|| around its mean for Haar random gate-sets.

#ifndef TDBOUND_BOUNDS_CONCENTRATION_HPP_
#define TDBOUND_BOUNDS_CONCENTRATION_HPP_

#include "tdbound/repcore/weights.hpp"

namespace tdb {

// exp(-d S alpha^2 / (32 t^2)) for a plain SU(d) gate-set.
double concentration_bound_t(int d, int t, long size, double alpha);

// exp(-d S alpha^2 / (2 pi^2 ||lambda||_1^2)) for a single block.
double concentration_bound_lambda(int d, const rep::HighestWeight& lambda,
                                  long size, double alpha);

// exp(-S alpha^2 / (16 t^2)); size counts SU(2) seed gates.
double concentration_bound_beamsplitter(int t, long size, double alpha);

// Plain SU(d) size matched by S beamsplitter-lifted seeds: 2S/d. Needs d > 2.
double equivalent_plain_size(int d, long size);

}  // namespace tdb

#endif  // TDBOUND_BOUNDS_CONCENTRATION_HPP_
