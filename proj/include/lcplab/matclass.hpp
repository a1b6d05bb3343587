// Copyright 2026 The lcplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCPLAB_MATCLASS_HPP_
#define LCPLAB_MATCLASS_HPP_

#include <cstdint>
#include <vector>

#include "lcplab/lpcore.hpp"
#include "lcplab/ratmat.hpp"

namespace lcplab {

// Principal-minor sweeps and semimonotonicity checks enumerate up to 2^n
// subsets; the cap keeps that in check and is overridable per call.
inline constexpr int kSubsetCap = 12;

// Z-matrix: every off-diagonal entry nonpositive.
bool is_z_matrix(const RatMatrix& m);

// All 2^n - 1 principal minors of a square matrix, plus the sign flags
// derived from them. Minors are indexed by subset bitmask.
struct MinorProfile {
  int n = 0;
  std::vector<Rat> by_mask;  // size 1 << n; entry 0 (empty set) is unset
  bool is_p = false;         // every principal minor positive
  bool is_p0 = false;        // every principal minor nonnegative
  bool is_almost_p = false;  // proper minors positive, determinant negative
  bool is_n = false;         // every principal minor negative

  const Rat& minor(const IndexSet& alpha) const;
};

MinorProfile minor_profile(const RatMatrix& m, int cap = kSubsetCap,
                           int jobs = 0);

// K-matrix: Z and P. K0-matrix: Z and P0.
bool is_k_matrix(const RatMatrix& m, int cap = kSubsetCap);
bool is_k0_matrix(const RatMatrix& m, int cap = kSubsetCap);

// S-matrix: some x > 0 has m x > 0 (equivalently some 0 != x >= 0 works,
// by perturbing; the returned witness is strictly positive).
struct SWitness {
  bool is_s = false;
  RatVec witness;
};
SWitness is_s_matrix(const RatMatrix& m);

// S-bar: every principal submatrix (the matrix included) is an S-matrix.
bool is_sbar_matrix(const RatMatrix& m, int cap = kSubsetCap, int jobs = 0);

// Strictly semimonotone (E): for every 0 != x >= 0 some component i of the
// support has x_i > 0 and (m x)_i > 0. Decided per support by an exact LP:
// the support alpha refutes E iff {x_a > 0, m_aa x_a <= 0} is feasible.
bool is_e_matrix(const RatMatrix& m, int cap = kSubsetCap, int jobs = 0);

// Semimonotone (E0): support alpha refutes E0 iff {x_a > 0, m_aa x_a < 0}
// is feasible.
bool is_e0_matrix(const RatMatrix& m, int cap = kSubsetCap, int jobs = 0);

// Type D: m(i, j) == alpha_min(i, j) for a strictly increasing sequence
// alpha_1 < alpha_2 < ... < alpha_n read off the diagonal. Positive type D
// additionally has alpha_1 > 0.
struct TypeDProfile {
  bool is_type_d = false;
  bool positive = false;
  RatVec alphas;  // the diagonal sequence when is_type_d
};
TypeDProfile is_type_d(const RatMatrix& m);

// N-matrix categories: all principal minors negative; first category has a
// positive entry, second category has none.
enum class NCategory { NotN, First, Second };
NCategory n_category(const RatMatrix& m, int cap = kSubsetCap, int jobs = 0);

namespace ref {
// Serial reference implementations of the parallel sweeps, kept for
// equivalence testing and benchmarking.
MinorProfile minor_profile(const RatMatrix& m, int cap = kSubsetCap);
bool is_e_matrix(const RatMatrix& m, int cap = kSubsetCap);
bool is_e0_matrix(const RatMatrix& m, int cap = kSubsetCap);
bool is_sbar_matrix(const RatMatrix& m, int cap = kSubsetCap);
}  // namespace ref

}  // namespace lcplab

#endif  // LCPLAB_MATCLASS_HPP_
