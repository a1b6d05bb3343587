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

#ifndef LCPLAB_GAMEVAL_HPP_
#define LCPLAB_GAMEVAL_HPP_

#include "lcplab/rat.hpp"
#include "lcplab/ratmat.hpp"

namespace lcplab {

// Value and exact optimal strategies of the two-person zero-sum matrix game
// with payoff matrix a (the column player maximizes min_i (a x)_i over the
// simplex). Solved by a pair of exact LPs whose optima must agree.
struct GameValue {
  Rat value;
  RatVec maximin_strategy;  // x*, column player's mixed strategy
  RatVec minimax_strategy;  // y*, row player's mixed strategy
  int sign = 0;             // sign of the value
};
GameValue game_value(const RatMatrix& a);

// The four one-sided sign queries, each decided by its own feasibility
// program rather than by computing the value:
//   positive:     some simplex x with a x > 0
//   nonnegative:  some simplex x with a x >= 0
//   negative:     some simplex y with y^T a < 0
//   nonpositive:  some simplex y with y^T a <= 0
struct ValueSignQueries {
  bool positive = false;
  bool nonnegative = false;
  bool negative = false;
  bool nonpositive = false;
  RatVec positive_witness;     // when positive
  RatVec nonnegative_witness;  // when nonnegative
  RatVec negative_witness;     // when negative
  RatVec nonpositive_witness;  // when nonpositive
};
ValueSignQueries value_sign_queries(const RatMatrix& a);

}  // namespace lcplab

#endif  // LCPLAB_GAMEVAL_HPP_
