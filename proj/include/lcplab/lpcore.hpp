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

#ifndef LCPLAB_LPCORE_HPP_
#define LCPLAB_LPCORE_HPP_

#include <optional>
#include <vector>

#include "lcplab/rat.hpp"
#include "lcplab/subset.hpp"

namespace lcplab {

enum class Relation { Ge, Le, Eq };

struct LpConstraint {
  RatVec coeffs;
  Relation rel = Relation::Ge;
  Rat rhs;
};

// Linear program in natural form: minimize c^T x subject to row constraints
// and per-variable lower bounds. Every variable defaults to lower bound 0;
// set_free removes the bound. There are no upper bounds; encode them as rows.
class LpProblem {
 public:
  explicit LpProblem(int nvars);

  int nvars() const { return nvars_; }

  void set_objective(RatVec c);
  void set_objective_coeff(int var, Rat c);
  const RatVec& objective() const { return objective_; }

  void add(RatVec coeffs, Relation rel, Rat rhs);
  void add_ge(RatVec coeffs, Rat rhs) { add(std::move(coeffs), Relation::Ge, std::move(rhs)); }
  void add_le(RatVec coeffs, Rat rhs) { add(std::move(coeffs), Relation::Le, std::move(rhs)); }
  void add_eq(RatVec coeffs, Rat rhs) { add(std::move(coeffs), Relation::Eq, std::move(rhs)); }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }

  void set_lower(int var, Rat bound);
  void set_free(int var);
  const std::vector<std::optional<Rat>>& lower_bounds() const { return lower_; }

 private:
  int nvars_;
  RatVec objective_;
  std::vector<LpConstraint> constraints_;
  std::vector<std::optional<Rat>> lower_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  RatVec solution;      // length nvars when Optimal
  Rat objective_value;  // exact c^T x when Optimal
  IndexSet basis;       // basic standard-form columns at the final vertex
  long pivots = 0;      // simplex pivots over both phases
};

// Exact two-phase primal simplex with Bland's least-index rule (least-index
// entering column, least basic index among minimum-ratio rows), which
// guarantees finite termination. Fully deterministic.
LpOutcome solve_lp(const LpProblem& p);

struct StrictFeasibility {
  bool feasible = false;      // strict system has a solution
  bool base_feasible = true;  // the non-strict base system alone is feasible
  RatVec witness;             // strict solution when feasible
  Rat t_star;                 // optimal margin of the auxiliary program
};

// Decides feasibility of {strict_rows * x > 0 componentwise, base rows} with
// all x free, via the auxiliary exact LP
//   maximize t  subject to  strict_rows * x >= t e,  t <= 1,  base rows,
// which is feasible iff the base system is and never unbounded; the strict
// system is solvable iff the optimal t is positive. Homogeneous strict rows
// stay open under scaling, so the t <= 1 normalization loses nothing.
StrictFeasibility strict_feasibility(int nvars,
                                     const std::vector<RatVec>& strict_rows,
                                     const std::vector<LpConstraint>& base);

}  // namespace lcplab

#endif  // LCPLAB_LPCORE_HPP_
