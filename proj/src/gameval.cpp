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

#include "lcplab/gameval.hpp"

#include "lcplab/error.hpp"
#include "lcplab/lpcore.hpp"

namespace lcplab {

namespace {

void require_square(const RatMatrix& a) {
  if (!a.is_square() || a.rows() == 0) {
    throw DimensionError("game value requires a square matrix");
  }
}

RatVec simplex_row(int n) { return RatVec(n, Rat(1)); }

}  // namespace

GameValue game_value(const RatMatrix& a) {
  require_square(a);
  const int n = a.rows();

  // Column player: maximize v subject to a x >= v e, x in the simplex.
  LpProblem primal(n + 1);
  primal.set_free(n);
  primal.set_objective_coeff(n, Rat(-1));
  for (int i = 0; i < n; ++i) {
    RatVec row = a.row(i);
    row.push_back(Rat(-1));
    primal.add_ge(std::move(row), Rat(0));
  }
  {
    RatVec sum = simplex_row(n);
    sum.push_back(Rat(0));
    primal.add_eq(std::move(sum), Rat(1));
  }
  LpOutcome po = solve_lp(primal);
  if (po.status != LpStatus::Optimal) {
    throw InternalError("game value program must have an optimum");
  }

  // Row player: minimize u subject to y^T a <= u e, y in the simplex.
  LpProblem dual(n + 1);
  dual.set_free(n);
  dual.set_objective_coeff(n, Rat(1));
  for (int j = 0; j < n; ++j) {
    RatVec col(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) col[i] = -a(i, j);
    col[n] = 1;
    dual.add_ge(std::move(col), Rat(0));
  }
  {
    RatVec sum = simplex_row(n);
    sum.push_back(Rat(0));
    dual.add_eq(std::move(sum), Rat(1));
  }
  LpOutcome dout = solve_lp(dual);
  if (dout.status != LpStatus::Optimal) {
    throw InternalError("game value program must have an optimum");
  }

  GameValue g;
  g.value = po.solution[n];
  if (dout.solution[n] != g.value) {
    throw InternalError("maximin and minimax optima disagree");
  }
  g.maximin_strategy.assign(po.solution.begin(), po.solution.begin() + n);
  g.minimax_strategy.assign(dout.solution.begin(), dout.solution.begin() + n);
  g.sign = g.value.sign();
  return g;
}

ValueSignQueries value_sign_queries(const RatMatrix& a) {
  require_square(a);
  const int n = a.rows();
  ValueSignQueries q;

  std::vector<LpConstraint> simplex_base;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    simplex_base.push_back({std::move(e), Relation::Ge, Rat(0)});
  }
  simplex_base.push_back({simplex_row(n), Relation::Eq, Rat(1)});

  {
    std::vector<RatVec> rows;
    for (int i = 0; i < n; ++i) rows.push_back(a.row(i));
    auto r = strict_feasibility(n, rows, simplex_base);
    q.positive = r.feasible;
    if (r.feasible) q.positive_witness = r.witness;
  }
  {
    std::vector<RatVec> rows;
    for (int j = 0; j < n; ++j) rows.push_back(vec_scale(Rat(-1), a.col(j)));
    auto r = strict_feasibility(n, rows, simplex_base);
    q.negative = r.feasible;
    if (r.feasible) q.negative_witness = r.witness;
  }
  {
    LpProblem p(n);
    for (int i = 0; i < n; ++i) p.add_ge(a.row(i), Rat(0));
    p.add_eq(simplex_row(n), Rat(1));
    LpOutcome o = solve_lp(p);
    q.nonnegative = o.status == LpStatus::Optimal;
    if (q.nonnegative) q.nonnegative_witness = o.solution;
  }
  {
    LpProblem p(n);
    for (int j = 0; j < n; ++j) p.add_le(a.col(j), Rat(0));
    p.add_eq(simplex_row(n), Rat(1));
    LpOutcome o = solve_lp(p);
    q.nonpositive = o.status == LpStatus::Optimal;
    if (q.nonpositive) q.nonpositive_witness = o.solution;
  }
  return q;
}

}  // namespace lcplab
