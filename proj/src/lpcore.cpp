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

#include "lcplab/lpcore.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lcplab/error.hpp"

namespace lcplab {

LpProblem::LpProblem(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw DimensionError("negative variable count");
  objective_.assign(nvars, Rat(0));
  lower_.assign(nvars, Rat(0));
}

void LpProblem::set_objective(RatVec c) {
  if (static_cast<int>(c.size()) != nvars_) {
    throw DimensionError("objective length mismatch");
  }
  objective_ = std::move(c);
}

void LpProblem::set_objective_coeff(int var, Rat c) {
  if (var < 0 || var >= nvars_) throw DimensionError("objective var out of range");
  objective_[var] = std::move(c);
}

void LpProblem::add(RatVec coeffs, Relation rel, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != nvars_) {
    throw DimensionError("constraint length mismatch");
  }
  constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LpProblem::set_lower(int var, Rat bound) {
  if (var < 0 || var >= nvars_) throw DimensionError("bound var out of range");
  lower_[var] = std::move(bound);
}

void LpProblem::set_free(int var) {
  if (var < 0 || var >= nvars_) throw DimensionError("bound var out of range");
  lower_[var] = std::nullopt;
}

namespace {

constexpr long kPivotGuard = 50'000'000;

// Standard-form tableau. Rows carry the right-hand side in the last slot.
struct Tableau {
  std::vector<RatVec> rows;
  RatVec obj;              // reduced-cost row, same layout as rows
  std::vector<int> basis;  // basic column per row
  int ncols = 0;           // columns excluding the rhs slot
  long pivots = 0;

  Rat& at(int i, int j) { return rows[i][j]; }
  Rat& rhs(int i) { return rows[i][ncols]; }

  void pivot(int r, int c) {
    Rat inv_p = at(r, c).reciprocal();
    for (int j = 0; j <= ncols; ++j) rows[r][j] *= inv_p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || at(i, c).is_zero()) continue;
      Rat f = at(i, c);
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (!obj[c].is_zero()) {
      Rat f = obj[c];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
    ++pivots;
  }

  // Reduced costs for the cost vector c over the current basis.
  void rebuild_obj(const RatVec& cost) {
    obj.assign(ncols + 1, Rat(0));
    for (int j = 0; j < ncols; ++j) obj[j] = cost[j];
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat& cb = cost[basis[r]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= ncols; ++j) obj[j] -= cb * rows[r][j];
    }
  }

  // Bland's rule: least-index entering column with a negative reduced cost;
  // among minimum-ratio rows, the one whose basic column index is least.
  LpStatus run_simplex() {
    for (long guard = 0; guard < kPivotGuard; ++guard) {
      int c = -1;
      for (int j = 0; j < ncols; ++j) {
        if (obj[j].sign() < 0) {
          c = j;
          break;
        }
      }
      if (c < 0) return LpStatus::Optimal;
      int r = -1;
      Rat best;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (at(i, c).sign() <= 0) continue;
        Rat ratio = rhs(i) / at(i, c);
        if (r < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[r])) {
          r = static_cast<int>(i);
          best = ratio;
        }
      }
      if (r < 0) return LpStatus::Unbounded;
      pivot(r, c);
    }
    throw InternalError("simplex pivot guard exceeded");
  }
};

}  // namespace

LpOutcome solve_lp(const LpProblem& p) {
  const int n = p.nvars();
  const auto& cons = p.constraints();
  const auto& lower = p.lower_bounds();
  const int m = static_cast<int>(cons.size());

  // Variable pieces: a bounded variable contributes one shifted column, a
  // free variable a positive and a negative column.
  std::vector<std::pair<int, int>> piece;  // (var, sign)
  RatVec shift(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (lower[i].has_value()) {
      shift[i] = *lower[i];
      piece.emplace_back(i, 1);
    } else {
      piece.emplace_back(i, 1);
      piece.emplace_back(i, -1);
    }
  }
  const int nvarcols = static_cast<int>(piece.size());

  int nslack = 0;
  for (const auto& c : cons) {
    if (c.rel != Relation::Eq) ++nslack;
  }
  const int nreal = nvarcols + nslack;

  Tableau t;
  t.basis.assign(m, -1);
  std::vector<int> art_rows;
  std::vector<RatVec> raw_rows(m);
  {
    int slack_at = nvarcols;
    for (int k = 0; k < m; ++k) {
      RatVec row(nreal + 1, Rat(0));
      Rat rhs = cons[k].rhs;
      for (int i = 0; i < n; ++i) {
        if (lower[i].has_value() && !cons[k].coeffs[i].is_zero()) {
          rhs -= cons[k].coeffs[i] * shift[i];
        }
      }
      for (int pc = 0; pc < nvarcols; ++pc) {
        const auto& [var, sign] = piece[pc];
        row[pc] = Rat(sign) * cons[k].coeffs[var];
      }
      int slack_col = -1;
      if (cons[k].rel != Relation::Eq) {
        slack_col = slack_at++;
        row[slack_col] = cons[k].rel == Relation::Le ? Rat(1) : Rat(-1);
      }
      if (rhs.sign() < 0) {
        for (int j = 0; j < nreal; ++j) row[j] = -row[j];
        rhs = -rhs;
      }
      row[nreal] = rhs;
      if (slack_col >= 0 && row[slack_col] == Rat(1)) {
        t.basis[k] = slack_col;
      } else {
        art_rows.push_back(k);
      }
      raw_rows[k] = std::move(row);
    }
  }

  const int nart = static_cast<int>(art_rows.size());
  t.ncols = nreal + nart;
  t.rows.assign(m, RatVec());
  for (int k = 0; k < m; ++k) {
    RatVec row(t.ncols + 1, Rat(0));
    for (int j = 0; j < nreal; ++j) row[j] = raw_rows[k][j];
    row[t.ncols] = raw_rows[k][nreal];
    t.rows[k] = std::move(row);
  }
  for (int a = 0; a < nart; ++a) {
    t.rows[art_rows[a]][nreal + a] = 1;
    t.basis[art_rows[a]] = nreal + a;
  }

  LpOutcome out;

  if (nart > 0) {
    RatVec phase1_cost(t.ncols, Rat(0));
    for (int a = 0; a < nart; ++a) phase1_cost[nreal + a] = 1;
    t.rebuild_obj(phase1_cost);
    LpStatus s1 = t.run_simplex();
    if (s1 == LpStatus::Unbounded) {
      throw InternalError("phase-1 objective cannot be unbounded");
    }
    Rat infeas;
    for (size_t r = 0; r < t.rows.size(); ++r) {
      if (t.basis[r] >= nreal) infeas += t.rhs(static_cast<int>(r));
    }
    if (infeas.sign() > 0) {
      out.status = LpStatus::Infeasible;
      out.pivots = t.pivots;
      return out;
    }
    // Drive residual artificials out of the basis; rows that cannot pivot on
    // any real column are redundant and dropped.
    std::vector<int> drop;
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r) {
      if (t.basis[r] < nreal) continue;
      int c = -1;
      for (int j = 0; j < nreal; ++j) {
        if (!t.at(r, j).is_zero()) {
          c = j;
          break;
        }
      }
      if (c >= 0) {
        t.pivot(r, c);
      } else {
        drop.push_back(r);
      }
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      t.rows.erase(t.rows.begin() + *it);
      t.basis.erase(t.basis.begin() + *it);
    }
    // Artificial columns are dead from here on.
    for (auto& row : t.rows) {
      row[nreal] = row[t.ncols];
      row.resize(nreal + 1);
    }
    t.ncols = nreal;
  }

  RatVec phase2_cost(t.ncols, Rat(0));
  for (int pc = 0; pc < nvarcols; ++pc) {
    const auto& [var, sign] = piece[pc];
    phase2_cost[pc] = Rat(sign) * p.objective()[var];
  }
  t.rebuild_obj(phase2_cost);
  LpStatus s2 = t.run_simplex();
  out.pivots = t.pivots;
  if (s2 == LpStatus::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  RatVec colval(t.ncols, Rat(0));
  for (size_t r = 0; r < t.rows.size(); ++r) {
    colval[t.basis[r]] = t.rhs(static_cast<int>(r));
  }
  RatVec x = shift;
  for (int pc = 0; pc < nvarcols; ++pc) {
    const auto& [var, sign] = piece[pc];
    if (sign > 0) {
      x[var] += colval[pc];
    } else {
      x[var] -= colval[pc];
    }
  }
  out.status = LpStatus::Optimal;
  out.solution = std::move(x);
  out.objective_value = dot(p.objective(), out.solution);
  std::vector<int> basic(t.basis.begin(), t.basis.end());
  out.basis = IndexSet(t.ncols, std::move(basic));
  return out;
}

StrictFeasibility strict_feasibility(int nvars,
                                     const std::vector<RatVec>& strict_rows,
                                     const std::vector<LpConstraint>& base) {
  for (const auto& row : strict_rows) {
    if (static_cast<int>(row.size()) != nvars) {
      throw DimensionError("strict row length mismatch");
    }
  }
  // Variables: x (free) then the margin t (free).
  LpProblem p(nvars + 1);
  for (int i = 0; i <= nvars; ++i) p.set_free(i);
  p.set_objective_coeff(nvars, Rat(-1));
  for (const auto& row : strict_rows) {
    RatVec coeffs = row;
    coeffs.push_back(Rat(-1));
    p.add_ge(std::move(coeffs), Rat(0));
  }
  {
    RatVec tcap(nvars + 1, Rat(0));
    tcap[nvars] = 1;
    p.add_le(std::move(tcap), Rat(1));
  }
  for (const auto& c : base) {
    if (static_cast<int>(c.coeffs.size()) != nvars) {
      throw DimensionError("base constraint length mismatch");
    }
    RatVec coeffs = c.coeffs;
    coeffs.push_back(Rat(0));
    p.add(std::move(coeffs), c.rel, c.rhs);
  }

  LpOutcome lp = solve_lp(p);
  StrictFeasibility res;
  if (lp.status == LpStatus::Infeasible) {
    res.feasible = false;
    res.base_feasible = false;
    return res;
  }
  if (lp.status != LpStatus::Optimal) {
    throw InternalError("margin program cannot be unbounded");
  }
  res.t_star = lp.solution[nvars];
  res.feasible = res.t_star.sign() > 0;
  res.base_feasible = true;
  res.witness.assign(lp.solution.begin(), lp.solution.begin() + nvars);
  return res;
}

}  // namespace lcplab
