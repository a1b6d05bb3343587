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

#include "lcplab/lcpsolve.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lcplab/error.hpp"
#include "lcplab/lpcore.hpp"
#include "lcplab/parallel.hpp"

namespace lcplab {

namespace {

void require_instance(const LcpInstance& inst) {
  if (!inst.a.is_square() || inst.a.rows() == 0) {
    throw DimensionError("LCP matrix must be square");
  }
  if (static_cast<int>(inst.q.size()) != inst.a.rows()) {
    throw DimensionError("LCP q length does not match the matrix order");
  }
}

long iteration_cap(int n, long max_iter) {
  if (max_iter > 0) return max_iter;
  long cap = 10;
  for (int i = 0; i < n && cap < (1L << 40); ++i) cap *= 2;
  return cap;
}

LcpSolution make_solution(const LcpInstance& inst, RatVec z, RatVec w) {
  LcpSolution sol;
  sol.z = std::move(z);
  sol.w = std::move(w);
  std::vector<int> supp;
  bool degen = false;
  for (int i = 0; i < inst.a.rows(); ++i) {
    if (sol.z[i].sign() > 0) supp.push_back(i);
    if (sol.z[i].is_zero() && sol.w[i].is_zero()) degen = true;
  }
  sol.support = IndexSet(inst.a.rows(), std::move(supp));
  sol.degenerate = degen;
  return sol;
}

}  // namespace

ValidationReport validate_solution(const LcpInstance& inst, const RatVec& z) {
  require_instance(inst);
  ValidationReport rep;
  const int n = inst.a.rows();
  if (static_cast<int>(z.size()) != n) {
    throw DimensionError("candidate z has length " + std::to_string(z.size()) +
                         ", expected " + std::to_string(n));
  }
  RatVec w = vec_add(inst.q, matvec(inst.a, z));
  for (int i = 0; i < n; ++i) {
    if (z[i].sign() < 0) {
      rep.violations.push_back("z[" + std::to_string(i + 1) + "] = " +
                               z[i].str() + " is negative");
    }
    if (w[i].sign() < 0) {
      rep.violations.push_back("w[" + std::to_string(i + 1) + "] = " +
                               w[i].str() + " is negative");
    }
  }
  for (int i = 0; i < n; ++i) {
    Rat prod = z[i] * w[i];
    if (!prod.is_zero() && z[i].sign() >= 0 && w[i].sign() >= 0) {
      rep.violations.push_back("complementarity fails at index " +
                               std::to_string(i + 1) + ": z w = " +
                               prod.str());
    }
  }
  rep.ok = rep.violations.empty();
  if (rep.ok) rep.solution = make_solution(inst, z, std::move(w));
  return rep;
}

// ---------------------------------------------------------------------------
// Lemke's method. Tableau columns: w_0..w_{n-1}, z_0..z_{n-1}, the covering
// column z0, then the right-hand side. Ties in the ratio test are broken
// lexicographically over (rhs, w-columns), which keeps every basis
// lexicographically feasible and rules out cycling.

SolveOutcome lemke_solve(const LcpInstance& inst, long max_iter) {
  require_instance(inst);
  const int n = inst.a.rows();
  const long cap = iteration_cap(n, max_iter);
  SolveOutcome out;

  if (vec_all_nonneg(inst.q)) {
    RatVec z(n, Rat(0));
    ValidationReport rep = validate_solution(inst, z);
    out.status = SolveStatus::Solved;
    out.solution = rep.solution;
    return out;
  }

  const int col_z0 = 2 * n;
  const int col_rhs = 2 * n + 1;
  std::vector<RatVec> t(n, RatVec(2 * n + 2, Rat(0)));
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) {
    t[i][i] = 1;
    for (int j = 0; j < n; ++j) t[i][n + j] = -inst.a(i, j);
    t[i][col_z0] = -1;
    t[i][col_rhs] = inst.q[i];
    basis[i] = i;
  }

  auto pivot = [&](int r, int c) {
    Rat inv_p = t[r][c].reciprocal();
    for (int j = 0; j < col_rhs + 1; ++j) t[r][j] *= inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rat f = t[i][c];
      for (int j = 0; j < col_rhs + 1; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
    ++out.pivots;
  };

  // Entry of the covering variable: the most negative q_i leaves; among ties
  // the largest row keeps the subsequent lexicographic vectors positive.
  int r = 0;
  for (int i = 1; i < n; ++i) {
    if (t[i][col_rhs] <= t[r][col_rhs]) r = i;
  }
  int entering = n + basis[r];  // complement of the leaving w_r
  pivot(r, col_z0);

  // Lexicographic comparison of candidate rows i, k for entering column c:
  // compare (rhs, w-columns) scaled by the positive pivot entries.
  auto lex_less = [&](int i, int k, int c) {
    const Rat& di = t[i][c];
    const Rat& dk = t[k][c];
    Rat left = t[i][col_rhs] * dk;
    Rat right = t[k][col_rhs] * di;
    if (left != right) return left < right;
    for (int j = 0; j < n; ++j) {
      left = t[i][j] * dk;
      right = t[k][j] * di;
      if (left != right) return left < right;
    }
    return false;
  };

  while (out.pivots < cap) {
    int leave = -1;
    for (int i = 0; i < n; ++i) {
      if (t[i][entering].sign() <= 0) continue;
      if (leave < 0 || lex_less(i, leave, entering)) leave = i;
    }
    if (leave < 0) {
      out.status = SolveStatus::RayTermination;
      return out;
    }
    int leaving_var = basis[leave];
    pivot(leave, entering);
    if (leaving_var == col_z0) {
      RatVec z(n, Rat(0));
      for (int i = 0; i < n; ++i) {
        if (basis[i] >= n && basis[i] < 2 * n) {
          z[basis[i] - n] = t[i][col_rhs];
        }
      }
      ValidationReport rep = validate_solution(inst, z);
      if (!rep.ok) {
        throw InternalError("complementary pivot produced an invalid point");
      }
      out.status = SolveStatus::Solved;
      out.solution = rep.solution;
      return out;
    }
    entering = leaving_var < n ? n + leaving_var : leaving_var - n;
  }
  out.status = SolveStatus::IterationCap;
  return out;
}

// ---------------------------------------------------------------------------
// Least-index principal pivoting on complementary bases. Row i always hosts
// the complementary pair i; basis[i] names which member is basic. A diagonal
// pivot handles a negative diagonal entry; a zero diagonal falls back to the
// least-index exchange pivot over an admissible 2x2 block.

SolveOutcome crisscross_solve(const LcpInstance& inst, long max_iter) {
  require_instance(inst);
  const int n = inst.a.rows();
  const long cap = iteration_cap(n, max_iter);
  SolveOutcome out;

  const int col_rhs = 2 * n;
  std::vector<RatVec> t(n, RatVec(2 * n + 1, Rat(0)));
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) {
    t[i][i] = 1;
    for (int j = 0; j < n; ++j) t[i][n + j] = -inst.a(i, j);
    t[i][col_rhs] = inst.q[i];
    basis[i] = i;
  }

  auto pivot = [&](int r, int c) {
    Rat inv_p = t[r][c].reciprocal();
    for (int j = 0; j <= col_rhs; ++j) t[r][j] *= inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rat f = t[i][c];
      for (int j = 0; j <= col_rhs; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
    ++out.pivots;
  };
  auto partner_col = [&](int row) { return basis[row] < n ? n + row : row; };

  while (out.pivots < cap) {
    int r = -1;
    for (int i = 0; i < n; ++i) {
      if (t[i][col_rhs].sign() < 0) {
        r = i;
        break;
      }
    }
    if (r < 0) {
      RatVec z(n, Rat(0));
      for (int i = 0; i < n; ++i) {
        if (basis[i] >= n) z[i] = t[i][col_rhs];
      }
      ValidationReport rep = validate_solution(inst, z);
      if (!rep.ok) {
        throw InternalError("principal pivoting produced an invalid point");
      }
      out.status = SolveStatus::Solved;
      out.solution = rep.solution;
      return out;
    }
    int cr = partner_col(r);
    if (t[r][cr].sign() < 0) {
      pivot(r, cr);
      continue;
    }
    if (t[r][cr].sign() > 0) {
      // A positive partner entry cannot occur in the matrix classes this
      // method is complete on; give up rather than lose the complementary
      // structure. (With a zero entry the exchange below is always exact:
      // the second pivot entry is untouched by the first pivot.)
      out.status = SolveStatus::Infeasible;
      return out;
    }
    int s = -1;
    for (int i = 0; i < n; ++i) {
      if (i == r) continue;
      if (t[r][partner_col(i)].sign() < 0 && !t[i][cr].is_zero()) {
        s = i;
        break;
      }
    }
    if (s < 0) {
      out.status = SolveStatus::Infeasible;
      return out;
    }
    int cs = partner_col(s);
    pivot(r, cs);
    pivot(s, cr);
    std::swap(t[r], t[s]);
    std::swap(basis[r], basis[s]);
  }
  out.status = SolveStatus::IterationCap;
  return out;
}

// ---------------------------------------------------------------------------

SolveOutcome lp_reformulation_solve(const LcpInstance& inst,
                                    const Certificate& cert) {
  require_instance(inst);
  VerifyReport vr = verify_certificate(inst.a, cert);
  if (!vr.valid) {
    throw PreconditionError("reformulation requires a verified certificate");
  }
  const int n = inst.a.rows();
  // Variables z1 then z2, all nonnegative.
  RatVec p_vec = vec_add(cert.r, vecmat(cert.s, inst.a));
  LpProblem p(2 * n);
  {
    RatVec c(2 * n);
    for (int i = 0; i < n; ++i) {
      c[i] = p_vec[i];
      c[n + i] = inst.q[i];
    }
    p.set_objective(std::move(c));
  }
  for (int k = 0; k < n; ++k) {
    RatVec row(2 * n, Rat(0));
    for (int i = 0; i < n; ++i) row[n + i] = -inst.a(i, k);
    p.add_ge(std::move(row), -p_vec[k]);
  }
  for (int i = 0; i < n; ++i) {
    RatVec row(2 * n, Rat(0));
    for (int j = 0; j < n; ++j) row[j] = inst.a(i, j);
    p.add_ge(std::move(row), -inst.q[i]);
  }

  LpOutcome o = solve_lp(p);
  SolveOutcome out;
  out.pivots = o.pivots;
  if (o.status == LpStatus::Infeasible) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  if (o.status == LpStatus::Unbounded) {
    throw InternalError("reformulation objective is bounded below by zero");
  }
  out.lp_objective = o.objective_value;
  RatVec z(o.solution.begin(), o.solution.begin() + n);
  ValidationReport rep = validate_solution(inst, z);
  if (!rep.ok || !o.objective_value.is_zero()) {
    throw InternalError(
        "reformulation optimum does not solve the complementarity problem");
  }
  out.status = SolveStatus::Solved;
  out.solution = rep.solution;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct SupportCandidate {
  std::optional<LcpSolution> solution;
  bool continuum = false;
};

SupportCandidate try_support(const LcpInstance& inst, std::uint64_t mask) {
  const int n = inst.a.rows();
  SupportCandidate cand;
  IndexSet alpha = IndexSet::from_mask(n, mask);
  const int k = alpha.size();

  RatVec z(n, Rat(0));
  if (k == 0) {
    ValidationReport rep = validate_solution(inst, z);
    if (rep.ok) cand.solution = rep.solution;
    return cand;
  }

  RatMatrix sub = principal_submatrix(inst.a, alpha);
  RatVec qa(k);
  for (int i = 0; i < k; ++i) qa[i] = -inst.q[alpha.members()[i]];

  auto zeta = solve_unique(sub, qa);
  if (zeta.has_value()) {
    for (int i = 0; i < k; ++i) z[alpha.members()[i]] = (*zeta)[i];
    ValidationReport rep = validate_solution(inst, z);
    if (rep.ok) cand.solution = rep.solution;
    return cand;
  }

  // Singular block: pick one vertex representative of the feasible piece and
  // flag the support as a possible continuum.
  LpProblem p(k);
  p.set_objective(RatVec(k, Rat(1)));
  for (int i = 0; i < k; ++i) p.add_eq(sub.row(i), qa[i]);
  IndexSet rest = alpha.complement();
  for (int i : rest.members()) {
    RatVec row(k);
    for (int j = 0; j < k; ++j) row[j] = inst.a(i, alpha.members()[j]);
    p.add_ge(std::move(row), -inst.q[i]);
  }
  LpOutcome o = solve_lp(p);
  if (o.status != LpStatus::Optimal) return cand;
  for (int i = 0; i < k; ++i) z[alpha.members()[i]] = o.solution[i];
  ValidationReport rep = validate_solution(inst, z);
  if (rep.ok) {
    cand.solution = rep.solution;
    cand.continuum = true;
  }
  return cand;
}

EnumerationResult assemble_enumeration(
    const LcpInstance& inst, const std::vector<std::uint64_t>& masks,
    std::vector<SupportCandidate> cands) {
  EnumerationResult res;
  for (size_t i = 0; i < masks.size(); ++i) {
    if (!cands[i].solution.has_value()) continue;
    const RatVec& z = cands[i].solution->z;
    bool seen = false;
    for (const LcpSolution& s : res.solutions) {
      if (s.z == z) {
        seen = true;
        break;
      }
    }
    if (!seen) res.solutions.push_back(*cands[i].solution);
    if (cands[i].continuum) {
      res.continuum_supports.push_back(
          IndexSet::from_mask(inst.a.rows(), masks[i]));
    }
  }
  return res;
}

}  // namespace

EnumerationResult enumerate_solutions(const LcpInstance& inst, int cap,
                                      int jobs) {
  require_instance(inst);
  const int n = inst.a.rows();
  if (n > cap) {
    throw SizeCapError("enumeration: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  auto masks = subset_masks(n, 0, n);
  std::vector<SupportCandidate> cands(masks.size());
  parallel_for(
      static_cast<long>(masks.size()),
      [&](long i) { cands[i] = try_support(inst, masks[i]); }, jobs);
  return assemble_enumeration(inst, masks, std::move(cands));
}

namespace ref {
EnumerationResult enumerate_solutions(const LcpInstance& inst, int cap) {
  require_instance(inst);
  const int n = inst.a.rows();
  if (n > cap) {
    throw SizeCapError("enumeration: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  auto masks = subset_masks(n, 0, n);
  std::vector<SupportCandidate> cands(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) {
    cands[i] = try_support(inst, masks[i]);
  }
  return assemble_enumeration(inst, masks, std::move(cands));
}
}  // namespace ref

// ---------------------------------------------------------------------------

BasisAudit basis_nondegeneracy_audit(const LcpInstance& inst, int cap) {
  require_instance(inst);
  const int n = inst.a.rows();
  if (n > cap) {
    throw SizeCapError("basis audit: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  BasisAudit audit;
  for (std::uint64_t mask : subset_masks(2 * n, n, n)) {
    ++audit.bases_checked;
    IndexSet cols = IndexSet::from_mask(2 * n, mask);
    RatMatrix b(n, n);
    for (int j = 0; j < n; ++j) {
      int id = cols.members()[j];
      for (int i = 0; i < n; ++i) {
        b(i, j) = id < n ? Rat(id == i ? 1 : 0) : -inst.a(i, id - n);
      }
    }
    auto x = solve_unique(b, inst.q);
    if (!x.has_value() || !vec_all_nonneg(*x)) continue;
    ++audit.feasible;
    bool degen = false;
    for (const Rat& v : *x) {
      if (v.is_zero()) degen = true;
    }
    bool complementary = true;
    for (int k_i = 0; k_i < n; ++k_i) {
      int have = (cols.contains(k_i) ? 1 : 0) + (cols.contains(n + k_i) ? 1 : 0);
      if (have != 1) complementary = false;
    }
    if (complementary) ++audit.complementary_feasible;
    if (degen) {
      ++audit.degenerate_feasible;
      if (complementary) ++audit.degenerate_complementary;
      audit.offenders.push_back(cols.members());
    }
  }
  audit.all_nondegenerate = audit.degenerate_feasible == 0;
  return audit;
}

UniquenessReport unique_nondegenerate_check(const LcpInstance& inst,
                                            const Certificate& cert) {
  require_instance(inst);
  UniquenessReport rep;
  VerifyReport vr = verify_certificate(inst.a, cert);
  if (!vr.valid) {
    rep.detail = "certificate does not verify";
    return rep;
  }
  if (!is_e0_matrix(inst.a)) {
    rep.detail = "matrix is not semimonotone";
    return rep;
  }
  BasisAudit audit = basis_nondegeneracy_audit(inst);
  if (!audit.all_nondegenerate) {
    rep.detail = "a feasible basis is degenerate";
    return rep;
  }
  EnumerationResult enumr = enumerate_solutions(inst);
  rep.solution_count = static_cast<int>(enumr.solutions.size());
  if (enumr.solutions.empty()) {
    rep.detail = "no solution exists";
    return rep;
  }
  if (enumr.solutions.size() != 1) {
    rep.status = UniquenessStatus::Violation;
    rep.detail = "expected a unique solution, found " +
                 std::to_string(enumr.solutions.size());
    return rep;
  }
  if (!enumr.continuum_supports.empty()) {
    rep.status = UniquenessStatus::Violation;
    rep.detail = "a solution continuum is possible";
    return rep;
  }
  if (enumr.solutions[0].degenerate) {
    rep.status = UniquenessStatus::Violation;
    rep.detail = "the unique solution is degenerate";
    return rep;
  }
  rep.status = UniquenessStatus::Pass;
  rep.detail = "unique nondegenerate solution";
  return rep;
}

}  // namespace lcplab
