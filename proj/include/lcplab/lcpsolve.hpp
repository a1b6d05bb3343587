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

#ifndef LCPLAB_LCPSOLVE_HPP_
#define LCPLAB_LCPSOLVE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lcplab/hiddenz.hpp"
#include "lcplab/ratmat.hpp"

namespace lcplab {

// Linear complementarity problem: find z >= 0 with w = q + a z >= 0 and
// z^T w = 0.
struct LcpInstance {
  RatMatrix a;
  RatVec q;
};

inline constexpr int kEnumerateCap = 10;
inline constexpr int kAuditCap = 6;

struct LcpSolution {
  RatVec z;
  RatVec w;
  IndexSet support;        // indices with z_i > 0
  bool degenerate = false; // some index has z_i == 0 == w_i
};

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> violations;
  std::optional<LcpSolution> solution;  // populated when ok
};

// Exact check of nonnegativity and complementarity for a candidate z.
ValidationReport validate_solution(const LcpInstance& inst, const RatVec& z);

enum class SolveStatus { Solved, RayTermination, Infeasible, IterationCap };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<LcpSolution> solution;
  long pivots = 0;
  Rat lp_objective;  // reformulation only: optimal objective value
};

// Lemke's complementary pivoting with the all-ones covering vector and
// lexicographic ratio test. max_iter = 0 uses the cap 10 * 2^n.
SolveOutcome lemke_solve(const LcpInstance& inst, long max_iter = 0);

// Least-index principal pivoting on complementary bases. Complete on the
// P-matrix family; gives up (Infeasible) when no admissible pivot exists.
SolveOutcome crisscross_solve(const LcpInstance& inst, long max_iter = 0);

// Solves the LCP through the exact LP
//   minimize (r + a^T s)^T z1 + q^T z2
//   subject to a^T s + r - a^T z2 >= 0, a z1 + q >= 0, z1 >= 0, z2 >= 0,
// whose optimum is 0 with z1 solving the LCP whenever a is hidden Z with
// certificate (x, y, r, s). Requires a verified certificate.
SolveOutcome lp_reformulation_solve(const LcpInstance& inst,
                                    const Certificate& cert);

// All solutions by support enumeration. Nonsingular supports contribute
// their unique candidate; singular consistent supports contribute one vertex
// representative and flag a possible solution continuum.
struct EnumerationResult {
  std::vector<LcpSolution> solutions;        // deduplicated, sweep order
  std::vector<IndexSet> continuum_supports;  // supports with singular blocks
};
EnumerationResult enumerate_solutions(const LcpInstance& inst,
                                      int cap = kEnumerateCap, int jobs = 0);

// Feasible-basis audit over all n-subsets of the columns of (I | -a):
// counts feasible and degenerate bases, overall and complementary-only.
struct BasisAudit {
  long bases_checked = 0;
  long feasible = 0;
  long degenerate_feasible = 0;
  long complementary_feasible = 0;
  long degenerate_complementary = 0;
  bool all_nondegenerate = false;             // no feasible basis degenerate
  std::vector<std::vector<int>> offenders;    // degenerate feasible bases
};
BasisAudit basis_nondegeneracy_audit(const LcpInstance& inst,
                                     int cap = kAuditCap);

// Uniqueness harness: under a verified certificate, semimonotone a, and a
// fully nondegenerate q, the instance must have exactly one solution and it
// must be nondegenerate. Hypothesis failures skip rather than fail.
enum class UniquenessStatus { Pass, Violation, Skipped };
struct UniquenessReport {
  UniquenessStatus status = UniquenessStatus::Skipped;
  std::string detail;      // skip reason or violation description
  int solution_count = 0;
};
UniquenessReport unique_nondegenerate_check(const LcpInstance& inst,
                                            const Certificate& cert);

namespace ref {
EnumerationResult enumerate_solutions(const LcpInstance& inst,
                                      int cap = kEnumerateCap);
}  // namespace ref

}  // namespace lcplab

#endif  // LCPLAB_LCPSOLVE_HPP_
