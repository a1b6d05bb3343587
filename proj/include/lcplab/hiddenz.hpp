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

#ifndef LCPLAB_HIDDENZ_HPP_
#define LCPLAB_HIDDENZ_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcplab/matclass.hpp"
#include "lcplab/ratmat.hpp"

namespace lcplab {

// Hidden Z-matrix certificate: Z-matrices x, y with a x = y and nonnegative
// vectors r, s whose combination r^T x + s^T y is componentwise positive.
struct Certificate {
  RatMatrix x, y;
  RatVec r, s;
};

// The combination vector r^T x + s^T y.
RatVec certificate_combo(const Certificate& c);

struct VerifyReport {
  bool valid = false;
  std::vector<std::string> violations;  // empty iff valid
  RatVec combo;                         // r^T x + s^T y
};

// Checks every certificate condition against a and reports each violation.
VerifyReport verify_certificate(const RatMatrix& a, const Certificate& c);

using RsSeed = std::pair<RatVec, RatVec>;

// The fixed (r, s) seeds tried by certificate search: (e, 0), (0, e), (e, e).
std::vector<RsSeed> default_rs_seeds(int n);

// For each seed (r, s) solves the exact LP over entries of x:
//   x_ij <= 0 and (a x)_ij <= 0 for i != j,  (r^T x + s^T (a x))_j >= 1,
// returning the first verified certificate. The search is sound (returned
// certificates always verify) but not complete: a miss on every seed means
// "not found", not "not hidden Z".
std::optional<Certificate> find_certificate(const RatMatrix& a);
std::optional<Certificate> find_certificate(const RatMatrix& a,
                                            const std::vector<RsSeed>& seeds);

// Completes a fixed Z-pair (x, y) to a certificate when possible: the set of
// admissible (r, s) is a polyhedron, so this search is exact.
std::optional<std::pair<RatVec, RatVec>> find_rs(const RatMatrix& x,
                                                 const RatMatrix& y);

// Certificate search with no fixed (r, s): one bounded LP per column picks a
// Z-pair (x, a x) whose diagonals are at least 1 (entries boxed at the matrix
// order, keeping each LP bounded and the optimum deterministic), then the
// exact (r, s) completion runs on the assembled pair. Sound, and complementary
// to the seeded search: the diagonal normalization reaches matrices the fixed
// seeds miss but excludes pairs whose y needs a nonpositive diagonal, so a
// miss again means "not found", not "not hidden Z".
std::optional<Certificate> find_certificate_pair_search(const RatMatrix& a);

// Least index set (size-then-lex order) whose mixed matrix w(alpha), built
// by taking rows of x on alpha and rows of y off alpha, is a K-matrix.
// Requires x, y square Z-matrices of equal order.
std::optional<IndexSet> kappa_index_set(const RatMatrix& x, const RatMatrix& y,
                                        int cap = kSubsetCap);

// Row-mixed matrices: w takes rows of x on alpha and rows of y elsewhere;
// wbar swaps the roles.
RatMatrix mixed_w(const RatMatrix& x, const RatMatrix& y,
                  const IndexSet& alpha);
RatMatrix mixed_wbar(const RatMatrix& x, const RatMatrix& y,
                     const IndexSet& alpha);

// Certificate for the principal submatrix a_aa, built from Schur complements
// of the mixed matrices over the complement of alpha. Gated on both mixed
// matrices being E-matrices; throws PreconditionError when the gate fails.
Certificate submatrix_certificate(const RatMatrix& a, const Certificate& c,
                                  const IndexSet& alpha);

// Gateless best-effort variant of the same reduction: returns the reduced
// certificate when the construction happens to go through and verify,
// nullopt otherwise. Sound but not complete.
std::optional<Certificate> try_reduce_certificate(const RatMatrix& a,
                                                  const Certificate& c,
                                                  const IndexSet& alpha);

// Checks whether every nonempty principal submatrix of a receives a
// certificate, first through the Schur construction and then by direct
// search. gate_e records whether x and y are both E-matrices (the
// hypothesis under which the construction is guaranteed).
struct CompletelyHiddenReport {
  bool completely = false;
  bool gate_e = false;
  std::vector<IndexSet> failures;  // index sets with no certificate found
};
CompletelyHiddenReport completely_hidden_check(const RatMatrix& a,
                                               const Certificate& c,
                                               int cap = kSubsetCap);

// Certificate (a^-1, I, 0, e) for positive type D matrices; nullopt when a
// is not positive type D.
std::optional<Certificate> type_d_certificate(const RatMatrix& a);

// Largest admissible diagonal perturbation derived from the certificate:
// min_j combo_j / max_j |s^T x|_j, or nullopt (no bound) when s^T x = 0.
// Every eps in (0, bound) keeps (x, y + eps x, r, s) a certificate for
// a + eps I.
std::optional<Rat> epsilon_bound(const Certificate& c);

struct PerturbationResult {
  RatMatrix a_eps;       // a + eps I
  Certificate cert_eps;  // (x, y + eps x, r, s), verified
  std::optional<Rat> bound;
};
PerturbationResult perturb(const RatMatrix& a, const Certificate& c,
                           const Rat& eps);

// Linear-programming P/P0 screen for certified hidden Z-matrices:
//   minimize s  subject to  a x >= s e, x >= delta e, s >= eps.
// Step I (eps > 0) feasible certifies P; otherwise Step II (eps = 0)
// feasible certifies P0; both infeasible is inconclusive.
enum class HiddenVerdict { PCertified, P0Certified, Inconclusive };
struct HiddenClassifyParams {
  Rat eps = Rat(1);
  Rat delta = Rat(1);
};
struct HiddenClassifyOutcome {
  HiddenVerdict verdict = HiddenVerdict::Inconclusive;
  RatVec x;  // witness with x >= delta e when certified
  Rat s;     // the achieved margin
  int step = 0;  // 1 or 2 when certified
};
HiddenClassifyOutcome classify_hidden(const RatMatrix& a,
                                      const HiddenClassifyParams& params = {});

}  // namespace lcplab

#endif  // LCPLAB_HIDDENZ_HPP_
