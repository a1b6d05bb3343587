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

#include "lcplab/labgen.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "lcplab/error.hpp"
#include "lcplab/gameval.hpp"
#include "lcplab/lcpsolve.hpp"
#include "lcplab/parallel.hpp"

namespace lcplab {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Prng::next() { return splitmix(state_); }

long Prng::uniform(long lo, long hi) {
  if (lo > hi) throw InputError("uniform with empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

std::uint64_t Prng::derive(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  return splitmix(state);
}

namespace {

RatMatrix gen_general(Prng& rng, int n, long b) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform(-b, b));
  }
  return m;
}

RatMatrix gen_z(Prng& rng, int n, long b) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = i == j ? Rat(rng.uniform(-b, b)) : Rat(rng.uniform(-b, 0));
    }
  }
  return m;
}

RatMatrix gen_k(Prng& rng, int n, long b) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    Rat off_sum;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      m(i, j) = Rat(rng.uniform(-b, 0));
      off_sum += m(i, j).abs();
    }
    // Strict row dominance with a positive diagonal makes the matrix K.
    m(i, i) = off_sum + Rat(rng.uniform(1, b));
  }
  return m;
}

RatMatrix gen_p(Prng& rng, int n, long b) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    RatMatrix m = gen_general(rng, n, b);
    if (minor_profile(m, kSubsetCap, 1).is_p) return m;
  }
  return gen_k(rng, n, b);
}

RatMatrix gen_singular(Prng& rng, int n, long b) {
  if (n < 2) return RatMatrix{{Rat(0)}};
  RatMatrix m = gen_general(rng, n, b);
  int target = static_cast<int>(rng.uniform(0, n - 1));
  for (int j = 0; j < n; ++j) m(target, j) = 0;
  for (int i = 0; i < n; ++i) {
    if (i == target) continue;
    Rat c = Rat(rng.uniform(-2, 2));
    if (c.is_zero()) continue;
    for (int j = 0; j < n; ++j) m(target, j) += c * m(i, j);
  }
  return m;
}

RatMatrix gen_typed(Prng& rng, int n, long b) {
  // n distinct positive half-integers, sorted ascending.
  const long hi = std::max<long>(2 * n, 2 * b);
  std::vector<long> pool(hi);
  for (long i = 0; i < hi; ++i) pool[i] = i + 1;
  for (long i = hi - 1; i > 0; --i) {
    std::swap(pool[i], pool[rng.uniform(0, i)]);
  }
  std::vector<long> picks(pool.begin(), pool.begin() + n);
  std::sort(picks.begin(), picks.end());
  RatMatrix m(n, n);
  RatVec alphas(n);
  for (int i = 0; i < n; ++i) alphas[i] = Rat(picks[i], 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = alphas[std::min(i, j)];
  }
  return m;
}

Generated gen_hidden(Prng& rng, int n, long b) {
  RatMatrix x = gen_k(rng, n, b);
  RatMatrix y = gen_k(rng, n, b);
  // Half the draws degrade y toward a plain Z-matrix; kept only when some
  // (r, s) still completes the pair.
  if (rng.uniform(0, 1) == 1) {
    RatMatrix y2 = y;
    for (int i = 0; i < n; ++i) y2(i, i) -= Rat(rng.uniform(0, 2 * b));
    if (find_rs(x, y2).has_value()) y = y2;
  }
  auto rs = find_rs(x, y);
  if (!rs.has_value()) {
    throw InternalError("generator could not complete a K-pair certificate");
  }
  Generated g;
  g.a = y * inverse(x);
  g.cert = Certificate{x, y, rs->first, rs->second};
  VerifyReport rep = verify_certificate(g.a, *g.cert);
  if (!rep.valid) {
    throw InternalError("generator emitted a certificate that fails: " +
                        rep.violations.front());
  }
  return g;
}

}  // namespace

Generated generate(const GenSpec& spec) {
  if (spec.n < 1) throw ParameterError("generator order must be at least 1");
  if (spec.bound < 1) {
    throw ParameterError("generator bound must be at least 1");
  }
  Prng rng(Prng::derive(spec.seed, 0));
  Generated g;
  switch (spec.kind) {
    case GenKind::General:
      g.a = gen_general(rng, spec.n, spec.bound);
      break;
    case GenKind::Z:
      g.a = gen_z(rng, spec.n, spec.bound);
      break;
    case GenKind::K:
      g.a = gen_k(rng, spec.n, spec.bound);
      break;
    case GenKind::P:
      g.a = gen_p(rng, spec.n, spec.bound);
      break;
    case GenKind::HiddenZ:
      g = gen_hidden(rng, spec.n, spec.bound);
      break;
    case GenKind::TypeD: {
      g.a = gen_typed(rng, spec.n, spec.bound);
      auto cert = type_d_certificate(g.a);
      if (!cert.has_value()) {
        throw InternalError("type D draw failed to certify");
      }
      g.cert = std::move(cert);
      break;
    }
    case GenKind::Singular:
      g.a = gen_singular(rng, spec.n, spec.bound);
      break;
  }
  return g;
}

namespace {

struct TrialOutcome {
  std::optional<std::string> violation;
  std::optional<std::string> skip;
};

TrialOutcome skip(std::string reason) {
  TrialOutcome t;
  t.skip = std::move(reason);
  return t;
}

TrialOutcome fail(std::string detail) {
  TrialOutcome t;
  t.violation = std::move(detail);
  return t;
}

TrialOutcome pass() { return {}; }

constexpr long kBound = 9;

RatVec draw_q(Prng& rng, int n, long b) {
  RatVec q(n);
  for (int i = 0; i < n; ++i) q[i] = Rat(rng.uniform(-b, b));
  return q;
}

// Permutation invariance: transporting a certificate along P a P^T.
TrialOutcome trial_permutation(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform(0, i)]);
  }
  RatMatrix a2 = principal_permute(g.a, perm);
  RatVec r2(n), s2(n);
  for (int i = 0; i < n; ++i) {
    r2[i] = g.cert->r[perm[i]];
    s2[i] = g.cert->s[perm[i]];
  }
  Certificate c2{principal_permute(g.cert->x, perm),
                 principal_permute(g.cert->y, perm), r2, s2};
  VerifyReport rep = verify_certificate(a2, c2);
  if (!rep.valid) {
    return fail("transported certificate fails on " + a2.str() + ": " +
                rep.violations.front());
  }
  return pass();
}

TrialOutcome trial_p_iff_s(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  bool p = minor_profile(g.a, kSubsetCap, 1).is_p;
  bool s = is_s_matrix(g.a).is_s;
  if (p != s) {
    return fail("P and S disagree (" + std::string(p ? "P only" : "S only") +
                ") on " + g.a.str());
  }
  return pass();
}

TrialOutcome trial_e_iff_sbar(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::General, n, seed, kBound});
  bool e = is_e_matrix(g.a, kSubsetCap, 1);
  bool sbar = is_sbar_matrix(g.a, kSubsetCap, 1);
  if (e != sbar) {
    return fail("E and S-bar disagree on " + g.a.str());
  }
  return pass();
}

// Positive margin screen certifies P0, and every nonsingular-pivot Schur
// complement stays certified hidden Z with a nonnegative minor profile.
TrialOutcome trial_margin_p0(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  HiddenClassifyParams params;
  params.eps = 0;
  HiddenClassifyOutcome out = classify_hidden(g.a, params);
  if (out.verdict != HiddenVerdict::P0Certified) {
    return skip("margin program infeasible");
  }
  if (!minor_profile(g.a, kSubsetCap, 1).is_p0) {
    return fail("certified matrix is not P0: " + g.a.str());
  }
  for (std::uint64_t mask : subset_masks(n, 1, n - 1)) {
    IndexSet beta = IndexSet::from_mask(n, mask);
    if (det(principal_submatrix(g.a, beta)).is_zero()) continue;
    RatMatrix sc = schur_complement(g.a, beta);
    bool certified = find_certificate(sc).has_value();
    if (!certified) {
      // The Schur complement is the beta-complement block of the principal
      // pivot transform over beta, so certify the transform and reduce.
      RatMatrix pivoted = ppt(g.a, beta);
      if (auto pc = find_certificate(pivoted)) {
        certified =
            try_reduce_certificate(pivoted, *pc, beta.complement()).has_value();
      }
    }
    if (!certified) {
      return fail("Schur complement received no certificate on " + g.a.str());
    }
    if (!minor_profile(sc, kSubsetCap, 1).is_p0) {
      return fail("Schur complement is not P0 on " + g.a.str());
    }
  }
  return pass();
}

TrialOutcome trial_singular_value(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(2, std::max(2, n_max)));
  Generated g = generate({GenKind::Singular, n, seed, kBound});
  auto cert = find_certificate(g.a);
  if (!cert.has_value()) return skip("no certificate found");
  if (value_sign_queries(g.a).positive) {
    return fail("singular certified matrix has positive value: " + g.a.str());
  }
  return pass();
}

TrialOutcome trial_positive_value_p(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  if (!value_sign_queries(g.a).positive) return skip("value not positive");
  if (!minor_profile(g.a, kSubsetCap, 1).is_p) {
    return fail("positive-value certified matrix is not P: " + g.a.str());
  }
  return pass();
}

TrialOutcome trial_type_d(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::TypeD, n, seed, kBound});
  if (!g.cert.has_value()) {
    return fail("positive type D draw has no certificate: " + g.a.str());
  }
  VerifyReport rep = verify_certificate(g.a, *g.cert);
  if (!rep.valid) {
    return fail("type D certificate fails: " + rep.violations.front());
  }
  return pass();
}

TrialOutcome trial_almost_p_inverse(Prng& rng, int n_max,
                                    std::uint64_t /*seed*/) {
  if (n_max < 2) return skip("suite needs order at least 2");
  int n = static_cast<int>(rng.uniform(2, std::min(3, n_max)));
  // Bias toward the almost P region: small positive diagonal, strong
  // nonpositive off-diagonal.
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = i == j ? Rat(rng.uniform(1, 3)) : Rat(rng.uniform(-kBound, -1));
    }
  }
  if (!minor_profile(m, kSubsetCap, 1).is_almost_p) return skip("not almost P");
  if (!find_certificate(m).has_value()) return skip("no certificate found");
  if (n_category(inverse(m), kSubsetCap, 1) != NCategory::Second) {
    return fail("inverse is not second-category N: " + m.str());
  }
  return pass();
}

TrialOutcome trial_unique_solution(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, std::min(4, n_max)));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  LcpInstance inst{g.a, draw_q(rng, n, kBound)};
  UniquenessReport rep = unique_nondegenerate_check(inst, *g.cert);
  switch (rep.status) {
    case UniquenessStatus::Pass:
      return pass();
    case UniquenessStatus::Skipped:
      return skip(rep.detail);
    case UniquenessStatus::Violation:
      return fail(rep.detail + " on " + g.a.str() + ", q = " +
                  vec_str(inst.q));
  }
  return pass();
}

TrialOutcome trial_submatrix_cert(Prng& rng, int n_max, std::uint64_t seed) {
  if (n_max < 2) return skip("suite needs order at least 2");
  int n = static_cast<int>(rng.uniform(2, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t mask =
      static_cast<std::uint64_t>(rng.uniform(1, static_cast<long>(full - 1)));
  IndexSet alpha = IndexSet::from_mask(n, mask);
  RatMatrix w = mixed_w(g.cert->x, g.cert->y, alpha);
  RatMatrix wbar = mixed_wbar(g.cert->x, g.cert->y, alpha);
  if (!is_e_matrix(w, kSubsetCap, 1) || !is_e_matrix(wbar, kSubsetCap, 1)) {
    return skip("mixed matrices are not both E");
  }
  try {
    submatrix_certificate(g.a, *g.cert, alpha);
    submatrix_certificate(g.a, *g.cert, alpha.complement());
  } catch (const Error& e) {
    return fail(std::string("submatrix reduction failed: ") + e.what() +
                " on " + g.a.str());
  }
  return pass();
}

TrialOutcome trial_completely_hidden(Prng& rng, int n_max,
                                     std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  if (!is_e_matrix(g.cert->x, kSubsetCap, 1) ||
      !is_e_matrix(g.cert->y, kSubsetCap, 1)) {
    return skip("certificate factors are not both E");
  }
  CompletelyHiddenReport rep = completely_hidden_check(g.a, *g.cert);
  if (!rep.completely) {
    return fail("a principal submatrix received no certificate on " +
                g.a.str());
  }
  return pass();
}

TrialOutcome trial_lp_reformulation(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, n_max));
  Generated g = generate({GenKind::HiddenZ, n, seed, kBound});
  LcpInstance inst{g.a, draw_q(rng, n, kBound)};
  SolveOutcome out;
  try {
    out = lp_reformulation_solve(inst, *g.cert);
  } catch (const Error& e) {
    return fail(std::string("reformulation error: ") + e.what() + " on " +
                g.a.str() + ", q = " + vec_str(inst.q));
  }
  EnumerationResult all = enumerate_solutions(inst, kEnumerateCap, 1);
  if (out.status == SolveStatus::Infeasible) {
    if (!all.solutions.empty()) {
      return fail("reformulation reported infeasible but solutions exist on " +
                  g.a.str() + ", q = " + vec_str(inst.q));
    }
    return pass();
  }
  if (!out.lp_objective.is_zero()) {
    return fail("reformulation optimum is nonzero on " + g.a.str());
  }
  for (const LcpSolution& s : all.solutions) {
    if (s.z == out.solution->z) return pass();
  }
  return fail("reformulation solution missing from enumeration on " +
              g.a.str() + ", q = " + vec_str(inst.q));
}

TrialOutcome trial_ppt_sign(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, std::min(3, n_max)));
  Generated g = generate({GenKind::General, n, seed, kBound});
  std::uint64_t mask = static_cast<std::uint64_t>(
      rng.uniform(0, static_cast<long>((std::uint64_t{1} << n) - 1)));
  IndexSet alpha = IndexSet::from_mask(n, mask);
  if (!alpha.is_empty() &&
      det(principal_submatrix(g.a, alpha)).is_zero()) {
    return skip("singular pivot block");
  }
  RatMatrix b = ppt(g.a, alpha);
  if (game_value(g.a).sign != game_value(b).sign) {
    return fail("value sign changed under principal pivoting on " + g.a.str() +
                " with alpha mask " + std::to_string(mask));
  }
  return pass();
}

TrialOutcome trial_cone_homogeneous(Prng& rng, int n_max, std::uint64_t seed) {
  int n = static_cast<int>(rng.uniform(1, std::min(4, n_max)));
  Generated g = generate({GenKind::General, n, seed, kBound});
  LcpInstance inst{g.a, RatVec(n, Rat(0))};
  EnumerationResult all = enumerate_solutions(inst, kEnumerateCap, 1);
  const Rat lambdas[] = {Rat(0), Rat(1, 2), Rat(2), Rat(7)};
  for (const LcpSolution& s : all.solutions) {
    for (const Rat& lam : lambdas) {
      if (!validate_solution(inst, vec_scale(lam, s.z)).ok) {
        return fail("scaled homogeneous solution fails on " + g.a.str());
      }
    }
  }
  return pass();
}

using TrialFn = TrialOutcome (*)(Prng&, int, std::uint64_t);

const std::vector<std::pair<std::string, TrialFn>>& suite_table() {
  static const std::vector<std::pair<std::string, TrialFn>> table = {
      {"T2.2", trial_p_iff_s},
      {"T2.5", trial_e_iff_sbar},
      {"T3.1", trial_permutation},
      {"T3.2", trial_margin_p0},
      {"T3.3", trial_singular_value},
      {"T3.4", trial_positive_value_p},
      {"T3.5", trial_type_d},
      {"T3.6", trial_almost_p_inverse},
      {"T3.7", trial_unique_solution},
      {"T3.8", trial_submatrix_cert},
      {"T3.9", trial_completely_hidden},
      {"T3.10", trial_lp_reformulation},
      {"PPT-sign", trial_ppt_sign},
      {"cone-homogeneous", trial_cone_homogeneous},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : suite_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

SuiteReport run_suite(const std::string& suite_id, long trials, int n_max,
                      std::uint64_t seed, int jobs) {
  TrialFn fn = nullptr;
  for (const auto& [id, f] : suite_table()) {
    if (id == suite_id) fn = f;
  }
  if (fn == nullptr) {
    std::string known;
    for (const auto& id : registered_suites()) {
      if (!known.empty()) known += ", ";
      known += id;
    }
    throw InputError("unknown suite \"" + suite_id + "\"; registered: " +
                     known);
  }
  if (trials < 0) throw ParameterError("trial count must be nonnegative");
  if (n_max < 1) throw ParameterError("n_max must be at least 1");

  SuiteReport rep;
  rep.suite_id = suite_id;
  rep.trials = trials;
  rep.n_max = n_max;
  rep.seed = seed;

  std::vector<TrialOutcome> outcomes(trials);
  std::vector<std::uint64_t> trial_seeds(trials);
  for (long i = 0; i < trials; ++i) {
    trial_seeds[i] = Prng::derive(seed, static_cast<std::uint64_t>(i));
  }
  parallel_for(
      trials,
      [&](long i) {
        Prng rng(trial_seeds[i]);
        try {
          outcomes[i] = fn(rng, n_max, trial_seeds[i]);
        } catch (const Error& e) {
          outcomes[i] = fail(std::string("unexpected error: ") + e.what());
        }
      },
      jobs);

  for (long i = 0; i < trials; ++i) {
    if (outcomes[i].violation.has_value()) {
      rep.violations.push_back({trial_seeds[i], *outcomes[i].violation});
    } else if (outcomes[i].skip.has_value()) {
      ++rep.skipped;
      ++rep.skip_reasons[*outcomes[i].skip];
    }
  }
  return rep;
}

}  // namespace lcplab
