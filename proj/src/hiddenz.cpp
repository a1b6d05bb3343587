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

#include "lcplab/hiddenz.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lcplab/error.hpp"
#include "lcplab/lpcore.hpp"

namespace lcplab {

namespace {

void require_cert_shape(const RatMatrix& a, const Certificate& c) {
  const int n = a.rows();
  if (!a.is_square() || n == 0) {
    throw DimensionError("certificate check requires a square matrix");
  }
  if (c.x.rows() != n || c.x.cols() != n || c.y.rows() != n ||
      c.y.cols() != n || static_cast<int>(c.r.size()) != n ||
      static_cast<int>(c.s.size()) != n) {
    throw DimensionError("certificate dimensions do not match the matrix");
  }
}

std::string ij(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Internal validity of the certificate tuple alone (no a x = y check):
// x, y are Z, r and s are nonnegative, and the combination is positive.
bool tuple_valid(const Certificate& c) {
  const int n = c.x.rows();
  if (!c.x.is_square() || !c.y.is_square() || c.y.rows() != n ||
      static_cast<int>(c.r.size()) != n || static_cast<int>(c.s.size()) != n) {
    return false;
  }
  if (!is_z_matrix(c.x) || !is_z_matrix(c.y)) return false;
  if (!vec_all_nonneg(c.r) || !vec_all_nonneg(c.s)) return false;
  return vec_all_pos(certificate_combo(c));
}

}  // namespace

RatVec certificate_combo(const Certificate& c) {
  return vec_add(vecmat(c.r, c.x), vecmat(c.s, c.y));
}

VerifyReport verify_certificate(const RatMatrix& a, const Certificate& c) {
  require_cert_shape(a, c);
  const int n = a.rows();
  VerifyReport rep;

  RatMatrix ax = a * c.x;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (ax(i, j) != c.y(i, j)) {
        rep.violations.push_back("(a x)" + ij(i, j) + " = " + ax(i, j).str() +
                                 " differs from y" + ij(i, j) + " = " +
                                 c.y(i, j).str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c.x(i, j).sign() > 0) {
        rep.violations.push_back("x" + ij(i, j) + " = " + c.x(i, j).str() +
                                 " is positive off the diagonal");
      }
      if (c.y(i, j).sign() > 0) {
        rep.violations.push_back("y" + ij(i, j) + " = " + c.y(i, j).str() +
                                 " is positive off the diagonal");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (c.r[i].sign() < 0) {
      rep.violations.push_back("r[" + std::to_string(i + 1) + "] = " +
                               c.r[i].str() + " is negative");
    }
    if (c.s[i].sign() < 0) {
      rep.violations.push_back("s[" + std::to_string(i + 1) + "] = " +
                               c.s[i].str() + " is negative");
    }
  }
  rep.combo = certificate_combo(c);
  for (int j = 0; j < n; ++j) {
    if (rep.combo[j].sign() <= 0) {
      rep.violations.push_back("(r^T x + s^T y)[" + std::to_string(j + 1) +
                               "] = " + rep.combo[j].str() +
                               " is not positive");
    }
  }
  rep.valid = rep.violations.empty();
  return rep;
}

std::vector<RsSeed> default_rs_seeds(int n) {
  RatVec e(n, Rat(1));
  RatVec zero(n, Rat(0));
  return {{e, zero}, {zero, e}, {e, e}};
}

std::optional<Certificate> find_certificate(const RatMatrix& a) {
  return find_certificate(a, default_rs_seeds(a.rows()));
}

std::optional<Certificate> find_certificate(const RatMatrix& a,
                                            const std::vector<RsSeed>& seeds) {
  if (!a.is_square() || a.rows() == 0) {
    throw DimensionError("certificate search requires a square matrix");
  }
  const int n = a.rows();
  for (const auto& [r, s] : seeds) {
    if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n) {
      throw DimensionError("seed vectors must have the matrix order");
    }
    if (!vec_all_nonneg(r) || !vec_all_nonneg(s)) {
      throw ParameterError("seed vectors must be nonnegative");
    }
    // Variables: the n^2 entries of x, row major, all free.
    LpProblem p(n * n);
    for (int v = 0; v < n * n; ++v) p.set_free(v);
    auto var = [n](int i, int j) { return i * n + j; };

    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        RatVec row(n * n, Rat(0));
        row[var(i, j)] = 1;
        p.add_le(std::move(row), Rat(0));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        RatVec row(n * n, Rat(0));
        for (int k = 0; k < n; ++k) row[var(k, j)] = a(i, k);
        p.add_le(std::move(row), Rat(0));
      }
    }
    // (r^T x + s^T a x)_j >= 1; the coefficient of x_kj is (r + a^T s)_k.
    RatVec w = vec_add(r, vecmat(s, a));
    for (int j = 0; j < n; ++j) {
      RatVec row(n * n, Rat(0));
      for (int k = 0; k < n; ++k) row[var(k, j)] = w[k];
      p.add_ge(std::move(row), Rat(1));
    }

    LpOutcome o = solve_lp(p);
    if (o.status != LpStatus::Optimal) continue;
    RatMatrix x(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) x(i, j) = o.solution[var(i, j)];
    }
    Certificate c{x, a * x, r, s};
    VerifyReport rep = verify_certificate(a, c);
    if (!rep.valid) {
      throw InternalError("certificate search produced an invalid certificate");
    }
    return c;
  }
  return std::nullopt;
}

std::optional<std::pair<RatVec, RatVec>> find_rs(const RatMatrix& x,
                                                 const RatMatrix& y) {
  if (!x.is_square() || x.rows() == 0 || x.rows() != y.rows() ||
      !y.is_square()) {
    throw DimensionError("find_rs requires square matrices of equal order");
  }
  const int n = x.rows();
  // Variables r then s, nonnegative. Feasibility of the normalized system
  // (r^T x + s^T y)_j >= 1 is exact: scaling recovers every admissible pair.
  LpProblem p(2 * n);
  RatVec ones(2 * n, Rat(1));
  p.set_objective(ones);
  for (int j = 0; j < n; ++j) {
    RatVec row(2 * n, Rat(0));
    for (int i = 0; i < n; ++i) {
      row[i] = x(i, j);
      row[n + i] = y(i, j);
    }
    p.add_ge(std::move(row), Rat(1));
  }
  LpOutcome o = solve_lp(p);
  if (o.status != LpStatus::Optimal) return std::nullopt;
  RatVec r(o.solution.begin(), o.solution.begin() + n);
  RatVec s(o.solution.begin() + n, o.solution.end());
  return std::make_pair(std::move(r), std::move(s));
}

std::optional<Certificate> find_certificate_pair_search(const RatMatrix& a) {
  if (!a.is_square() || a.rows() == 0) {
    throw DimensionError("certificate search requires a square matrix");
  }
  const int n = a.rows();
  const Rat box(n);
  // Column j of x only meets column j of a x, so the pair splits into n
  // independent LPs over u = x_{.j}. Maximizing sum(u) + sum(a u) pushes the
  // off-diagonal slack toward zero and makes the optimum a well-determined
  // vertex; the box keeps it finite.
  RatVec weight(n);
  for (int k = 0; k < n; ++k) {
    weight[k] = Rat(1);
    for (int i = 0; i < n; ++i) weight[k] += a(i, k);
  }
  RatMatrix x(n, n);
  for (int j = 0; j < n; ++j) {
    LpProblem p(n);
    for (int i = 0; i < n; ++i) {
      p.set_lower(i, i == j ? Rat(1) : -box);
      p.set_objective_coeff(i, -weight[i]);
      RatVec cap(n, Rat(0));
      cap[i] = 1;
      p.add_le(std::move(cap), i == j ? box : Rat(0));
    }
    for (int i = 0; i < n; ++i) {
      RatVec row = a.row(i);
      if (i == j) {
        p.add_ge(std::move(row), Rat(1));
      } else {
        p.add_le(std::move(row), Rat(0));
      }
    }
    LpOutcome o = solve_lp(p);
    if (o.status != LpStatus::Optimal) return std::nullopt;
    for (int i = 0; i < n; ++i) x(i, j) = o.solution[i];
  }
  RatMatrix y = a * x;
  auto rs = find_rs(x, y);
  if (!rs.has_value()) return std::nullopt;
  Certificate c{std::move(x), std::move(y), std::move(rs->first),
                std::move(rs->second)};
  VerifyReport rep = verify_certificate(a, c);
  if (!rep.valid) {
    throw InternalError("certificate search produced an invalid certificate");
  }
  return c;
}

RatMatrix mixed_w(const RatMatrix& x, const RatMatrix& y,
                  const IndexSet& alpha) {
  if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) {
    throw DimensionError("mixed matrix requires square matrices of equal order");
  }
  if (alpha.universe() != x.rows()) {
    throw DimensionError("mixed matrix index set universe mismatch");
  }
  const int n = x.rows();
  RatMatrix w(n, n);
  for (int i = 0; i < n; ++i) {
    const RatMatrix& src = alpha.contains(i) ? x : y;
    for (int j = 0; j < n; ++j) w(i, j) = src(i, j);
  }
  return w;
}

RatMatrix mixed_wbar(const RatMatrix& x, const RatMatrix& y,
                     const IndexSet& alpha) {
  return mixed_w(y, x, alpha);
}

std::optional<IndexSet> kappa_index_set(const RatMatrix& x, const RatMatrix& y,
                                        int cap) {
  if (!x.is_square() || x.rows() == 0 || x.rows() != y.rows() ||
      !y.is_square()) {
    throw DimensionError("kappa search requires square matrices of equal order");
  }
  if (!is_z_matrix(x) || !is_z_matrix(y)) {
    throw InputError("kappa search requires Z-matrices");
  }
  const int n = x.rows();
  if (n > cap) {
    throw SizeCapError("kappa search: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  for (std::uint64_t mask : subset_masks(n, 0, n)) {
    IndexSet alpha = IndexSet::from_mask(n, mask);
    RatMatrix w = mixed_w(x, y, alpha);
    if (is_z_matrix(w) && minor_profile(w, cap).is_p) return alpha;
  }
  return std::nullopt;
}

Certificate submatrix_certificate(const RatMatrix& a, const Certificate& c,
                                  const IndexSet& alpha) {
  require_cert_shape(a, c);
  if (alpha.universe() != a.rows()) {
    throw DimensionError("submatrix certificate index set universe mismatch");
  }
  if (alpha.is_empty()) {
    throw DimensionError("submatrix certificate needs a nonempty index set");
  }
  if (alpha.is_full()) return c;

  RatMatrix w = mixed_w(c.x, c.y, alpha);
  RatMatrix wbar = mixed_wbar(c.x, c.y, alpha);
  if (!is_e_matrix(w)) {
    throw PreconditionError("mixed matrix w is not an E-matrix");
  }
  if (!is_e_matrix(wbar)) {
    throw PreconditionError("mixed matrix wbar is not an E-matrix");
  }

  IndexSet rest = alpha.complement();
  // Both mixed matrices agree with x on the rows off alpha, so both Schur
  // complements pivot on x_rr.
  RatMatrix x_red = schur_complement(c.x, rest);
  RatMatrix y_red = schur_complement(wbar, rest);

  auto rs = find_rs(x_red, y_red);
  if (!rs.has_value()) {
    throw InternalError("no (r, s) completes the reduced Z-pair");
  }
  Certificate reduced{x_red, y_red, rs->first, rs->second};
  VerifyReport rep = verify_certificate(principal_submatrix(a, alpha), reduced);
  if (!rep.valid) {
    throw InternalError("reduced certificate failed verification");
  }
  return reduced;
}

std::optional<Certificate> try_reduce_certificate(const RatMatrix& a,
                                                  const Certificate& c,
                                                  const IndexSet& alpha) {
  require_cert_shape(a, c);
  if (alpha.universe() != a.rows() || alpha.is_empty()) {
    throw DimensionError("certificate reduction needs a nonempty index set");
  }
  if (alpha.is_full()) {
    VerifyReport rep = verify_certificate(a, c);
    if (rep.valid) return c;
    return std::nullopt;
  }
  IndexSet rest = alpha.complement();
  if (det(principal_submatrix(c.x, rest)).is_zero()) return std::nullopt;
  RatMatrix x_red = schur_complement(c.x, rest);
  RatMatrix y_red = schur_complement(mixed_wbar(c.x, c.y, alpha), rest);
  if (!is_z_matrix(x_red) || !is_z_matrix(y_red)) return std::nullopt;
  auto rs = find_rs(x_red, y_red);
  if (!rs.has_value()) return std::nullopt;
  Certificate cand{x_red, y_red, rs->first, rs->second};
  if (!verify_certificate(principal_submatrix(a, alpha), cand).valid) {
    return std::nullopt;
  }
  return cand;
}

CompletelyHiddenReport completely_hidden_check(const RatMatrix& a,
                                               const Certificate& c, int cap) {
  require_cert_shape(a, c);
  VerifyReport base = verify_certificate(a, c);
  if (!base.valid) {
    throw PreconditionError("certificate does not verify against the matrix");
  }
  const int n = a.rows();
  if (n > cap) {
    throw SizeCapError("completely hidden check: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
  }
  CompletelyHiddenReport rep;
  rep.gate_e = is_e_matrix(c.x, cap) && is_e_matrix(c.y, cap);
  for (std::uint64_t mask : subset_masks(n, 1, n)) {
    IndexSet alpha = IndexSet::from_mask(n, mask);
    if (alpha.is_full()) continue;
    // Schur reduction first, without insisting on the E gate; fall back to
    // direct search on the submatrix.
    bool ok = try_reduce_certificate(a, c, alpha).has_value() ||
              find_certificate(principal_submatrix(a, alpha)).has_value();
    if (!ok) rep.failures.push_back(alpha);
  }
  rep.completely = rep.failures.empty();
  return rep;
}

std::optional<Certificate> type_d_certificate(const RatMatrix& a) {
  TypeDProfile t = is_type_d(a);
  if (!t.is_type_d || !t.positive) return std::nullopt;
  const int n = a.rows();
  Certificate c{inverse(a), RatMatrix::identity(n), RatVec(n, Rat(0)),
                RatVec(n, Rat(1))};
  VerifyReport rep = verify_certificate(a, c);
  if (!rep.valid) {
    throw InternalError("type D certificate failed verification");
  }
  return c;
}

std::optional<Rat> epsilon_bound(const Certificate& c) {
  if (!tuple_valid(c)) {
    throw PreconditionError("epsilon bound requires a valid certificate tuple");
  }
  RatVec combo = certificate_combo(c);
  RatVec sx = vecmat(c.s, c.x);
  Rat max_abs;
  for (const Rat& v : sx) max_abs = std::max(max_abs, v.abs());
  if (max_abs.is_zero()) return std::nullopt;
  Rat min_combo = combo[0];
  for (const Rat& v : combo) min_combo = std::min(min_combo, v);
  return min_combo / max_abs;
}

PerturbationResult perturb(const RatMatrix& a, const Certificate& c,
                           const Rat& eps) {
  VerifyReport base = verify_certificate(a, c);
  if (!base.valid) {
    throw PreconditionError("perturbation requires a verified certificate");
  }
  if (eps.sign() <= 0) {
    throw ParameterError("perturbation eps must be positive");
  }
  std::optional<Rat> bound = epsilon_bound(c);
  if (bound.has_value() && eps >= *bound) {
    throw ParameterError("perturbation eps = " + eps.str() +
                         " is not below the bound " + bound->str());
  }
  PerturbationResult res;
  res.bound = bound;
  res.a_eps = a + eps * RatMatrix::identity(a.rows());
  res.cert_eps = Certificate{c.x, c.y + eps * c.x, c.r, c.s};
  VerifyReport rep = verify_certificate(res.a_eps, res.cert_eps);
  if (!rep.valid) {
    throw InternalError("perturbed certificate failed verification");
  }
  return res;
}

HiddenClassifyOutcome classify_hidden(const RatMatrix& a,
                                      const HiddenClassifyParams& params) {
  if (!a.is_square() || a.rows() == 0) {
    throw DimensionError("classification requires a square matrix");
  }
  if (params.delta.sign() <= 0) {
    throw ParameterError("delta must be positive");
  }
  if (params.eps.sign() < 0) {
    throw ParameterError("eps must be nonnegative");
  }
  const int n = a.rows();

  auto run_step = [&](const Rat& s_lower) {
    LpProblem p(n + 1);
    for (int i = 0; i < n; ++i) p.set_lower(i, params.delta);
    p.set_lower(n, s_lower);
    p.set_objective_coeff(n, Rat(1));
    for (int i = 0; i < n; ++i) {
      RatVec row = a.row(i);
      row.push_back(Rat(-1));
      p.add_ge(std::move(row), Rat(0));
    }
    return solve_lp(p);
  };

  HiddenClassifyOutcome out;
  if (params.eps.sign() > 0) {
    LpOutcome o = run_step(params.eps);
    if (o.status == LpStatus::Optimal) {
      out.verdict = HiddenVerdict::PCertified;
      out.x.assign(o.solution.begin(), o.solution.begin() + n);
      out.s = o.solution[n];
      out.step = 1;
      return out;
    }
  }
  LpOutcome o = run_step(Rat(0));
  if (o.status == LpStatus::Optimal) {
    out.verdict = HiddenVerdict::P0Certified;
    out.x.assign(o.solution.begin(), o.solution.begin() + n);
    out.s = o.solution[n];
    out.step = 2;
    return out;
  }
  return out;
}

}  // namespace lcplab
