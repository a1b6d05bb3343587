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

#include "lcplab/matclass.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "lcplab/error.hpp"
#include "lcplab/parallel.hpp"

namespace lcplab {

namespace {

void require_square(const RatMatrix& m, const char* what) {
  if (!m.is_square() || m.rows() == 0) {
    throw DimensionError(std::string(what) + " requires a square matrix");
  }
}

void require_cap(const RatMatrix& m, int cap, const char* what) {
  if (m.rows() > cap) {
    throw SizeCapError(std::string(what) + ": order " +
                       std::to_string(m.rows()) + " exceeds cap " +
                       std::to_string(cap));
  }
}

void fill_flags(MinorProfile& p) {
  const std::uint64_t full = (std::uint64_t{1} << p.n) - 1;
  bool all_pos = true, all_nonneg = true, all_neg = true, proper_pos = true;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int s = p.by_mask[mask].sign();
    if (s <= 0) all_pos = false;
    if (s < 0) all_nonneg = false;
    if (s >= 0) all_neg = false;
    if (mask != full && s <= 0) proper_pos = false;
  }
  p.is_p = all_pos;
  p.is_p0 = all_nonneg;
  p.is_n = all_neg;
  p.is_almost_p = proper_pos && p.by_mask[full].sign() < 0;
}

// A support alpha refutes E0 iff {x > 0, m_aa x < 0} is solvable, and
// refutes E iff {x > 0, m_aa x <= 0} is solvable.
bool support_refutes(const RatMatrix& m, std::uint64_t mask, bool strict_class) {
  IndexSet alpha = IndexSet::from_mask(m.rows(), mask);
  RatMatrix sub = principal_submatrix(m, alpha);
  const int k = alpha.size();
  std::vector<RatVec> strict;
  std::vector<LpConstraint> base;
  for (int i = 0; i < k; ++i) {
    RatVec e(k, Rat(0));
    e[i] = 1;
    strict.push_back(std::move(e));
  }
  for (int i = 0; i < k; ++i) {
    if (strict_class) {
      // Refuting E allows (m x)_i == 0, so the rows sit in the base system.
      base.push_back({vec_scale(Rat(-1), sub.row(i)), Relation::Ge, Rat(0)});
    } else {
      strict.push_back(vec_scale(Rat(-1), sub.row(i)));
    }
  }
  return strict_feasibility(k, strict, base).feasible;
}

bool no_support_refutes(const RatMatrix& m, bool strict_class, int cap,
                        int jobs, const char* what) {
  require_square(m, what);
  require_cap(m, cap, what);
  auto masks = subset_masks(m.rows(), 1, m.rows());
  std::atomic<bool> refuted{false};
  parallel_for(
      static_cast<long>(masks.size()),
      [&](long i) {
        if (refuted.load(std::memory_order_relaxed)) return;
        if (support_refutes(m, masks[i], strict_class)) {
          refuted.store(true, std::memory_order_relaxed);
        }
      },
      jobs);
  return !refuted.load();
}

}  // namespace

bool is_z_matrix(const RatMatrix& m) {
  require_square(m, "is_z_matrix");
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j).sign() > 0) return false;
    }
  }
  return true;
}

const Rat& MinorProfile::minor(const IndexSet& alpha) const {
  if (alpha.universe() != n || alpha.is_empty()) {
    throw DimensionError("minor lookup with bad index set");
  }
  return by_mask[alpha.mask()];
}

MinorProfile minor_profile(const RatMatrix& m, int cap, int jobs) {
  require_square(m, "minor_profile");
  require_cap(m, cap, "minor_profile");
  const int n = m.rows();
  MinorProfile p;
  p.n = n;
  p.by_mask.assign(std::uint64_t{1} << n, Rat(0));
  auto masks = subset_masks(n, 1, n);
  parallel_for(
      static_cast<long>(masks.size()),
      [&](long i) {
        IndexSet alpha = IndexSet::from_mask(n, masks[i]);
        p.by_mask[masks[i]] = det(principal_submatrix(m, alpha));
      },
      jobs);
  fill_flags(p);
  return p;
}

bool is_k_matrix(const RatMatrix& m, int cap) {
  return is_z_matrix(m) && minor_profile(m, cap).is_p;
}

bool is_k0_matrix(const RatMatrix& m, int cap) {
  return is_z_matrix(m) && minor_profile(m, cap).is_p0;
}

SWitness is_s_matrix(const RatMatrix& m) {
  require_square(m, "is_s_matrix");
  const int n = m.rows();
  std::vector<RatVec> strict;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    strict.push_back(std::move(e));
  }
  for (int i = 0; i < n; ++i) strict.push_back(m.row(i));
  auto fr = strict_feasibility(n, strict, {});
  SWitness w;
  w.is_s = fr.feasible;
  if (fr.feasible) w.witness = fr.witness;
  return w;
}

bool is_sbar_matrix(const RatMatrix& m, int cap, int jobs) {
  require_square(m, "is_sbar_matrix");
  require_cap(m, cap, "is_sbar_matrix");
  auto masks = subset_masks(m.rows(), 1, m.rows());
  std::atomic<bool> failed{false};
  parallel_for(
      static_cast<long>(masks.size()),
      [&](long i) {
        if (failed.load(std::memory_order_relaxed)) return;
        IndexSet alpha = IndexSet::from_mask(m.rows(), masks[i]);
        if (!is_s_matrix(principal_submatrix(m, alpha)).is_s) {
          failed.store(true, std::memory_order_relaxed);
        }
      },
      jobs);
  return !failed.load();
}

bool is_e_matrix(const RatMatrix& m, int cap, int jobs) {
  return no_support_refutes(m, true, cap, jobs, "is_e_matrix");
}

bool is_e0_matrix(const RatMatrix& m, int cap, int jobs) {
  return no_support_refutes(m, false, cap, jobs, "is_e0_matrix");
}

TypeDProfile is_type_d(const RatMatrix& m) {
  require_square(m, "is_type_d");
  const int n = m.rows();
  TypeDProfile t;
  RatVec alphas(n);
  for (int i = 0; i < n; ++i) alphas[i] = m(i, i);
  for (int i = 0; i + 1 < n; ++i) {
    if (!(alphas[i] < alphas[i + 1])) return t;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != alphas[std::min(i, j)]) return t;
    }
  }
  t.is_type_d = true;
  t.positive = alphas[0].sign() > 0;
  t.alphas = std::move(alphas);
  return t;
}

NCategory n_category(const RatMatrix& m, int cap, int jobs) {
  MinorProfile p = minor_profile(m, cap, jobs);
  if (!p.is_n) return NCategory::NotN;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).sign() > 0) return NCategory::First;
    }
  }
  return NCategory::Second;
}

namespace ref {

MinorProfile minor_profile(const RatMatrix& m, int cap) {
  require_square(m, "ref::minor_profile");
  require_cap(m, cap, "ref::minor_profile");
  const int n = m.rows();
  MinorProfile p;
  p.n = n;
  p.by_mask.assign(std::uint64_t{1} << n, Rat(0));
  for (std::uint64_t mask : subset_masks(n, 1, n)) {
    p.by_mask[mask] = det(principal_submatrix(m, IndexSet::from_mask(n, mask)));
  }
  fill_flags(p);
  return p;
}

bool is_e_matrix(const RatMatrix& m, int cap) {
  require_square(m, "ref::is_e_matrix");
  require_cap(m, cap, "ref::is_e_matrix");
  for (std::uint64_t mask : subset_masks(m.rows(), 1, m.rows())) {
    if (support_refutes(m, mask, true)) return false;
  }
  return true;
}

bool is_e0_matrix(const RatMatrix& m, int cap) {
  require_square(m, "ref::is_e0_matrix");
  require_cap(m, cap, "ref::is_e0_matrix");
  for (std::uint64_t mask : subset_masks(m.rows(), 1, m.rows())) {
    if (support_refutes(m, mask, false)) return false;
  }
  return true;
}

bool is_sbar_matrix(const RatMatrix& m, int cap) {
  require_square(m, "ref::is_sbar_matrix");
  require_cap(m, cap, "ref::is_sbar_matrix");
  for (std::uint64_t mask : subset_masks(m.rows(), 1, m.rows())) {
    IndexSet alpha = IndexSet::from_mask(m.rows(), mask);
    if (!is_s_matrix(principal_submatrix(m, alpha)).is_s) return false;
  }
  return true;
}

}  // namespace ref

}  // namespace lcplab
