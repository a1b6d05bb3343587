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

#include <doctest.h>

#include <string>

#include "lcplab/error.hpp"
#include "lcplab/gameval.hpp"
#include "lcplab/hiddenz.hpp"
#include "lcplab/labgen.hpp"
#include "oracles.hpp"

using namespace lcplab;

namespace {

// Singular reference instance: rows one and two of a are opposite.
const RatMatrix kA1 = {{1, 1, 0}, {-1, -1, 0}, {0, 0, 1}};
const Certificate kC1 = {
    RatMatrix{{2, -1, 0}, {-1, 1, 0}, {0, -1, 3}},
    RatMatrix{{1, 0, 0}, {-1, 0, 0}, {0, -1, 3}},
    {Rat(8, 5), Rat(4), Rat(2)},
    {Rat(4), Rat(0), Rat(1, 10)}};

// Nonsingular reference instance with positive game value.
const RatMatrix kA2 = {{1, 2, 0}, {0, 1, 0}, {-1, 0, 1}};
const Certificate kC2 = {
    RatMatrix{{1, -2, 0}, {0, 1, 0}, {-1, -2, 1}},
    RatMatrix{{1, 0, 0}, {0, 1, 0}, {-2, 0, 1}},
    {Rat(3), Rat(8), Rat(0)},
    {Rat(0), Rat(0), Rat(1)}};

bool mentions(const VerifyReport& rep, const std::string& needle) {
  for (const std::string& v : rep.violations) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("certificate verification accepts the singular reference instance") {
  VerifyReport rep = verify_certificate(kA1, kC1);
  CHECK(rep.valid);
  CHECK(rep.violations.empty());
  CHECK(rep.combo == RatVec{Rat(16, 5), Rat(3, 10), Rat(63, 10)});
  CHECK(certificate_combo(kC1) == rep.combo);
}

TEST_CASE("certificate verification accepts the nonsingular reference instance") {
  VerifyReport rep = verify_certificate(kA2, kC2);
  CHECK(rep.valid);
  CHECK(rep.combo == RatVec{Rat(1), Rat(2), Rat(1)});
}

TEST_CASE("certificate verification pinpoints each violated condition") {
  Certificate bad = kC2;
  bad.y(0, 0) = Rat(5);  // breaks a x = y
  VerifyReport rep = verify_certificate(kA2, bad);
  CHECK(!rep.valid);
  CHECK(mentions(rep, "(a x)"));

  bad = kC2;
  bad.x(0, 1) = Rat(1);  // positive off-diagonal entry in x (and breaks a x = y)
  rep = verify_certificate(kA2, bad);
  CHECK(!rep.valid);
  CHECK(mentions(rep, "x(1,2)"));

  bad = kC2;
  bad.y(2, 0) = Rat(2);  // positive off-diagonal entry in y
  rep = verify_certificate(kA2, bad);
  CHECK(!rep.valid);
  CHECK(mentions(rep, "y(3,1)"));

  bad = kC2;
  bad.r[1] = Rat(-1);
  rep = verify_certificate(kA2, bad);
  CHECK(!rep.valid);
  CHECK(mentions(rep, "r[2]"));

  bad = kC2;
  bad.s[2] = Rat(-1, 3);
  rep = verify_certificate(kA2, bad);
  CHECK(!rep.valid);
  CHECK(mentions(rep, "s[3]"));

  bad = kC2;
  bad.r = {Rat(0), Rat(0), Rat(0)};
  bad.s = {Rat(0), Rat(0), Rat(0)};
  rep = verify_certificate(kA2, bad);
  CHECK(!rep.valid);
  CHECK(mentions(rep, "r^T x + s^T y"));

  Certificate misshaped = kC2;
  misshaped.r.pop_back();
  CHECK_THROWS_AS(verify_certificate(kA2, misshaped), DimensionError);
  CHECK_THROWS_AS(verify_certificate(RatMatrix::identity(2), kC2),
                  DimensionError);
}

TEST_CASE("certificate search succeeds on the reference instances") {
  // The singular reference matrix needs a tailored (r, s) seed: each default
  // seed makes the search program infeasible (summing the off-diagonal sign
  // constraints in column 2 forces that column's combination below zero).
  CHECK(!find_certificate(kA1).has_value());
  std::vector<RsSeed> seeds = {
      {{Rat(8, 5), Rat(4), Rat(2)}, {Rat(4), Rat(0), Rat(1, 10)}}};
  auto c1 = find_certificate(kA1, seeds);
  REQUIRE(c1.has_value());
  CHECK(verify_certificate(kA1, *c1).valid);

  // Same story for the nonsingular reference matrix: its a12 = 2 > 0 forces
  // x22 <= -x12/2, which caps every default seed's column-2 combination at
  // zero. The reference (r, s) weights row 2 heavily enough to clear it.
  CHECK(!find_certificate(kA2).has_value());
  std::vector<RsSeed> seeds2 = {
      {{Rat(3), Rat(8), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}};
  auto c2 = find_certificate(kA2, seeds2);
  REQUIRE(c2.has_value());
  CHECK(verify_certificate(kA2, *c2).valid);

  // Z-matrices certify themselves; this one is Z but not semimonotone.
  RatMatrix rz = {{-1, 0}, {-1, 2}};
  auto cz = find_certificate(rz);
  REQUIRE(cz.has_value());
  CHECK(verify_certificate(rz, *cz).valid);

  CHECK(find_certificate(RatMatrix::identity(3)).has_value());
}

TEST_CASE("certificate search rejects a singular matrix with positive value") {
  // Any certificate here would contradict the singular-value theorem, so the
  // sound search must come up empty on every seed.
  RatMatrix ones = {{1, 1}, {1, 1}};
  CHECK(game_value(ones).sign == 1);
  CHECK(det(ones) == Rat(0));
  CHECK(!find_certificate(ones).has_value());
}

TEST_CASE("pair search finds certificates the fixed seeds miss") {
  auto c2 = find_certificate_pair_search(kA2);
  REQUIRE(c2.has_value());
  CHECK(verify_certificate(kA2, *c2).valid);

  auto ci = find_certificate_pair_search(RatMatrix::identity(3));
  REQUIRE(ci.has_value());
  CHECK(verify_certificate(RatMatrix::identity(3), *ci).valid);

  // Honest misses: the ones matrix admits no certificate at all, and the
  // unit-diagonal normalization cannot host a matrix whose diagonal action
  // is negative (here a11 = -1 forces (a x)_11 < 0 when x11 >= 1).
  CHECK(!find_certificate_pair_search(RatMatrix{{1, 1}, {1, 1}}).has_value());
  CHECK(!find_certificate_pair_search(RatMatrix{{-1, 0}, {-1, 2}}).has_value());

  CHECK_THROWS_AS(find_certificate_pair_search(RatMatrix(2, 3)),
                  DimensionError);
}

TEST_CASE("certificate search validates its seeds") {
  CHECK(default_rs_seeds(2).size() == 3);
  std::vector<RsSeed> bad_len = {{{Rat(1)}, {Rat(1), Rat(1)}}};
  CHECK_THROWS_AS(find_certificate(RatMatrix::identity(2), bad_len),
                  DimensionError);
  std::vector<RsSeed> negative = {
      {{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}}};
  CHECK_THROWS_AS(find_certificate(RatMatrix::identity(2), negative),
                  ParameterError);
}

TEST_CASE("weight completion solves the exact polyhedral problem") {
  auto rs = find_rs(RatMatrix::identity(2), RatMatrix::identity(2));
  REQUIRE(rs.has_value());
  RatVec combo = vec_add(vecmat(rs->first, RatMatrix::identity(2)),
                         vecmat(rs->second, RatMatrix::identity(2)));
  CHECK(vec_all_pos(combo));

  // The zero pair admits no weights at all.
  CHECK(!find_rs(RatMatrix{{0}}, RatMatrix{{0}}).has_value());

  // Completion recovers weights for the reference pair.
  auto rs2 = find_rs(kC2.x, kC2.y);
  REQUIRE(rs2.has_value());
  Certificate completed = {kC2.x, kC2.y, rs2->first, rs2->second};
  CHECK(verify_certificate(kA2, completed).valid);
}

TEST_CASE("least K-matrix index set for mixed row matrices") {
  auto k2 = kappa_index_set(kC2.x, kC2.y);
  REQUIRE(k2.has_value());
  RatMatrix w = mixed_w(kC2.x, kC2.y, *k2);
  CHECK(is_k_matrix(w));
  // Least in the size-then-lexicographic sweep: no earlier mask qualifies.
  for (auto mask : subset_masks(3, 0, 3)) {
    if (mask == k2->mask()) break;
    IndexSet earlier = IndexSet::from_mask(3, mask);
    CHECK(!is_k_matrix(mixed_w(kC2.x, kC2.y, earlier)));
  }

  auto k1 = kappa_index_set(kC1.x, kC1.y);
  REQUIRE(k1.has_value());
  CHECK(is_k_matrix(mixed_w(kC1.x, kC1.y, *k1)));

  CHECK(!kappa_index_set(RatMatrix{{0}}, RatMatrix{{0}}).has_value());
  // A positive off-diagonal entry disqualifies the pair before any sweep.
  CHECK_THROWS_AS(
      kappa_index_set(RatMatrix{{1, 2}, {0, 1}}, RatMatrix::identity(2)),
      InputError);
  CHECK_THROWS_AS(kappa_index_set(RatMatrix{{1, 2}, {0, 1}}, kC2.y),
                  DimensionError);
}

TEST_CASE("mixed row matrices interleave by index set") {
  IndexSet alpha(2, {0});
  RatMatrix x = {{1, 2}, {3, 4}};
  RatMatrix y = {{5, 6}, {7, 8}};
  CHECK(mixed_w(x, y, alpha) == RatMatrix{{1, 2}, {7, 8}});
  CHECK(mixed_wbar(x, y, alpha) == RatMatrix{{5, 6}, {3, 4}});
  CHECK(mixed_w(x, y, IndexSet::full(2)) == x);
  CHECK(mixed_w(x, y, IndexSet::empty(2)) == y);
}

TEST_CASE("submatrix certificates arise from block elimination") {
  IndexSet alpha(3, {0, 1});
  Certificate sub = submatrix_certificate(kA2, kC2, alpha);
  RatMatrix a_sub = principal_submatrix(kA2, alpha);
  CHECK(a_sub == RatMatrix{{1, 2}, {0, 1}});
  CHECK(verify_certificate(a_sub, sub).valid);

  CHECK(verify_certificate(
            kA2, submatrix_certificate(kA2, kC2, IndexSet::full(3)))
            .valid);
  CHECK_THROWS_AS(submatrix_certificate(kA2, kC2, IndexSet::empty(3)),
                  DimensionError);
}

TEST_CASE("submatrix certificate gate rejects non-semimonotone mixed matrices") {
  RatMatrix a = {{-1, 0}, {-1, 2}};
  Certificate c = {RatMatrix::identity(2), a, {Rat(1), Rat(1)}, {Rat(0), Rat(0)}};
  REQUIRE(verify_certificate(a, c).valid);
  // The swapped mixed matrix has a negative diagonal entry, so the
  // guarded construction refuses while the best-effort one still lands.
  CHECK_THROWS_AS(submatrix_certificate(a, c, IndexSet(2, {0})),
                  PreconditionError);
  auto reduced = try_reduce_certificate(a, c, IndexSet(2, {0}));
  REQUIRE(reduced.has_value());
  CHECK(verify_certificate(RatMatrix{{-1}}, *reduced).valid);
  auto reduced2 = try_reduce_certificate(a, c, IndexSet(2, {1}));
  REQUIRE(reduced2.has_value());
  CHECK(verify_certificate(RatMatrix{{2}}, *reduced2).valid);
}

TEST_CASE("completely hidden check certifies every principal submatrix") {
  CompletelyHiddenReport rep = completely_hidden_check(kA2, kC2);
  CHECK(rep.completely);
  CHECK(rep.failures.empty());

  // Z-matrix outside the semimonotone gate: still completely certified.
  RatMatrix rz = {{-1, 0}, {-1, 2}};
  Certificate cz = {RatMatrix::identity(2), rz, {Rat(1), Rat(1)},
                    {Rat(0), Rat(0)}};
  CompletelyHiddenReport rz_rep = completely_hidden_check(rz, cz);
  CHECK(rz_rep.completely);
  CHECK(!rz_rep.gate_e);

  Certificate broken = kC2;
  broken.r = {Rat(0), Rat(0), Rat(0)};
  broken.s = {Rat(0), Rat(0), Rat(0)};
  CHECK_THROWS_AS(completely_hidden_check(kA2, broken), PreconditionError);
}

TEST_CASE("constant-ladder certificate uses the inverse as hidden factor") {
  RatMatrix d = {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}};
  auto c = type_d_certificate(d);
  REQUIRE(c.has_value());
  CHECK(c->x == RatMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  CHECK(c->y == RatMatrix::identity(3));
  CHECK(vec_all_zero(c->r));
  CHECK(c->s == RatVec{Rat(1), Rat(1), Rat(1)});
  CHECK(verify_certificate(d, *c).valid);

  // Not positive (leading level zero) or not the ladder pattern at all.
  CHECK(!type_d_certificate(RatMatrix{{0, 0}, {0, 1}}).has_value());
  CHECK(!type_d_certificate(RatMatrix{{1, 2}, {2, 2}}).has_value());
}

TEST_CASE("perturbation bound and diagonal shift on the reference certificate") {
  auto bound = epsilon_bound(kC2);
  REQUIRE(bound.has_value());
  CHECK(*bound == Rat(1, 2));

  PerturbationResult pr = perturb(kA2, kC2, Rat(1, 4));
  CHECK(pr.bound == Rat(1, 2));
  CHECK(pr.a_eps == kA2 + Rat(1, 4) * RatMatrix::identity(3));
  CHECK(pr.cert_eps.x == kC2.x);
  CHECK(pr.cert_eps.y == RatMatrix{{Rat(5, 4), Rat(-1, 2), Rat(0)},
                                   {Rat(0), Rat(5, 4), Rat(0)},
                                   {Rat(-9, 4), Rat(-1, 2), Rat(5, 4)}});
  VerifyReport rep = verify_certificate(pr.a_eps, pr.cert_eps);
  CHECK(rep.valid);
  CHECK(rep.combo == RatVec{Rat(3, 4), Rat(3, 2), Rat(5, 4)});

  CHECK_THROWS_AS(perturb(kA2, kC2, Rat(1, 2)), ParameterError);
  CHECK_THROWS_AS(perturb(kA2, kC2, Rat(0)), ParameterError);
  CHECK_THROWS_AS(perturb(kA2, kC2, Rat(-1)), ParameterError);
}

TEST_CASE("perturbation is unbounded when the shift leaves the combination fixed") {
  Certificate c = {RatMatrix::identity(2), RatMatrix::identity(2),
                   {Rat(1), Rat(1)}, {Rat(0), Rat(0)}};
  CHECK(!epsilon_bound(c).has_value());
  PerturbationResult pr = perturb(RatMatrix::identity(2), c, Rat(5));
  CHECK(!pr.bound.has_value());
  CHECK(pr.a_eps == Rat(6) * RatMatrix::identity(2));
  CHECK(verify_certificate(pr.a_eps, pr.cert_eps).valid);
}

TEST_CASE("epsilon bound demands a plausible certificate tuple") {
  Certificate junk = {RatMatrix{{0}}, RatMatrix{{0}}, {Rat(0)}, {Rat(0)}};
  CHECK_THROWS_AS(epsilon_bound(junk), PreconditionError);
}

TEST_CASE("linear screen certifies the sign family of the reference matrix") {
  HiddenClassifyOutcome out = classify_hidden(kA2);
  CHECK(out.verdict == HiddenVerdict::PCertified);
  CHECK(out.step == 1);
  CHECK(out.s >= Rat(1));
  REQUIRE(out.x.size() == 3);
  for (const Rat& xi : out.x) CHECK(xi >= Rat(1));
  RatVec ax = matvec(kA2, out.x);
  for (const Rat& v : ax) CHECK(v >= out.s);
}

TEST_CASE("linear screen stays inconclusive without a strictly positive witness") {
  // This matrix maps some nonnegative x with zero components into the
  // nonnegative orthant, but no strictly positive x works, and indeed it is
  // not even weakly sign-stable: the screen must not certify anything.
  RatMatrix a = {{-1, 0}, {-1, 2}};
  CHECK(vec_all_nonneg(matvec(a, {Rat(0), Rat(1)})));
  HiddenClassifyOutcome out = classify_hidden(a);
  CHECK(out.verdict == HiddenVerdict::Inconclusive);
  CHECK(!minor_profile(a).is_p0);
}

TEST_CASE("linear screen separates the weak certificate from the strict one") {
  // Rank-one fence: a x can never be strictly positive, but x = e gives
  // a x = 0, so the weak step certifies the nonnegative-minor family.
  RatMatrix fence = {{1, -1}, {-1, 1}};
  HiddenClassifyOutcome out = classify_hidden(fence);
  CHECK(out.verdict == HiddenVerdict::P0Certified);
  CHECK(out.step == 2);
  CHECK(out.s == Rat(0));
  for (const Rat& xi : out.x) CHECK(xi >= Rat(1));
  CHECK(vec_all_nonneg(matvec(fence, out.x)));
  CHECK(minor_profile(fence).is_p0);

  // Opposite rows block both steps outright.
  CHECK(classify_hidden(kA1).verdict == HiddenVerdict::Inconclusive);

  CHECK_THROWS_AS(classify_hidden(kA2, {Rat(-1), Rat(1)}), ParameterError);
  CHECK_THROWS_AS(classify_hidden(kA2, {Rat(1), Rat(0)}), ParameterError);
}

TEST_CASE("found certificates always verify on random hidden instances") {
  Prng rng(66001);
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    GenSpec spec;
    spec.kind = GenKind::HiddenZ;
    spec.n = 2 + static_cast<int>(rng.uniform(0, 2));
    spec.seed = rng.next();
    Generated g = generate(spec);
    REQUIRE(g.cert.has_value());
    REQUIRE(verify_certificate(g.a, *g.cert).valid);
    if (auto c = find_certificate(g.a)) {
      CHECK(verify_certificate(g.a, *c).valid);
      ++found;
    }
  }
  CHECK(found > 10);
}
