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

#ifndef LCPLAB_LABGEN_HPP_
#define LCPLAB_LABGEN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcplab/hiddenz.hpp"
#include "lcplab/ratmat.hpp"

namespace lcplab {

// Deterministic counter-based generator: the same seed always produces the
// same stream, independent of platform and thread count.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi);
  // Derives an independent stream for subtask `index`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

enum class GenKind {
  General,   // integer entries in [-bound, bound]
  Z,         // off-diagonal in [-bound, 0]
  K,         // Z with strictly dominant positive diagonal
  P,         // rejection-sampled positive principal minors
  HiddenZ,   // a = y x^-1 from a Z-pair, certificate attached
  TypeD,     // strictly increasing positive diagonal pattern
  Singular,  // general matrix with one row forced dependent
};

struct GenSpec {
  GenKind kind = GenKind::General;
  int n = 2;
  std::uint64_t seed = 1;
  long bound = 9;  // entry magnitude bound
};

struct Generated {
  RatMatrix a;
  std::optional<Certificate> cert;  // attached for HiddenZ and TypeD draws
};

// Draws one matrix of the requested kind. Certified kinds verify the
// attached certificate before returning and throw InternalError rather than
// emit an unverified instance.
Generated generate(const GenSpec& spec);

// Randomized theorem-harness suites. Each registered id draws instances that
// satisfy (or are gated on) the hypotheses of one statement and checks its
// conclusion exactly; hypothesis misses count as skips, never violations.
struct SuiteViolation {
  std::uint64_t trial_seed = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite_id;
  long trials = 0;
  int n_max = 0;
  std::uint64_t seed = 0;
  long skipped = 0;
  std::map<std::string, long> skip_reasons;
  std::vector<SuiteViolation> violations;
  bool passed() const { return violations.empty(); }
};

const std::vector<std::string>& registered_suites();

SuiteReport run_suite(const std::string& suite_id, long trials, int n_max,
                      std::uint64_t seed, int jobs = 0);

}  // namespace lcplab

#endif  // LCPLAB_LABGEN_HPP_
