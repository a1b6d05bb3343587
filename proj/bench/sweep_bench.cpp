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

// Benchmark for the subset sweeps: times each OpenMP kernel against its
// serial reference on the same generated matrices and reports the speedup.
// Every parallel result is also checked against the serial one, so a run
// doubles as an equivalence test on larger orders than the unit suite uses.
//
//   sweep_bench [n] [trials] [seed]   (defaults: 9 4 1)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcplab/labgen.hpp"
#include "lcplab/lcpsolve.hpp"
#include "lcplab/matclass.hpp"
#include "lcplab/ratmat.hpp"

namespace {

using namespace lcplab;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct Row {
  std::string kernel;
  double serial = 0;
  double parallel = 0;
  bool agree = true;
};

void print_row(const Row& r) {
  std::printf("%-22s %10.4f s %10.4f s %8.2fx   %s\n", r.kernel.c_str(),
              r.serial, r.parallel,
              r.parallel > 0 ? r.serial / r.parallel : 0.0,
              r.agree ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 9;
  const int trials = argc > 2 ? std::atoi(argv[2]) : 4;
  const unsigned long seed = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 1;
  if (n < 1 || n > 14 || trials < 1) {
    std::fprintf(stderr, "usage: sweep_bench [n 1..14] [trials >=1] [seed]\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("order %d, %d trial(s), seed %lu, %d thread(s)\n", n, trials,
              seed, omp_get_max_threads());
#else
  std::printf("order %d, %d trial(s), seed %lu, OpenMP disabled\n", n, trials,
              seed);
#endif

  std::vector<RatMatrix> mats;
  std::vector<LcpInstance> insts;
  Prng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Generated g = generate({GenKind::General, n, rng.next(), 9});
    RatVec q(n);
    for (int i = 0; i < n; ++i) q[i] = Rat(rng.uniform(-9, 9));
    insts.push_back({g.a, q});
    mats.push_back(std::move(g.a));
  }

  std::vector<Row> rows;

  {
    Row r{"minor_profile"};
    std::vector<MinorProfile> serial;
    auto t0 = std::chrono::steady_clock::now();
    for (const RatMatrix& m : mats) serial.push_back(ref::minor_profile(m, n));
    r.serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < mats.size(); ++i) {
      MinorProfile p = minor_profile(mats[i], n);
      r.agree = r.agree && p.by_mask == serial[i].by_mask &&
                p.is_p == serial[i].is_p && p.is_p0 == serial[i].is_p0;
    }
    r.parallel = seconds_since(t0);
    rows.push_back(r);
    print_row(r);
  }

  struct BoolKernel {
    const char* name;
    std::function<bool(const RatMatrix&)> serial;
    std::function<bool(const RatMatrix&)> parallel;
  };
  const int cap = n;
  const std::vector<BoolKernel> kernels = {
      {"is_e_matrix",
       [cap](const RatMatrix& m) { return ref::is_e_matrix(m, cap); },
       [cap](const RatMatrix& m) { return is_e_matrix(m, cap); }},
      {"is_e0_matrix",
       [cap](const RatMatrix& m) { return ref::is_e0_matrix(m, cap); },
       [cap](const RatMatrix& m) { return is_e0_matrix(m, cap); }},
      {"is_sbar_matrix",
       [cap](const RatMatrix& m) { return ref::is_sbar_matrix(m, cap); },
       [cap](const RatMatrix& m) { return is_sbar_matrix(m, cap); }},
  };
  for (const BoolKernel& k : kernels) {
    Row r{k.name};
    std::vector<bool> serial;
    auto t0 = std::chrono::steady_clock::now();
    for (const RatMatrix& m : mats) serial.push_back(k.serial(m));
    r.serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < mats.size(); ++i) {
      r.agree = r.agree && k.parallel(mats[i]) == serial[i];
    }
    r.parallel = seconds_since(t0);
    rows.push_back(r);
    print_row(r);
  }

  {
    Row r{"enumerate_solutions"};
    std::vector<EnumerationResult> serial;
    auto t0 = std::chrono::steady_clock::now();
    for (const LcpInstance& inst : insts) {
      serial.push_back(ref::enumerate_solutions(inst, n));
    }
    r.serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < insts.size(); ++i) {
      EnumerationResult e = enumerate_solutions(insts[i], n);
      bool same = e.solutions.size() == serial[i].solutions.size() &&
                  e.continuum_supports == serial[i].continuum_supports;
      if (same) {
        for (std::size_t j = 0; j < e.solutions.size(); ++j) {
          same = same && e.solutions[j].z == serial[i].solutions[j].z;
        }
      }
      r.agree = r.agree && same;
    }
    r.parallel = seconds_since(t0);
    rows.push_back(r);
    print_row(r);
  }

  bool all_agree = true;
  for (const Row& r : rows) all_agree = all_agree && r.agree;
  if (!all_agree) {
    std::printf("FAILURE: a parallel kernel disagreed with its reference\n");
    return 1;
  }
  return 0;
}
