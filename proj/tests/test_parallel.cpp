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

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lcplab/error.hpp"
#include "lcplab/parallel.hpp"

using namespace lcplab;

TEST_CASE("parallel loop covers every index exactly once") {
  for (int jobs : {1, 2, 4}) {
    std::vector<int> hits(257, 0);
    parallel_for(257, [&](long i) { hits[i] += 1; }, jobs);
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 257);
    for (int h : hits) CHECK(h == 1);
  }
  parallel_for(0, [](long) { throw std::logic_error("never runs"); }, 2);
}

TEST_CASE("parallel loop propagates the first exception") {
  std::atomic<int> ran{0};
  CHECK_THROWS_AS(
      parallel_for(
          8,
          [&](long i) {
            ran.fetch_add(1);
            if (i == 3) throw InputError("boom");
          },
          2),
      InputError);
  CHECK(ran.load() >= 1);

  CHECK_THROWS_AS(
      parallel_for(4, [](long) { throw std::runtime_error("generic"); }, 2),
      std::runtime_error);
}

TEST_CASE("default job count is positive") {
  CHECK(default_jobs() >= 1);
}
