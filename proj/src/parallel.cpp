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

#include "lcplab/parallel.hpp"

#include <omp.h>

#include <exception>

namespace lcplab {

void parallel_for(long count, const std::function<void(long)>& fn, int jobs) {
  if (count <= 0) return;
  if (jobs == 1 || count == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(lcplab_parallel_err)
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

int default_jobs() { return omp_get_max_threads(); }

}  // namespace lcplab
