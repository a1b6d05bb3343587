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

#ifndef LCPLAB_PARALLEL_HPP_
#define LCPLAB_PARALLEL_HPP_

#include <functional>

namespace lcplab {

// Runs fn(i) for i in [0, count), distributing iterations over OpenMP
// threads. jobs = 0 uses the runtime default, jobs = 1 forces serial
// execution, jobs = k uses k threads. Iterations must be independent; the
// first exception raised by any iteration is rethrown after the loop.
// Results must be written to preallocated per-index slots so the outcome is
// identical for every thread count.
void parallel_for(long count, const std::function<void(long)>& fn,
                  int jobs = 0);

// Number of threads the runtime would use for jobs = 0.
int default_jobs();

}  // namespace lcplab

#endif  // LCPLAB_PARALLEL_HPP_
