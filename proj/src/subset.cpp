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

#include "lcplab/subset.hpp"

#include <algorithm>
#include <string>

namespace lcplab {

IndexSet::IndexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe < 0 || universe > 63) {
    throw InputError("index set universe out of range: " +
                     std::to_string(universe));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (int i : members_) {
    if (i < 0 || i >= universe_) {
      throw InputError("index " + std::to_string(i) +
                       " outside universe of size " +
                       std::to_string(universe_));
    }
  }
}

IndexSet IndexSet::full(int universe) {
  std::vector<int> all(universe);
  for (int i = 0; i < universe; ++i) all[i] = i;
  return IndexSet(universe, std::move(all));
}

IndexSet IndexSet::from_mask(int universe, std::uint64_t mask) {
  std::vector<int> members;
  for (int i = 0; i < universe; ++i) {
    if (mask >> i & 1) members.push_back(i);
  }
  if (mask >> universe != 0) {
    throw InputError("subset mask has bits outside the universe");
  }
  return IndexSet(universe, std::move(members));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (int i : members_) m |= std::uint64_t{1} << i;
  return m;
}

IndexSet IndexSet::complement() const {
  std::vector<int> rest;
  rest.reserve(universe_ - size());
  for (int i = 0; i < universe_; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return IndexSet(universe_, std::move(rest));
}

std::vector<std::uint64_t> subset_masks(int n, int min_size, int max_size) {
  if (n < 0 || n > 63) {
    throw InputError("subset universe out of range: " + std::to_string(n));
  }
  min_size = std::max(min_size, 0);
  max_size = std::min(max_size, n);
  std::vector<std::uint64_t> out;
  for (int k = min_size; k <= max_size; ++k) {
    // Combinations of size k in lexicographic order of the member list.
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
      std::uint64_t m = 0;
      for (int i : c) m |= std::uint64_t{1} << i;
      out.push_back(m);
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace lcplab
