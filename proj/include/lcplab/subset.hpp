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

#ifndef LCPLAB_SUBSET_HPP_
#define LCPLAB_SUBSET_HPP_

#include <cstdint>
#include <vector>

#include "lcplab/error.hpp"

namespace lcplab {

// Sorted, duplicate-free subset of {0, ..., n-1} carrying its universe size.
// Indices are 0-based internally; CLI and JSON boundaries are 1-based.
class IndexSet {
 public:
  IndexSet() : universe_(0) {}
  IndexSet(int universe, std::vector<int> members);

  static IndexSet empty(int universe) { return IndexSet(universe, {}); }
  static IndexSet full(int universe);
  static IndexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  bool is_full() const { return size() == universe_; }
  bool contains(int i) const;

  const std::vector<int>& members() const { return members_; }
  std::uint64_t mask() const;
  IndexSet complement() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) {
    return !(a == b);
  }

 private:
  int universe_;
  std::vector<int> members_;
};

// All subset masks of {0..n-1} with min_size <= |S| <= max_size, ordered by
// size and then lexicographically on the sorted member list. This is the
// canonical sweep order for every subset enumeration in the library.
std::vector<std::uint64_t> subset_masks(int n, int min_size, int max_size);

}  // namespace lcplab

#endif  // LCPLAB_SUBSET_HPP_
