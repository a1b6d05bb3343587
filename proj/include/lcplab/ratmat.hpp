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

#ifndef LCPLAB_RATMAT_HPP_
#define LCPLAB_RATMAT_HPP_

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lcplab/rat.hpp"
#include "lcplab/subset.hpp"

namespace lcplab {

// Dense matrix of exact rationals, row major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(int n);
  static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& operator()(int i, int j) { return data_[idx(i, j)]; }
  const Rat& operator()(int i, int j) const { return data_[idx(i, j)]; }

  RatVec row(int i) const;
  RatVec col(int j) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) {
    return !(a == b);
  }

  RatMatrix operator-() const;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rat& c, const RatMatrix& a);

  std::string str() const;

 private:
  size_t idx(int i, int j) const;
  int rows_, cols_;
  std::vector<Rat> data_;
};

RatVec matvec(const RatMatrix& m, const RatVec& v);      // m * v
RatVec vecmat(const RatVec& v, const RatMatrix& m);      // v^T * m

// Determinant by fraction-free Bareiss elimination on the integer matrix
// obtained by clearing each row's denominators.
Rat det(const RatMatrix& m);

// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrixError.
RatMatrix inverse(const RatMatrix& m);

// Unique solution of m * x = b when m is nonsingular, nullopt otherwise.
std::optional<RatVec> solve_unique(const RatMatrix& m, const RatVec& b);

// Submatrix with the given row and column index sets (order preserving).
RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows,
                    const IndexSet& cols);
RatMatrix principal_submatrix(const RatMatrix& m, const IndexSet& alpha);

// Schur complement m / m_bb over the pivot block beta. beta empty returns m;
// beta full is an error (the complement would be empty); a singular pivot
// block raises SingularMatrixError.
RatMatrix schur_complement(const RatMatrix& m, const IndexSet& beta);

// Principal pivot transform on the block alpha. alpha empty returns m,
// alpha full returns inverse(m). Requires m_aa nonsingular.
RatMatrix ppt(const RatMatrix& m, const IndexSet& alpha);

// Symmetric permutation: result(i, j) = m(perm[i], perm[j]). perm must be a
// bijection on {0..n-1}; this is P m P^T for the permutation matrix P whose
// row i is the unit vector at perm[i].
RatMatrix principal_permute(const RatMatrix& m, const std::vector<int>& perm);

}  // namespace lcplab

#endif  // LCPLAB_RATMAT_HPP_
