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

#include "lcplab/ratmat.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

namespace lcplab {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || (rows == 0) != (cols == 0)) {
    throw DimensionError("invalid matrix shape " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
  data_.resize(static_cast<size_t>(rows) * cols);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    for (const Rat& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

size_t RatMatrix::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
    throw DimensionError("matrix index (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") out of range");
  }
  return static_cast<size_t>(i) * cols_ + j;
}

RatVec RatMatrix::row(int i) const {
  RatVec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

RatVec RatMatrix::col(int j) const {
  RatVec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix out(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionError("matrix sum shape mismatch");
  }
  RatMatrix out(a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) {
    out.data_[k] = a.data_[k] + b.data_[k];
  }
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionError("matrix difference shape mismatch");
  }
  RatMatrix out(a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) {
    out.data_[k] = a.data_[k] - b.data_[k];
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RatMatrix operator*(const Rat& c, const RatMatrix& a) {
  RatMatrix out(a.rows_, a.cols_);
  for (size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = c * a.data_[k];
  return out;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

RatVec matvec(const RatMatrix& m, const RatVec& v) {
  if (m.cols() != static_cast<int>(v.size())) {
    throw DimensionError("matvec shape mismatch");
  }
  RatVec out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rat acc;
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RatVec vecmat(const RatVec& v, const RatMatrix& m) {
  if (m.rows() != static_cast<int>(v.size())) {
    throw DimensionError("vecmat shape mismatch");
  }
  RatVec out(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    Rat acc;
    for (int i = 0; i < m.rows(); ++i) acc += v[i] * m(i, j);
    out[j] = acc;
  }
  return out;
}

Rat det(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row so elimination runs over integers.
  // det(m) = scale * det(B) with B integral.
  std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n));
  Rat scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, m(i, j).den());
    for (int j = 0; j < n; ++j) {
      b[i][j] = m(i, j).num() * mpz_class(l / m(i, j).den());
    }
    scale /= Rat::from_mpz(l, 1);
  }

  // Bareiss fraction-free elimination; every division below is exact.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i) {
        if (b[i][k] != 0) {
          r = i;
          break;
        }
      }
      if (r < 0) return 0;
      std::swap(b[k], b[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = b[i][j] * b[k][k] - b[i][k] * b[k][j];
        mpz_divexact(b[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  return Rat(sign) * scale * Rat::from_mpz(b[n - 1][n - 1], 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const int n = m.rows();
  // Gauss-Jordan on [m | I].
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (!aug(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw SingularMatrixError("matrix is singular");
    if (piv != k) {
      for (int j = 0; j < 2 * n; ++j) std::swap(aug(k, j), aug(piv, j));
    }
    Rat inv_p = aug(k, k).reciprocal();
    for (int j = 0; j < 2 * n; ++j) aug(k, j) *= inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == k || aug(i, k).is_zero()) continue;
      Rat f = aug(i, k);
      for (int j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  RatMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::optional<RatVec> solve_unique(const RatMatrix& m, const RatVec& b) {
  if (!m.is_square()) throw DimensionError("solve on non-square matrix");
  const int n = m.rows();
  if (static_cast<int>(b.size()) != n) {
    throw DimensionError("solve right-hand side length mismatch");
  }
  RatMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (!aug(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != k) {
      for (int j = 0; j <= n; ++j) std::swap(aug(k, j), aug(piv, j));
    }
    Rat inv_p = aug(k, k).reciprocal();
    for (int j = k; j <= n; ++j) aug(k, j) *= inv_p;
    for (int i = 0; i < n; ++i) {
      if (i == k || aug(i, k).is_zero()) continue;
      Rat f = aug(i, k);
      for (int j = k; j <= n; ++j) aug(i, j) -= f * aug(k, j);
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

namespace {

void require_universe(const RatMatrix& m, const IndexSet& s, const char* what) {
  if (s.universe() != m.rows()) {
    throw DimensionError(std::string(what) +
                         ": index set universe does not match matrix order");
  }
}

}  // namespace

RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows,
                    const IndexSet& cols) {
  if (rows.universe() != m.rows() || cols.universe() != m.cols()) {
    throw DimensionError("submatrix: index set universe mismatch");
  }
  if (rows.is_empty() || cols.is_empty()) {
    throw DimensionError("submatrix: empty index set");
  }
  RatMatrix out(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols.size(); ++j) {
      out(i, j) = m(rows.members()[i], cols.members()[j]);
    }
  }
  return out;
}

RatMatrix principal_submatrix(const RatMatrix& m, const IndexSet& alpha) {
  if (!m.is_square()) {
    throw DimensionError("principal submatrix of non-square matrix");
  }
  return submatrix(m, alpha, alpha);
}

RatMatrix schur_complement(const RatMatrix& m, const IndexSet& beta) {
  if (!m.is_square()) {
    throw DimensionError("Schur complement of non-square matrix");
  }
  require_universe(m, beta, "schur_complement");
  if (beta.is_empty()) return m;
  if (beta.is_full()) {
    throw DimensionError("Schur complement over the full index set is empty");
  }
  IndexSet rest = beta.complement();
  RatMatrix mbb = submatrix(m, beta, beta);
  RatMatrix inv = inverse(mbb);  // throws SingularMatrixError when singular
  RatMatrix mrb = submatrix(m, rest, beta);
  RatMatrix mbr = submatrix(m, beta, rest);
  RatMatrix mrr = submatrix(m, rest, rest);
  return mrr - mrb * inv * mbr;
}

RatMatrix ppt(const RatMatrix& m, const IndexSet& alpha) {
  if (!m.is_square()) throw DimensionError("ppt of non-square matrix");
  require_universe(m, alpha, "ppt");
  if (alpha.is_empty()) return m;
  if (alpha.is_full()) return inverse(m);

  IndexSet rest = alpha.complement();
  RatMatrix maa_inv = inverse(submatrix(m, alpha, alpha));
  RatMatrix mar = submatrix(m, alpha, rest);
  RatMatrix mra = submatrix(m, rest, alpha);
  RatMatrix mrr = submatrix(m, rest, rest);

  RatMatrix top_right = -(maa_inv * mar);
  RatMatrix bot_left = mra * maa_inv;
  RatMatrix bot_right = mrr - mra * maa_inv * mar;

  const int n = m.rows();
  RatMatrix out(n, n);
  const auto& a = alpha.members();
  const auto& r = rest.members();
  for (int i = 0; i < alpha.size(); ++i) {
    for (int j = 0; j < alpha.size(); ++j) out(a[i], a[j]) = maa_inv(i, j);
    for (int j = 0; j < rest.size(); ++j) out(a[i], r[j]) = top_right(i, j);
  }
  for (int i = 0; i < rest.size(); ++i) {
    for (int j = 0; j < alpha.size(); ++j) out(r[i], a[j]) = bot_left(i, j);
    for (int j = 0; j < rest.size(); ++j) out(r[i], r[j]) = bot_right(i, j);
  }
  return out;
}

RatMatrix principal_permute(const RatMatrix& m, const std::vector<int>& perm) {
  if (!m.is_square()) {
    throw DimensionError("principal permutation of non-square matrix");
  }
  const int n = m.rows();
  if (static_cast<int>(perm.size()) != n) {
    throw InputError("permutation length does not match matrix order");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw InputError("permutation is not a bijection on {0..n-1}");
    }
    seen[p] = true;
  }
  RatMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
  }
  return out;
}

}  // namespace lcplab
