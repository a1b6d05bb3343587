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

#ifndef LCPLAB_RAT_HPP_
#define LCPLAB_RAT_HPP_

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcplab/error.hpp"

namespace lcplab {

// Exact rational scalar. Invariant: always in lowest terms with positive
// denominator. All operations are exact; there is no rounding anywhere.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}    // NOLINT: implicit by design, ints are rationals
  Rat(long n) : v_(n) {}   // NOLINT
  Rat(long num, long den);

  // Accepts "p", "p/q" (q > 0), or exact decimal strings like "-1.6".
  // Decimal literals convert exactly: "1.6" == 8/5, "0.1" == 1/10.
  static Rat parse(std::string_view text);
  static Rat from_mpq(mpq_class v);
  static Rat from_mpz(const mpz_class& num, const mpz_class& den);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool fits_long() const;
  long to_long() const;  // requires is_integer() && fits_long()

  Rat abs() const;
  Rat reciprocal() const;

  // Canonical text form: "p" when integral, else "p/q".
  std::string str() const { return v_.get_str(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

using RatVec = std::vector<Rat>;

// Small exact-vector helpers shared across modules.
Rat dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
bool vec_all_nonneg(const RatVec& a);
bool vec_all_pos(const RatVec& a);
bool vec_all_zero(const RatVec& a);
std::string vec_str(const RatVec& a);

}  // namespace lcplab

#endif  // LCPLAB_RAT_HPP_
