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

#include "lcplab/rat.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace lcplab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw InputError("invalid rational literal: \"" + std::string(text) + "\"");
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rat Rat::from_mpq(mpq_class v) {
  v.canonicalize();
  Rat r;
  r.v_ = std::move(v);
  return r;
}

Rat Rat::from_mpz(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  return from_mpq(mpq_class(num, den));
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_literal(text);

  auto slash = s.find('/');
  auto dot = s.find('.');
  mpz_class num, den;
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) bad_literal(text);
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_literal(text);
    // Explicit base 10: the default base-0 constructor would read a leading
    // zero as an octal prefix.
    num = mpz_class(std::string(p), 10);
    den = mpz_class(std::string(q), 10);
    if (den == 0) bad_literal(text);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad_literal(text);
    if (!ip.empty() && !all_digits(ip)) bad_literal(text);
    if (!fp.empty() && !all_digits(fp)) bad_literal(text);
    std::string digits = std::string(ip) + std::string(fp);
    if (digits.empty()) bad_literal(text);
    num = mpz_class(digits, 10);
    den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
  } else {
    if (!all_digits(s)) bad_literal(text);
    num = mpz_class(std::string(s), 10);
    den = 1;
  }
  if (neg) num = -num;
  return from_mpz(num, den);
}

bool Rat::fits_long() const { return v_.get_num().fits_slong_p() != 0; }

long Rat::to_long() const {
  if (!is_integer() || !fits_long()) {
    throw ArithmeticError("rational does not fit a machine integer: " + str());
  }
  return v_.get_num().get_si();
}

Rat Rat::abs() const { return from_mpq(::abs(v_)); }

Rat Rat::reciprocal() const {
  if (is_zero()) throw ArithmeticError("reciprocal of zero");
  return from_mpq(1 / v_);
}

Rat Rat::operator-() const { return from_mpq(mpq_class(-v_)); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rat acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_add: length mismatch");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_sub: length mismatch");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_all_nonneg(const RatVec& a) {
  for (const Rat& x : a) {
    if (x.sign() < 0) return false;
  }
  return true;
}

bool vec_all_pos(const RatVec& a) {
  for (const Rat& x : a) {
    if (x.sign() <= 0) return false;
  }
  return true;
}

bool vec_all_zero(const RatVec& a) {
  for (const Rat& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string vec_str(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  os << ")";
  return os.str();
}

}  // namespace lcplab
