// Copyright 2026 The aqspace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aq/exact_scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "aq/errors.hpp"

namespace aq {
namespace {

int unify(int p, int q) {
  if (p == 0) return q;
  if (q == 0 || p == q) return p;
  throw BaseMismatch("exact scalars over sqrt(" + std::to_string(p) +
                     ") and sqrt(" + std::to_string(q) + ") do not mix");
}

// Returns s with s*s == q, or 0 when q is not a perfect square.
long exact_root(int q) {
  Integer z(q);
  if (!mpz_perfect_square_p(z.get_mpz_t())) return 0;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
  return s.get_si();
}

std::string coefficient_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_str();
  return "(" + r.get_str() + ")";
}

}  // namespace

ExactScalar::ExactScalar(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("base q must be >= 2");
}

ExactScalar::ExactScalar(Rational a, Rational b, int q)
    : q_(q), a_(std::move(a)), b_(std::move(b)) {
  if (q < 2) throw std::invalid_argument("base q must be >= 2");
  normalize();
}

void ExactScalar::normalize() {
  if (sgn(b_) == 0) return;
  if (const long s = exact_root(q_); s != 0) {
    a_ += b_ * s;
    b_ = 0;
  }
}

int ExactScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 against q*b^2
  const int cmp_sq = cmp(Rational(a_ * a_), Rational(b_ * b_ * q_));
  return sa > 0 ? cmp_sq : -cmp_sq;
}

Rational ExactScalar::norm() const { return a_ * a_ - q_ * b_ * b_; }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  q_ = unify(q_, o.q_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  q_ = unify(q_, o.q_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  const int q = unify(q_, o.q_);
  Rational a = a_ * o.a_ + q * (b_ * o.b_);
  Rational b = a_ * o.b_ + b_ * o.a_;
  q_ = q;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  return *this *= ext_inv(o);
}

ExactScalar& ExactScalar::operator*=(const Rational& r) {
  a_ *= r;
  b_ *= r;
  return *this;
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_zero() && y.is_zero()) return true;
  unify(x.q_, y.q_);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

void fma(ExactScalar& acc, const ExactScalar& x, const ExactScalar& y) {
  const bool xa = sgn(x.a_) != 0;
  const bool xb = sgn(x.b_) != 0;
  const bool ya = sgn(y.a_) != 0;
  const bool yb = sgn(y.b_) != 0;
  if (!(xa || xb) || !(ya || yb)) return;
  acc.q_ = unify(acc.q_, unify(x.q_, y.q_));

  thread_local Rational t;
  if (xa && ya) {
    mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
    mpq_add(acc.a_.get_mpq_t(), acc.a_.get_mpq_t(), t.get_mpq_t());
  }
  if (xb && yb) {
    mpq_mul(t.get_mpq_t(), x.b_.get_mpq_t(), y.b_.get_mpq_t());
    mpz_mul_ui(mpq_numref(t.get_mpq_t()), mpq_numref(t.get_mpq_t()),
               static_cast<unsigned long>(acc.q_));
    mpq_canonicalize(t.get_mpq_t());
    mpq_add(acc.a_.get_mpq_t(), acc.a_.get_mpq_t(), t.get_mpq_t());
  }
  if (xa && yb) {
    mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.b_.get_mpq_t());
    mpq_add(acc.b_.get_mpq_t(), acc.b_.get_mpq_t(), t.get_mpq_t());
  }
  if (xb && ya) {
    mpq_mul(t.get_mpq_t(), x.b_.get_mpq_t(), y.a_.get_mpq_t());
    mpq_add(acc.b_.get_mpq_t(), acc.b_.get_mpq_t(), t.get_mpq_t());
  }
}

std::string ExactScalar::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  const std::string root = "sqrt(" + std::to_string(q_) + ")";
  const Rational mag = abs(b_);
  std::string irrational = mag == 1 ? root : coefficient_str(mag) + "*" + root;
  if (sgn(a_) == 0) return sgn(b_) < 0 ? "-" + irrational : irrational;
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + irrational;
}

ExactScalar ext_mul(const ExactScalar& x, const ExactScalar& y) { return x * y; }

ExactScalar ext_inv(const ExactScalar& x) {
  if (x.is_zero()) throw std::domain_error("division by zero in Q(sqrt(q))");
  const Rational n = x.norm();
  // a^2 = q b^2 with (a,b) != 0 would make sqrt(q) rational
  if (sgn(n) == 0) throw std::logic_error("zero norm for a nonzero scalar");
  return ExactScalar(x.a() / n, -x.b() / n, x.base());
}

ExactScalar sqrt_q_power(int q, int k) {
  const int half = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
  Rational scale(1);
  if (half >= 0) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(half));
    scale = p;
  } else {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(-half));
    scale = Rational(1) / Rational(p);
  }
  if (k - 2 * half == 0) return ExactScalar::rational(scale, q);
  return ExactScalar(Rational(0), scale, q);
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

}  // namespace aq
