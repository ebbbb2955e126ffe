#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "qpi/errors.hpp"
#include "qpi/frac.hpp"

namespace qpi {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator.  Backed by GMP's mpq_class.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : v_(v) {}  // NOLINT
  ExactScalar(Frac f) : v_(f.num(), f.den()) { v_.canonicalize(); }  // NOLINT
  ExactScalar(const mpz_class& num, const mpz_class& den);
  explicit ExactScalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Parses "a/b", "-a", or a finite decimal "0.125" exactly.
  static ExactScalar parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  ExactScalar operator-() const {
    ExactScalar r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }
  ExactScalar& operator+=(const ExactScalar& o) {
    v_ += o.v_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    v_ -= o.v_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    v_ *= o.v_;
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) {
    return a.v_ < b.v_;
  }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return b < a; }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    return os << x.str();
  }

  // Adopts a value the caller guarantees is already canonical.
  static ExactScalar adopt_canonical(mpq_class v) {
    ExactScalar r;
    r.v_ = std::move(v);
    return r;
  }

 private:
  mpq_class v_;
};

// x^n, exact.  Throws DomainError for 0^n with n < 0.
ExactScalar exact_pow(const ExactScalar& x, long n);
ExactScalar abs(const ExactScalar& x);

}  // namespace qpi
