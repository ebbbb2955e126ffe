#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "qpi/errors.hpp"
#include "qpi/exact.hpp"
#include "qpi/frac.hpp"

namespace qpi {

// Working precision.  Constructed from decimal digits; carries a few guard
// bits beyond digits*log2(10).
class Precision {
 public:
  static constexpr int kDefaultDigits = 50;

  static Precision digits(int decimal_digits);
  static Precision bits(mpfr_prec_t b) { return Precision(b); }

  mpfr_prec_t bits() const { return bits_; }
  int decimal_digits() const { return digits_; }

  friend bool operator==(Precision a, Precision b) { return a.bits_ == b.bits_; }

 private:
  explicit Precision(mpfr_prec_t b, int d = 0);
  mpfr_prec_t bits_;
  int digits_;
};

namespace detail {

// Owning RAII handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    *v_ = *o.v_;
    o.v_->_mpfr_d = nullptr;
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    std::swap(*v_, *o.v_);
    return *this;
  }
  ~Mpfr() {
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

}  // namespace detail

// Nonnegative upper bound on an error or magnitude.  All arithmetic rounds
// toward +inf, so results stay valid upper bounds.
class Bound {
 public:
  static constexpr mpfr_prec_t kBits = 64;

  Bound() : v_(kBits) {}
  explicit Bound(double d);
  // |x| rounded up.
  static Bound abs_of(mpfr_srcptr x);
  static Bound pow10(long e);
  static Bound pow2(long e);
  static Bound infinity();

  bool is_zero() const { return mpfr_zero_p(v_.get()) != 0; }
  bool is_finite() const { return mpfr_number_p(v_.get()) != 0; }
  double to_double() const { return mpfr_get_d(v_.get(), MPFR_RNDU); }
  // floor(log10(x)) style magnitude, for reporting only.
  std::string str() const;
  mpfr_srcptr get() const { return v_.get(); }
  mpfr_ptr data() { return v_.get(); }

  Bound& operator+=(const Bound& o);
  Bound& operator*=(const Bound& o);
  friend Bound operator+(Bound a, const Bound& b) { return a += b; }
  friend Bound operator*(Bound a, const Bound& b) { return a *= b; }
  // a / b rounded up; b must be positive.
  friend Bound operator/(const Bound& a, const Bound& b);

  friend bool operator<(const Bound& a, const Bound& b) {
    return mpfr_less_p(a.v_.get(), b.v_.get()) != 0;
  }
  friend bool operator<=(const Bound& a, const Bound& b) {
    return mpfr_lessequal_p(a.v_.get(), b.v_.get()) != 0;
  }
  friend bool operator>(const Bound& a, const Bound& b) { return b < a; }
  friend bool operator>=(const Bound& a, const Bound& b) { return b <= a; }

  friend Bound max(const Bound& a, const Bound& b) { return a < b ? b : a; }
  // e^x - 1 rounded up, for x >= 0.
  friend Bound expm1(const Bound& x);

 private:
  friend class ApproxScalar;
  detail::Mpfr v_;
};

// Floating value at a fixed working precision together with a certified
// absolute error bound: the represented quantity lies in
// [value - err, value + err].  Every operation widens err by the worst-case
// propagated input error plus its own rounding error.
class ApproxScalar {
 public:
  explicit ApproxScalar(Precision prec);
  ApproxScalar(long v, Precision prec);
  ApproxScalar(Frac v, Precision prec);
  ApproxScalar(const ExactScalar& v, Precision prec);
  // Adopts a value with an explicit error bound.
  ApproxScalar(detail::Mpfr value, Bound err);

  Precision precision() const { return Precision::bits(value_.prec()); }
  mpfr_srcptr value() const { return value_.get(); }
  const Bound& err() const { return err_; }

  double to_double() const { return mpfr_get_d(value_.get(), MPFR_RNDN); }
  // Scientific notation with `digits` significant digits.
  std::string str(int digits = 20) const;

  bool is_exact_zero() const { return mpfr_zero_p(value_.get()) && err_.is_zero(); }
  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  // Upper bound on |x| over the enclosure.
  Bound abs_upper() const;
  // Lower bound on |x| over the enclosure (zero if the enclosure straddles 0).
  Bound abs_lower() const;

  ApproxScalar operator-() const;
  ApproxScalar& operator+=(const ApproxScalar& o);
  ApproxScalar& operator-=(const ApproxScalar& o);
  ApproxScalar& operator*=(const ApproxScalar& o);
  ApproxScalar& operator/=(const ApproxScalar& o);

  friend ApproxScalar operator+(ApproxScalar a, const ApproxScalar& b) { return a += b; }
  friend ApproxScalar operator-(ApproxScalar a, const ApproxScalar& b) { return a -= b; }
  friend ApproxScalar operator*(ApproxScalar a, const ApproxScalar& b) { return a *= b; }
  friend ApproxScalar operator/(ApproxScalar a, const ApproxScalar& b) { return a /= b; }

  friend ApproxScalar operator+(ApproxScalar a, long b) { return a += ApproxScalar(b, a.precision()); }
  friend ApproxScalar operator+(long a, ApproxScalar b) { return b += ApproxScalar(a, b.precision()); }
  friend ApproxScalar operator-(ApproxScalar a, long b) { return a -= ApproxScalar(b, a.precision()); }
  friend ApproxScalar operator-(long a, const ApproxScalar& b) { return ApproxScalar(a, b.precision()) -= b; }
  friend ApproxScalar operator*(ApproxScalar a, long b) { return a *= ApproxScalar(b, a.precision()); }
  friend ApproxScalar operator*(long a, ApproxScalar b) { return b *= ApproxScalar(a, b.precision()); }
  friend ApproxScalar operator/(ApproxScalar a, long b) { return a /= ApproxScalar(b, a.precision()); }
  friend ApproxScalar operator/(long a, const ApproxScalar& b) { return ApproxScalar(a, b.precision()) /= b; }

  // Widens the enclosure by `extra`.
  ApproxScalar& widen(const Bound& extra);

 private:
  void add_rounding(int ternary);

  detail::Mpfr value_;
  Bound err_;
};

ApproxScalar approx_from_exact(const ExactScalar& x, int digits);
ApproxScalar pow(const ApproxScalar& x, long n);
ApproxScalar abs(const ApproxScalar& x);
ApproxScalar sqrt(const ApproxScalar& x);
// x^(1/n) for x > 0.
ApproxScalar root(const ApproxScalar& x, unsigned long n);
// x^y for x > 0 and rational y.
ApproxScalar pow(const ApproxScalar& x, Frac y);
ApproxScalar exp(const ApproxScalar& x);
ApproxScalar log(const ApproxScalar& x);

// |a - b| as an upper bound over both enclosures' centers (the residual).
Bound distance(const ApproxScalar& a, const ApproxScalar& b);

}  // namespace qpi
