#include "qpi/approx.hpp"

#include <cmath>
#include <vector>

namespace qpi {

namespace {

constexpr mpfr_prec_t kGuardBits = 16;

mpfr_prec_t joint_prec(const ApproxScalar& a, const ApproxScalar& b) {
  return std::max(a.precision().bits(), b.precision().bits());
}

// Enclosure endpoints [x - err, x + err] with outward rounding.
struct Interval {
  detail::Mpfr lo;
  detail::Mpfr hi;
};

Interval enclosure(const ApproxScalar& x, mpfr_prec_t prec) {
  Interval iv{detail::Mpfr(prec), detail::Mpfr(prec)};
  mpfr_sub(iv.lo.get(), x.value(), x.err().get(), MPFR_RNDD);
  mpfr_add(iv.hi.get(), x.value(), x.err().get(), MPFR_RNDU);
  return iv;
}

// Evaluates a monotone function over the enclosure of x.  The center is
// rounded to nearest; the error covers both directed-rounded endpoints.
template <class Fn>
ApproxScalar monotone(const ApproxScalar& x, bool increasing, Fn&& fn) {
  const mpfr_prec_t prec = x.precision().bits();
  Interval iv = enclosure(x, prec);
  detail::Mpfr center(prec), lower(prec), upper(prec);
  fn(center.get(), x.value(), MPFR_RNDN);
  if (increasing) {
    fn(lower.get(), iv.lo.get(), MPFR_RNDD);
    fn(upper.get(), iv.hi.get(), MPFR_RNDU);
  } else {
    fn(lower.get(), iv.hi.get(), MPFR_RNDD);
    fn(upper.get(), iv.lo.get(), MPFR_RNDU);
  }
  if (!mpfr_number_p(lower.get()) || !mpfr_number_p(upper.get()) ||
      !mpfr_number_p(center.get())) {
    throw DomainError("monotone evaluation left the domain");
  }
  Bound up_gap, down_gap;
  mpfr_sub(up_gap.data(), upper.get(), center.get(), MPFR_RNDU);
  mpfr_sub(down_gap.data(), center.get(), lower.get(), MPFR_RNDU);
  Bound err = max(up_gap, down_gap);
  if (mpfr_sgn(err.get()) < 0) mpfr_set_zero(err.data(), 1);
  return ApproxScalar(std::move(center), std::move(err));
}

}  // namespace

Precision::Precision(mpfr_prec_t b, int d) : bits_(b), digits_(d) {
  if (digits_ == 0) {
    digits_ = static_cast<int>(std::floor(static_cast<double>(b - kGuardBits) *
                                          std::log10(2.0)));
    if (digits_ < 1) digits_ = 1;
  }
}

Precision Precision::digits(int decimal_digits) {
  if (decimal_digits < 1) throw DomainError("precision must be >= 1 digit");
  const auto b = static_cast<mpfr_prec_t>(
      std::ceil(decimal_digits * std::log2(10.0))) + kGuardBits;
  return Precision(b, decimal_digits);
}

// ---- Bound ----------------------------------------------------------------

Bound::Bound(double d) : v_(kBits) {
  if (!(d >= 0)) throw DomainError("Bound must be nonnegative");
  mpfr_set_d(v_.get(), d, MPFR_RNDU);
}

Bound Bound::abs_of(mpfr_srcptr x) {
  Bound b;
  mpfr_abs(b.v_.get(), x, MPFR_RNDU);
  return b;
}

Bound Bound::pow10(long e) {
  Bound b;
  mpfr_set_ui(b.v_.get(), 10, MPFR_RNDU);
  detail::Mpfr ten(kBits);
  mpfr_set_ui(ten.get(), 10, MPFR_RNDU);
  mpfr_pow_si(b.v_.get(), ten.get(), e, MPFR_RNDU);
  return b;
}

Bound Bound::pow2(long e) {
  Bound b;
  mpfr_set_ui_2exp(b.v_.get(), 1, e, MPFR_RNDU);
  return b;
}

Bound Bound::infinity() {
  Bound b;
  mpfr_set_inf(b.v_.get(), 1);
  return b;
}

std::string Bound::str() const {
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.3Re", v_.get());
  return buf;
}

Bound& Bound::operator+=(const Bound& o) {
  mpfr_add(v_.get(), v_.get(), o.v_.get(), MPFR_RNDU);
  return *this;
}

Bound& Bound::operator*=(const Bound& o) {
  mpfr_mul(v_.get(), v_.get(), o.v_.get(), MPFR_RNDU);
  return *this;
}

Bound operator/(const Bound& a, const Bound& b) {
  if (b.is_zero()) return Bound::infinity();
  Bound r;
  mpfr_div(r.v_.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
  return r;
}

Bound expm1(const Bound& x) {
  Bound r;
  mpfr_expm1(r.v_.get(), x.v_.get(), MPFR_RNDU);
  return r;
}

// ---- ApproxScalar -----------------------------------------------------------

ApproxScalar::ApproxScalar(Precision prec) : value_(prec.bits()) {}

ApproxScalar::ApproxScalar(long v, Precision prec) : value_(prec.bits()) {
  add_rounding(mpfr_set_si(value_.get(), v, MPFR_RNDN));
}

ApproxScalar::ApproxScalar(Frac v, Precision prec) : value_(prec.bits()) {
  if (v.is_integer()) {
    add_rounding(mpfr_set_si(value_.get(), v.num(), MPFR_RNDN));
  } else {
    *this = ApproxScalar(ExactScalar(v), prec);
  }
}

ApproxScalar::ApproxScalar(const ExactScalar& v, Precision prec)
    : value_(prec.bits()) {
  add_rounding(mpfr_set_q(value_.get(), v.raw().get_mpq_t(), MPFR_RNDN));
}

ApproxScalar::ApproxScalar(detail::Mpfr value, Bound err)
    : value_(std::move(value)), err_(std::move(err)) {}

void ApproxScalar::add_rounding(int ternary) {
  if (ternary == 0) return;
  Bound r = Bound::abs_of(value_.get());
  mpfr_mul_2si(r.v_.get(), r.v_.get(), 1 - value_.prec(), MPFR_RNDU);
  err_ += r;
}

std::string ApproxScalar::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_.get());
  return buf.data();
}

bool ApproxScalar::contains_zero() const { return abs_lower().is_zero(); }

bool ApproxScalar::certainly_positive() const {
  return mpfr_sgn(value_.get()) > 0 && !contains_zero();
}

bool ApproxScalar::certainly_negative() const {
  return mpfr_sgn(value_.get()) < 0 && !contains_zero();
}

Bound ApproxScalar::abs_upper() const { return Bound::abs_of(value_.get()) + err_; }

Bound ApproxScalar::abs_lower() const {
  Bound r;
  mpfr_abs(r.v_.get(), value_.get(), MPFR_RNDD);
  mpfr_sub(r.v_.get(), r.v_.get(), err_.v_.get(), MPFR_RNDD);
  if (mpfr_sgn(r.v_.get()) <= 0) mpfr_set_zero(r.v_.get(), 1);
  return r;
}

ApproxScalar ApproxScalar::operator-() const {
  ApproxScalar r(*this);
  mpfr_neg(r.value_.get(), r.value_.get(), MPFR_RNDN);
  return r;
}

ApproxScalar& ApproxScalar::operator+=(const ApproxScalar& o) {
  const mpfr_prec_t prec = joint_prec(*this, o);
  if (prec != value_.prec()) mpfr_prec_round(value_.get(), prec, MPFR_RNDN);
  err_ += o.err_;
  add_rounding(mpfr_add(value_.get(), value_.get(), o.value_.get(), MPFR_RNDN));
  return *this;
}

ApproxScalar& ApproxScalar::operator-=(const ApproxScalar& o) {
  const mpfr_prec_t prec = joint_prec(*this, o);
  if (prec != value_.prec()) mpfr_prec_round(value_.get(), prec, MPFR_RNDN);
  err_ += o.err_;
  add_rounding(mpfr_sub(value_.get(), value_.get(), o.value_.get(), MPFR_RNDN));
  return *this;
}

ApproxScalar& ApproxScalar::operator*=(const ApproxScalar& o) {
  const mpfr_prec_t prec = joint_prec(*this, o);
  if (prec != value_.prec()) mpfr_prec_round(value_.get(), prec, MPFR_RNDN);
  // |a|eb + |b|ea + ea*eb
  Bound e = Bound::abs_of(value_.get()) * o.err_;
  e += Bound::abs_of(o.value_.get()) * err_;
  e += err_ * o.err_;
  err_ = std::move(e);
  add_rounding(mpfr_mul(value_.get(), value_.get(), o.value_.get(), MPFR_RNDN));
  return *this;
}

ApproxScalar& ApproxScalar::operator/=(const ApproxScalar& o) {
  const Bound denom_low = o.abs_lower();
  if (denom_low.is_zero()) {
    throw PoleError("division by a quantity not separated from zero");
  }
  const mpfr_prec_t prec = joint_prec(*this, o);
  if (prec != value_.prec()) mpfr_prec_round(value_.get(), prec, MPFR_RNDN);
  const Bound num_err = err_;
  const int t = mpfr_div(value_.get(), value_.get(), o.value_.get(), MPFR_RNDN);
  // |a/b|, bounded above by the rounded quotient plus one rounding.
  Bound ratio = Bound::abs_of(value_.get());
  Bound slack = ratio;
  mpfr_mul_2si(slack.v_.get(), slack.v_.get(), 1 - prec, MPFR_RNDU);
  ratio += slack;
  err_ = (num_err + ratio * o.err_) / denom_low;
  add_rounding(t);
  return *this;
}

ApproxScalar& ApproxScalar::widen(const Bound& extra) {
  err_ += extra;
  return *this;
}

// ---- free functions ----------------------------------------------------------

ApproxScalar approx_from_exact(const ExactScalar& x, int digits) {
  return ApproxScalar(x, Precision::digits(digits));
}

ApproxScalar pow(const ApproxScalar& x, long n) {
  if (n < 0) {
    return ApproxScalar(1, x.precision()) / pow(x, -n);
  }
  ApproxScalar result(1, x.precision());
  ApproxScalar base = x;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

ApproxScalar abs(const ApproxScalar& x) {
  return mpfr_sgn(x.value()) < 0 ? -x : x;
}

ApproxScalar sqrt(const ApproxScalar& x) {
  if (mpfr_sgn(x.value()) < 0 || x.certainly_negative()) {
    throw DomainError("sqrt of a negative quantity");
  }
  if (!x.certainly_positive()) throw DomainError("sqrt argument not separated from zero");
  return monotone(x, true, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    return mpfr_sqrt(r, a, rnd);
  });
}

ApproxScalar root(const ApproxScalar& x, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (!x.certainly_positive()) throw DomainError("root of a quantity not certainly positive");
  return monotone(x, true, [n](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    return mpfr_rootn_ui(r, a, n, rnd);
  });
}

ApproxScalar pow(const ApproxScalar& x, Frac y) {
  if (y.is_integer()) return pow(x, static_cast<long>(y.num()));
  const ApproxScalar r = root(x, static_cast<unsigned long>(y.den()));
  const long n = static_cast<long>(y.num());
  // r > 0, so r^n is monotone with direction given by sign(n).
  return monotone(r, n >= 0, [n](mpfr_ptr out, mpfr_srcptr a, mpfr_rnd_t rnd) {
    return mpfr_pow_si(out, a, n, rnd);
  });
}

ApproxScalar exp(const ApproxScalar& x) {
  return monotone(x, true, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    return mpfr_exp(r, a, rnd);
  });
}

ApproxScalar log(const ApproxScalar& x) {
  if (!x.certainly_positive()) throw DomainError("log of a quantity not certainly positive");
  return monotone(x, true, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) {
    return mpfr_log(r, a, rnd);
  });
}

Bound distance(const ApproxScalar& a, const ApproxScalar& b) {
  detail::Mpfr d(joint_prec(a, b));
  mpfr_sub(d.get(), a.value(), b.value(), MPFR_RNDA);
  return Bound::abs_of(d.get());
}

}  // namespace qpi
