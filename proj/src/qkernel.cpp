#include "qpi/qkernel.hpp"

#include <omp.h>

#include <cmath>
#include <vector>

namespace qpi {

namespace {

constexpr long kMaxFactors = 100'000'000;
constexpr long kParallelThreshold = 4 * kProductChunk;

// Lower bound on 1 - b (b a Bound), rounded down.
Bound one_minus_lower(const Bound& b) {
  Bound r;
  mpfr_ui_sub(r.data(), 1, b.get(), MPFR_RNDD);
  return r;
}

Bound bound_pow(const Bound& b, long n) {
  Bound r;
  mpfr_pow_ui(r.data(), b.get(), static_cast<unsigned long>(n), MPFR_RNDU);
  return r;
}

// prod_{j=begin}^{end-1} (1 - X Q^j), value only.
void chunk_product(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr q, long begin, long end,
                   mpfr_prec_t prec) {
  detail::Mpfr y(prec), f(prec);
  mpfr_pow_ui(y.get(), q, static_cast<unsigned long>(begin), MPFR_RNDN);
  mpfr_mul(y.get(), y.get(), x, MPFR_RNDN);
  mpfr_set_ui(out, 1, MPFR_RNDN);
  for (long j = begin; j < end; ++j) {
    mpfr_ui_sub(f.get(), 1, y.get(), MPFR_RNDN);
    mpfr_mul(out, out, f.get(), MPFR_RNDN);
    mpfr_mul(y.get(), y.get(), q, MPFR_RNDN);
  }
}

void body_serial(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr q, long count, mpfr_prec_t prec) {
  detail::Mpfr y(prec), f(prec);
  mpfr_set(y.get(), x, MPFR_RNDN);
  mpfr_set_ui(out, 1, MPFR_RNDN);
  for (long j = 0; j < count; ++j) {
    mpfr_ui_sub(f.get(), 1, y.get(), MPFR_RNDN);
    mpfr_mul(out, out, f.get(), MPFR_RNDN);
    mpfr_mul(y.get(), y.get(), q, MPFR_RNDN);
  }
}

// Chunk boundaries depend only on `count`, never on the thread count, so
// the result is reproducible on any machine.
void body_parallel(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr q, long count, mpfr_prec_t prec) {
  const long chunks = (count + kProductChunk - 1) / kProductChunk;
  std::vector<detail::Mpfr> partial;
  partial.reserve(static_cast<std::size_t>(chunks));
  for (long c = 0; c < chunks; ++c) partial.emplace_back(prec);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < chunks; ++c) {
    const long begin = c * kProductChunk;
    const long end = std::min(count, begin + kProductChunk);
    chunk_product(partial[static_cast<std::size_t>(c)].get(), x, q, begin, end, prec);
  }
  mpfr_set_ui(out, 1, MPFR_RNDN);
  for (auto& p : partial) mpfr_mul(out, out, p.get(), MPFR_RNDN);
}

}  // namespace

ExactScalar qpoch_rising(const ExactScalar& x, const ExactScalar& q, Length n) {
  if (n.is_infinite()) throw ModeError("infinite q-factorial requested in exact mode");
  return qpoch_rising<ExactScalar>(x, q, n.value());
}

ApproxScalar qpoch_infinite(const ApproxScalar& x, const ApproxScalar& q, Exec exec) {
  if (!q.certainly_positive()) throw DomainError("infinite q-factorial needs q > 0");
  const Bound q_hi = q.abs_upper();
  if (!(q_hi < Bound(1.0))) throw DomainError("infinite q-factorial needs q < 1");
  const Precision prec = x.precision().bits() >= q.precision().bits() ? x.precision()
                                                                        : q.precision();

  // Head: factors with |x q^k| >= 1/2, fully error-tracked.
  ApproxScalar head(1, prec);
  ApproxScalar y = x;
  const Bound half(0.5);
  long k = 0;
  while (y.abs_upper() >= half) {
    head *= 1 - y;
    y *= q;
    if (++k > kMaxFactors) throw ConvergenceError("infinite q-factorial head too long");
  }
  if (y.is_exact_zero()) return head;

  // Body: value-only product of (1 - Y Q^j), j < count, with Y = center of
  // y and Q = center of q.  Its error is bounded a priori.
  const Bound x_hi = y.abs_upper();
  const Bound gap = one_minus_lower(q_hi);  // 1 - q, rounded down
  const Bound eps = Bound::pow2(-static_cast<long>(prec.bits()));
  Bound target;
  mpfr_mul(target.data(), eps.get(), gap.get(), MPFR_RNDD);

  long count = 0;
  {
    const double lx = mpfr_get_d(x_hi.get(), MPFR_RNDN);
    const double lq = mpfr_get_d(q_hi.get(), MPFR_RNDN);
    const double lt = std::log2(mpfr_get_d(gap.get(), MPFR_RNDN)) -
                      static_cast<double>(prec.bits());
    const double est = (lt - std::log2(lx)) / std::log2(lq);
    if (!(est < static_cast<double>(kMaxFactors))) {
      throw ConvergenceError("infinite q-factorial needs too many factors (q too close to 1)");
    }
    count = est > 0 ? static_cast<long>(std::ceil(est)) : 0;
  }
  Bound tail_lead = x_hi * bound_pow(q_hi, count);
  while (!(tail_lead < target)) {
    ++count;
    tail_lead = tail_lead * q_hi;
  }

  const mpfr_prec_t bits = prec.bits();
  detail::Mpfr body(bits);
  const bool parallel =
      exec == Exec::kParallel || (exec == Exec::kAuto && count >= kParallelThreshold);
  if (parallel) {
    body_parallel(body.get(), y.value(), q.value(), count, bits);
  } else {
    body_serial(body.get(), y.value(), q.value(), count, bits);
  }

  // Rounding: 4.1 u [X (1/(1-q)^2 + 2/(1-q)) + N]
  const Bound inv_gap = Bound(1.0) / gap;
  const Bound u = Bound::pow2(1 - static_cast<long>(bits));
  Bound tau = Bound(4.1) * u *
              (x_hi * (inv_gap * inv_gap + Bound(2.0) * inv_gap) +
               Bound(static_cast<double>(count)));
  // Input perturbation of the center values: 2 (e_y/(1-q) + X e_q/(1-q)^2)
  tau += Bound(2.0) * (y.err() * inv_gap + x_hi * q.err() * inv_gap * inv_gap);
  // Truncated tail: X q^N / ((1-q)(1 - X q^N))
  tau += tail_lead / (gap * one_minus_lower(tail_lead));

  Bound err = Bound::abs_of(body.get()) * expm1(tau);
  return head * ApproxScalar(std::move(body), std::move(err));
}

ApproxScalar qpoch_rising(const ApproxScalar& x, const ApproxScalar& q, Length n, Exec exec) {
  if (n.is_infinite()) return qpoch_infinite(x, q, exec);
  return qpoch_rising<ApproxScalar>(x, q, n.value());
}

ApproxScalar qpoch_multi(const std::vector<ApproxScalar>& nums,
                         const std::vector<ApproxScalar>& dens, const ApproxScalar& q,
                         Length n) {
  if (!n.is_infinite()) return qpoch_multi<ApproxScalar>(nums, dens, q, n.value());
  ApproxScalar r = unit_like(q);
  for (std::size_t j = 0; j < dens.size(); ++j) {
    ApproxScalar d = qpoch_infinite(dens[j], q);
    if (d.contains_zero()) {
      throw PoleError("denominator factor #" + std::to_string(j) + " of infinite quotient vanishes");
    }
    r /= d;
  }
  for (const auto& x : nums) r *= qpoch_infinite(x, q);
  return r;
}

ApproxScalar qgamma_at(Frac x, const ApproxScalar& base) {
  if (x.is_integer() && x.num() <= 0) {
    throw DomainError("q-gamma pole at x = " + x.str());
  }
  const ApproxScalar one_minus = 1 - base;
  if (x.is_integer()) {
    // (Q;Q)_inf / (Q^x;Q)_inf = (Q;Q)_{x-1}
    const long m = x.num() - 1;
    return qpoch_rising<ApproxScalar>(base, base, m) / pow(one_minus, m);
  }
  ApproxScalar r = pow(one_minus, Frac(1) - x);
  r *= qpoch_infinite(base, base);
  r /= qpoch_infinite(pow(base, x), base);
  return r;
}

ApproxScalar qgamma(Frac x, const QPoint<ApproxScalar>& point, Frac base_exponent) {
  return qgamma_at(x, point.power(base_exponent));
}

}  // namespace qpi
