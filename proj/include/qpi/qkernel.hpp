#pragma once

// q-shifted factorials, Gaussian binomials and the q-gamma function.
// Finite-length kernels are templates over the scalar type; infinite
// products exist only in certified-approximate mode.

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qpi/approx.hpp"
#include "qpi/errors.hpp"
#include "qpi/exact.hpp"
#include "qpi/frac.hpp"
#include "qpi/scalar.hpp"

namespace qpi {

// Number of factors: a nonnegative integer or infinity.
class Length {
 public:
  Length(long n) : n_(n) {  // NOLINT
    if (n < 0) throw DomainError("negative factorial length");
  }
  static Length infinite() {
    Length l(0);
    l.n_ = -1;
    return l;
  }
  bool is_infinite() const { return n_ < 0; }
  long value() const { return n_; }

 private:
  long n_;
};

// (x;q)_n = (1-x)(1-qx)...(1-q^{n-1}x)
template <class S>
S qpoch_rising(const S& x, const S& q, long n) {
  S r = unit_like(q);
  S y = x;
  for (long k = 0; k < n; ++k) {
    r *= 1 - y;
    if (k + 1 < n) y *= q;
  }
  return r;
}

// <x;q>_n = (1-x)(1-x/q)...(1-x/q^{n-1})
template <class S>
S qpoch_falling(const S& x, const S& q, long n) {
  if (is_exact_zero(q)) throw DomainError("falling q-factorial with q = 0");
  S r = unit_like(q);
  S y = x;
  for (long k = 0; k < n; ++k) {
    r *= 1 - y;
    if (k + 1 < n) y /= q;
  }
  return r;
}

// Gaussian binomial [m choose n]_q, zero outside 0 <= n <= m.
template <class S>
S qbinomial(long m, long n, const S& q) {
  if (n < 0 || n > m) return S(constant_like(Frac(0), q));
  if (n > m - n) n = m - n;
  // prod_{i=1}^{n} (1 - q^{m-n+i}) / (1 - q^i)
  S num = unit_like(q);
  S den = unit_like(q);
  S qi = q;
  S qmi = ipow(q, m - n + 1);
  for (long i = 1; i <= n; ++i) {
    num *= 1 - qmi;
    den *= 1 - qi;
    qi *= q;
    qmi *= q;
  }
  return num / den;
}

// prod_i (num_i;q)_n / prod_j (den_j;q)_n, finite n.  Numerator and
// denominator factors are interleaved index by index.
template <class S>
S qpoch_multi(const std::vector<S>& nums, const std::vector<S>& dens, const S& q, long n) {
  S r = unit_like(q);
  std::vector<S> xs = nums;
  std::vector<S> ys = dens;
  for (long k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      S f = 1 - ys[j];
      if (may_be_zero(f)) {
        throw PoleError("denominator factor #" + std::to_string(j) +
                        " vanishes at index " + std::to_string(k));
      }
      r /= f;
      ys[j] *= q;
    }
    for (auto& x : xs) {
      r *= 1 - x;
      x *= q;
    }
  }
  return r;
}

ExactScalar qpoch_rising(const ExactScalar& x, const ExactScalar& q, Length n);

enum class Exec { kSerial, kParallel, kAuto };

// Certified (x;q)_inf for 0 < q < 1.  kSerial is the reference loop;
// kParallel splits the product into fixed-size chunks combined in order, so
// its value does not depend on the thread count.  Both carry the same
// a-priori error bound.
ApproxScalar qpoch_infinite(const ApproxScalar& x, const ApproxScalar& q,
                            Exec exec = Exec::kAuto);
ApproxScalar qpoch_rising(const ApproxScalar& x, const ApproxScalar& q, Length n,
                          Exec exec = Exec::kAuto);
ApproxScalar qpoch_multi(const std::vector<ApproxScalar>& nums,
                         const std::vector<ApproxScalar>& dens, const ApproxScalar& q,
                         Length n);

// Factors per chunk in the parallel kernel.
inline constexpr long kProductChunk = 1024;

// A base point on an exponent lattice: q = p^L.
template <class S>
class QPoint {
 public:
  QPoint(S p, int lattice) : p_(std::move(p)), lattice_(lattice) {
    if (lattice < 1) throw DomainError("lattice denominator must be positive");
  }
  const S& p() const { return p_; }
  int lattice() const { return lattice_; }
  S q() const { return ipow(p_, lattice_); }
  // q^e, with e a multiple of 1/L.
  S power(Frac e) const { return ipow(p_, e.on_lattice(lattice_)); }

 private:
  S p_;
  int lattice_;
};

// Γ_{q^b}(x) = (1-Q)^{1-x} (Q;Q)_inf / (Q^x;Q)_inf with Q = q^b, at the
// working precision of the point.
ApproxScalar qgamma(Frac x, const QPoint<ApproxScalar>& point, Frac base_exponent = 1);
// Same, directly from a value of Q in (0,1).
ApproxScalar qgamma_at(Frac x, const ApproxScalar& base);

}  // namespace qpi
