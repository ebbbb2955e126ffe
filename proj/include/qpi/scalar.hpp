#pragma once

// Uniform vocabulary over the scalar types that q-kernels are instantiated
// with.  Generic code uses unit_like / constant_like / ipow / is_exact_zero
// instead of constructing literals, so the same transcription serves exact
// and certified evaluation.

#include "qpi/approx.hpp"
#include "qpi/exact.hpp"
#include "qpi/frac.hpp"

namespace qpi {

inline ExactScalar unit_like(const ExactScalar&) { return ExactScalar(1); }
inline ApproxScalar unit_like(const ApproxScalar& x) { return ApproxScalar(1, x.precision()); }

inline ExactScalar constant_like(Frac v, const ExactScalar&) { return ExactScalar(v); }
inline ApproxScalar constant_like(Frac v, const ApproxScalar& x) {
  return ApproxScalar(v, x.precision());
}

inline ExactScalar constant_like(const ExactScalar& v, const ExactScalar&) { return v; }
inline ApproxScalar constant_like(const ExactScalar& v, const ApproxScalar& x) {
  return ApproxScalar(v, x.precision());
}

inline ExactScalar ipow(const ExactScalar& x, long n) { return exact_pow(x, n); }
inline ApproxScalar ipow(const ApproxScalar& x, long n) { return pow(x, n); }

inline bool is_exact_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool is_exact_zero(const ApproxScalar& x) { return x.is_exact_zero(); }

// True when the value is, or cannot be separated from, zero.
inline bool may_be_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool may_be_zero(const ApproxScalar& x) { return x.contains_zero(); }

template <class S>
S signed_unit(long k, const S& like) {
  return (k % 2 == 0) ? unit_like(like) : -unit_like(like);
}

}  // namespace qpi
