#pragma once

// Symbolic stand-in scalar that tracks an upper bound on the degrees of
// numerator and denominator when an expression is viewed as a rational
// function N(p)/D(p) of the lattice root p.  Evaluating a terminating
// identity with this type yields a bound d on deg(LHS - RHS) numerator, so
// exact equality at d+1 distinct points certifies the identity in p.

#include <algorithm>

#include "qpi/exact.hpp"
#include "qpi/frac.hpp"

namespace qpi {

class DegreeTracker {
 public:
  constexpr DegreeTracker() = default;
  constexpr DegreeTracker(long num_deg, long den_deg) : num_(num_deg), den_(den_deg) {}
  // Constants have degree zero.
  DegreeTracker(long) {}  // NOLINT
  DegreeTracker(const ExactScalar&) {}  // NOLINT

  static constexpr DegreeTracker variable() { return {1, 0}; }

  constexpr long num_degree() const { return num_; }
  constexpr long den_degree() const { return den_; }

  DegreeTracker operator-() const { return *this; }
  DegreeTracker& operator+=(const DegreeTracker& o) {
    num_ = std::max(num_ + o.den_, o.num_ + den_);
    den_ += o.den_;
    return *this;
  }
  DegreeTracker& operator-=(const DegreeTracker& o) { return *this += o; }
  DegreeTracker& operator*=(const DegreeTracker& o) {
    num_ += o.num_;
    den_ += o.den_;
    return *this;
  }
  DegreeTracker& operator/=(const DegreeTracker& o) {
    num_ += o.den_;
    den_ += o.num_;
    return *this;
  }

  friend DegreeTracker operator+(DegreeTracker a, const DegreeTracker& b) { return a += b; }
  friend DegreeTracker operator-(DegreeTracker a, const DegreeTracker& b) { return a -= b; }
  friend DegreeTracker operator*(DegreeTracker a, const DegreeTracker& b) { return a *= b; }
  friend DegreeTracker operator/(DegreeTracker a, const DegreeTracker& b) { return a /= b; }

 private:
  long num_ = 0;
  long den_ = 0;
};

inline DegreeTracker unit_like(const DegreeTracker&) { return {}; }
inline DegreeTracker constant_like(Frac, const DegreeTracker&) { return {}; }
inline DegreeTracker constant_like(const ExactScalar&, const DegreeTracker&) { return {}; }
inline bool is_exact_zero(const DegreeTracker&) { return false; }
inline bool may_be_zero(const DegreeTracker&) { return false; }

// x^n; for a pure power of p the bound is exact (p^m or 1/p^m).
inline DegreeTracker ipow(const DegreeTracker& x, long n) {
  if (n >= 0) return {x.num_degree() * n, x.den_degree() * n};
  return {x.den_degree() * -n, x.num_degree() * -n};
}

}  // namespace qpi
