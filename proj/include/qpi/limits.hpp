#pragma once

#include <vector>

#include "qpi/identities.hpp"

namespace qpi {

// π from 16 atan(1/5) - 4 atan(1/239) with alternating-series tails.
ApproxScalar pi_oracle(int digits);
// π from 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239), for cross-checks.
ApproxScalar pi_oracle_gauss(int digits);

// Γ(x) for x in {1/4, 3/4, 1/3, 2/3, 1/2} as the q -> 1 limit of Γ_q(x),
// Richardson-extrapolated and checked against the reflection formula.  The
// err of the result is the empirical extrapolation error.  Results are
// cached per argument.
ApproxScalar gamma_constant(Frac x, int digits);

ApproxScalar eval_constant(const ConstantTarget& t, int digits);

// Sum of the first `terms` terms, with term coefficients accumulated in
// exact rationals.  For |z| < 1 a geometric tail bound is folded into err;
// for alternating series with z = -1 the sum is accelerated
// (Cohen-Rodriguez Villegas-Zagier) and err is an empirical estimate.
ApproxScalar eval_classical(const ClassicalSeries& s, long terms, int digits);

struct Extrapolation {
  ApproxScalar value;
  Bound error;            // last two tableau columns
  ApproxScalar lower;     // order - 2 estimate
  Bound lower_error;
  bool monotone = true;   // column corrections shrink
  bool consistent = true; // |value - lower| <= lower_error
};

// Neville extrapolation to h = 0 through the last order+1 points.
Extrapolation richardson(const std::vector<ApproxScalar>& h,
                         const std::vector<ApproxScalar>& values, int order);

struct GridSpec {
  int j0 = 3;
  int j1 = 10;
  int order = 6;
};

// limit_scale * (series sum at q_j = 1 - 2^-j), extrapolated to q = 1.
Extrapolation q_limit(const IdentityRecord& rec, const GridSpec& grid, int digits = 30);

// q_limit against the record's classical target; passes at >= min_digits
// relative agreement.
VerificationReport check_limit(const IdentityRecord& rec, const GridSpec& grid,
                               int min_digits = 5);
// Classical companion series against its target; passes at >= min_digits.
VerificationReport check_classical(const IdentityRecord& rec, long max_terms = 400,
                                   int min_digits = 15);

}  // namespace qpi
