#pragma once

#include <functional>

#include "qpi/approx.hpp"

namespace qpi {

struct SeriesSum {
  ApproxScalar value;
  long terms = 0;
};

struct SeriesOptions {
  long max_terms = 200000;
  // Index of the first term.
  long start = 0;
};

// Sums term(k) for k = start, start+1, ... until five consecutive terms are
// below eps/100 (eps = 2^-bits * max(1, |sum|)), the recent terms decay
// monotonically, and a geometric tail bound with ratio min(2r, (1+r)/2), r the
// largest recent term ratio, is below eps/10.  The tail bound is folded into err.
SeriesSum sum_series(const std::function<ApproxScalar(long)>& term, Precision prec,
                     const SeriesOptions& opts = {});

}  // namespace qpi
