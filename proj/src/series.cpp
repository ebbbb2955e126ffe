#include "qpi/series.hpp"

#include <deque>
#include <string>

namespace qpi {

namespace {

constexpr std::size_t kWindow = 5;

bool nonincreasing(const std::deque<Bound>& mags) {
  for (std::size_t i = 1; i < mags.size(); ++i) {
    if (mags[i] > mags[i - 1]) return false;
  }
  return true;
}

}  // namespace

SeriesSum sum_series(const std::function<ApproxScalar(long)>& term, Precision prec,
                     const SeriesOptions& opts) {
  ApproxScalar sum(0, prec);
  std::deque<Bound> recent;
  std::size_t small_run = 0;
  const Bound unit = Bound::pow2(-static_cast<long>(prec.bits()));
  const Bound one(1.0);

  for (long k = opts.start; k < opts.start + opts.max_terms; ++k) {
    const ApproxScalar t = term(k);
    sum += t;
    const Bound mag = t.abs_upper();
    recent.push_back(mag);
    if (recent.size() > kWindow + 1) recent.pop_front();

    const Bound eps = unit * max(one, sum.abs_upper());
    const Bound small = eps / Bound(100.0);
    small_run = mag < small ? small_run + 1 : 0;
    if (small_run < kWindow || !nonincreasing(recent)) continue;

    Bound ratio;
    bool any_nonzero = false;
    for (std::size_t i = 1; i < recent.size(); ++i) {
      if (recent[i - 1].is_zero()) continue;
      any_nonzero = true;
      ratio = max(ratio, recent[i] / recent[i - 1]);
    }
    Bound tail;
    if (any_nonzero) {
      if (!(ratio < one)) continue;
      // min(2r, (1+r)/2): above r, and below 1 whenever r is.
      Bound mid;
      mpfr_add_ui(mid.data(), ratio.get(), 1, MPFR_RNDU);
      mpfr_div_ui(mid.data(), mid.get(), 2, MPFR_RNDU);
      const Bound doubled = Bound(2.0) * ratio;
      const Bound rho = doubled < mid ? doubled : mid;
      if (!(rho < one)) continue;
      Bound gap;
      mpfr_ui_sub(gap.data(), 1, rho.get(), MPFR_RNDD);
      Bound last;
      for (const auto& m : recent) {
        if (!m.is_zero()) last = m;
      }
      tail = last * rho / gap;
      if (!(tail < eps / Bound(10.0))) continue;
    }
    sum.widen(tail);
    return {std::move(sum), k - opts.start + 1};
  }
  throw ConvergenceError("series did not converge within " + std::to_string(opts.max_terms) +
                         " terms");
}

}  // namespace qpi
