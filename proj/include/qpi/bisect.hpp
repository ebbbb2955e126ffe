#pragma once

#include <functional>
#include <memory>
#include <string>

#include "qpi/identities.hpp"

namespace qpi {

template <class S>
struct TermSeries {
  std::function<S(long)> term;

  S operator()(long k) const { return term(k); }
};

// k-th term Λ(2k) + Λ(2k+1), by literal pairing.
template <class S>
TermSeries<S> bisect_combine(const TermSeries<S>& s) {
  return {[t = s.term](long k) { return t(2 * k) + t(2 * k + 1); }};
}

template <class S>
S partial_sum(const TermSeries<S>& s, long count, S zero) {
  for (long k = 0; k < count; ++k) zero += s(k);
  return zero;
}

// Series terms of a catalog record at lattice root p.
TermSeries<ExactScalar> exact_series(const IdentityRecord& rec, const ExactScalar& p);
TermSeries<ApproxScalar> approx_series(const IdentityRecord& rec, const ApproxScalar& p);

// The bisected form of the C2-SIMPLE series as displayed, with the
// (1-q^{3k+1/4}) weight, at q = p^4.
ExactScalar c2_bisected_term(const ExactScalar& p, long k);

// The two bracketed weights of the C2 bisection agree exactly at q = p^4.
VerificationReport check_bracket_identity_c2(long k, const ExactScalar& p);

// Factor r with sum(simple) = r * sum(bisected) for a known pair; throws
// UsageError for other pairs.
ExactScalar bisection_factor(std::string_view simple_id, std::string_view bisected_id,
                             const ExactScalar& p);

// Exact term-by-term check: Λ(2k) + Λ(2k+1) = r * bisected(k) for k <= k_max.
VerificationReport check_bisection_terms(std::string_view simple_id,
                                         std::string_view bisected_id, const ExactScalar& p,
                                         long k_max);

// Σ_{k<2N} Λ(k) = Σ_{k<N} combined(k), exact.
VerificationReport check_rearrangement(std::string_view simple_id, const ExactScalar& p,
                                       long half_count);

// Certified comparison of the two infinite sums.
VerificationReport check_bisection_pair(std::string_view simple_id, std::string_view bisected_id,
                                        const ExactScalar& p, int digits);

}  // namespace qpi
