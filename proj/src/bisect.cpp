#include "qpi/bisect.hpp"

#include "qpi/series.hpp"

namespace qpi {

namespace {

constexpr Frac kQuarter(1, 4);

VerificationReport exact_report(std::string id, const ExactScalar& p, int lattice) {
  VerificationReport r;
  r.id = std::move(id);
  r.mode = Mode::kExact;
  r.points.push_back("p=" + p.str() + ", q=p^" + std::to_string(lattice));
  return r;
}

const IdentityRecord& series_record(std::string_view id) {
  const IdentityRecord& rec = find_record(id);
  if (!rec.exact_term) throw UsageError(rec.id + " has no series term");
  return rec;
}

}  // namespace

TermSeries<ExactScalar> exact_series(const IdentityRecord& rec, const ExactScalar& p) {
  if (!rec.exact_term) throw UsageError(rec.id + " has no series term");
  auto ctx = std::make_shared<Lattice<ExactScalar>>(p, rec.lattice);
  return {[ctx, term = rec.exact_term](long k) { return term(*ctx, ParamSet{}, k); }};
}

TermSeries<ApproxScalar> approx_series(const IdentityRecord& rec, const ApproxScalar& p) {
  if (!rec.term) throw UsageError(rec.id + " has no series term");
  auto ctx = std::make_shared<Lattice<ApproxScalar>>(p, rec.lattice);
  return {[ctx, term = rec.term](long k) { return term(*ctx, ParamSet{}, k); }};
}

ExactScalar c2_bisected_term(const ExactScalar& p, long k) {
  Lattice<ExactScalar> c(p, 4);
  auto om = [&c](Frac e) { return 1 - c.pow(e); };
  const ExactScalar ratio = c.poch(kQuarter, 2 * k, Frac(1, 2)) / c.poch(1, 2 * k);
  const ExactScalar w = om(3 * k + Frac(1, 4));
  const ExactScalar d = om(2 * k + 1);
  return w / om(1) * ratio * ratio * ratio * c.pow(3 * k * k) *
         (1 - c.pow(3 * k + Frac(3, 4)) * om(3 * k + Frac(7, 4)) * exact_pow(om(k + kQuarter), 3) /
                  (w * d * d * d));
}

VerificationReport check_bracket_identity_c2(long k, const ExactScalar& p) {
  VerificationReport r = exact_report("C2", p, 4);
  r.points.back() += ", k=" + std::to_string(k);
  r.terms = 1;
  try {
    Lattice<ExactScalar> c(p, 4);
    auto om = [&c](Frac e) { return 1 - c.pow(e); };
    const ExactScalar d3 = exact_pow(om(2 * k + 1), 3);
    const ExactScalar w14 = om(3 * k + Frac(1, 4));
    const ExactScalar w34 = om(3 * k + Frac(3, 4));
    const ExactScalar lhs =
        w14 / om(1) *
        (1 - c.pow(3 * k + Frac(3, 4)) * om(3 * k + Frac(7, 4)) *
                 exact_pow(om(k + Frac(1, 4)), 3) / (w14 * d3));
    const ExactScalar rhs =
        w34 / om(1) *
        (1 - c.pow(3 * k + Frac(1, 4)) * om(3 * k + Frac(5, 4)) *
                 exact_pow(om(k + Frac(3, 4)), 3) / (w34 * d3));
    r.result = lhs == rhs ? Outcome::kExactEqual : Outcome::kMismatch;
    if (!r.passed()) r.detail = "lhs-rhs=" + (lhs - rhs).str();
  } catch (const DomainError& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

ExactScalar bisection_factor(std::string_view simple_id, std::string_view bisected_id,
                             const ExactScalar& p) {
  if ((simple_id == "C2-SIMPLE" && bisected_id == "C2") ||
      (simple_id == "QUAD" && bisected_id == "QUAD-BISECT")) {
    return 1;
  }
  if (simple_id == "D5-SIMPLE" && bisected_id == "D5") {
    // Γ_q(1/2) = (1 + q^{1/2}) Γ_q(3/2), with q = p^2.
    const ExactScalar s = 1 + p;
    return s * s;
  }
  throw UsageError("no known bisection pair " + std::string(simple_id) + " / " +
                   std::string(bisected_id));
}

VerificationReport check_bisection_terms(std::string_view simple_id,
                                         std::string_view bisected_id, const ExactScalar& p,
                                         long k_max) {
  const IdentityRecord& simple = series_record(simple_id);
  const IdentityRecord& bisected = series_record(bisected_id);
  VerificationReport r = exact_report(simple.id + "/" + bisected.id, p, simple.lattice);
  r.points.back() += ", k=0.." + std::to_string(k_max);
  try {
    const ExactScalar factor = bisection_factor(simple_id, bisected_id, p);
    const auto combined = bisect_combine(exact_series(simple, p));
    const auto target = exact_series(bisected, p);
    r.result = Outcome::kExactEqual;
    for (long k = 0; k <= k_max; ++k) {
      ++r.terms;
      if (!(combined(k) == factor * target(k))) {
        r.result = Outcome::kMismatch;
        r.detail = "paired term differs at k=" + std::to_string(k);
        break;
      }
    }
  } catch (const DomainError& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

VerificationReport check_rearrangement(std::string_view simple_id, const ExactScalar& p,
                                       long half_count) {
  const IdentityRecord& rec = series_record(simple_id);
  VerificationReport r = exact_report(rec.id, p, rec.lattice);
  r.points.back() += ", N=" + std::to_string(half_count);
  r.terms = 2 * half_count;
  try {
    const auto s = exact_series(rec, p);
    const ExactScalar full = partial_sum(s, 2 * half_count, ExactScalar(0));
    const ExactScalar paired = partial_sum(bisect_combine(s), half_count, ExactScalar(0));
    r.result = full == paired ? Outcome::kExactEqual : Outcome::kMismatch;
  } catch (const DomainError& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

VerificationReport check_bisection_pair(std::string_view simple_id, std::string_view bisected_id,
                                        const ExactScalar& p, int digits) {
  const IdentityRecord& simple = series_record(simple_id);
  const IdentityRecord& bisected = series_record(bisected_id);
  VerificationReport r;
  r.id = simple.id + "/" + bisected.id;
  r.mode = Mode::kCertified;
  r.points.push_back("p=" + p.str() + ", q=p^" + std::to_string(simple.lattice));
  try {
    const Precision prec = Precision::digits(digits);
    const ApproxScalar pa(p, prec);
    const SeriesSum a = sum_series(approx_series(simple, pa).term, prec);
    const SeriesSum b = sum_series(approx_series(bisected, pa).term, prec);
    const ApproxScalar scaled = ApproxScalar(bisection_factor(simple_id, bisected_id, p), prec) *
                                b.value;
    const Bound residual = distance(a.value, scaled);
    const Bound budget = a.value.err() + scaled.err();
    r.terms = a.terms + b.terms;
    r.residual = residual.str();
    r.err_budget = budget.str();
    r.result = residual <= budget && budget <= Bound::pow10(-(digits - 10))
                   ? Outcome::kWithinBound
                   : Outcome::kMismatch;
  } catch (const std::exception& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

}  // namespace qpi
