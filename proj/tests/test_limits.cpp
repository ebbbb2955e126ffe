#include <gtest/gtest.h>
#include <mpfr.h>

#include "qpi/errors.hpp"
#include "qpi/limits.hpp"

using namespace qpi;

namespace {

struct Ref {
  mpfr_t v;
  Ref() { mpfr_init2(v, 400); }
  ~Ref() { mpfr_clear(v); }
};

// |x - ref| <= x.err + slack
bool near_ref(const ApproxScalar& x, mpfr_srcptr ref, double slack = 0) {
  Ref d;
  mpfr_sub(d.v, x.value(), ref, MPFR_RNDN);
  mpfr_abs(d.v, d.v, MPFR_RNDN);
  Ref tol;
  mpfr_set(tol.v, x.err().get(), MPFR_RNDN);
  mpfr_add_d(tol.v, tol.v, slack, MPFR_RNDN);
  return mpfr_lessequal_p(d.v, tol.v) != 0;
}

double agreement_digits(const ApproxScalar& x, mpfr_srcptr ref) {
  Ref d;
  mpfr_sub(d.v, x.value(), ref, MPFR_RNDN);
  mpfr_div(d.v, d.v, ref, MPFR_RNDN);
  mpfr_abs(d.v, d.v, MPFR_RNDN);
  if (mpfr_zero_p(d.v)) return 1000;
  mpfr_log10(d.v, d.v, MPFR_RNDN);
  return -mpfr_get_d(d.v, MPFR_RNDN);
}

// Γ(1/4) = sqrt((2π)^{3/2} / AGM(1, √2))
void gamma_quarter_agm(mpfr_ptr out) {
  Ref pi, s2, one, agm;
  mpfr_const_pi(pi.v, MPFR_RNDN);
  mpfr_sqrt_ui(s2.v, 2, MPFR_RNDN);
  mpfr_set_ui(one.v, 1, MPFR_RNDN);
  mpfr_agm(agm.v, one.v, s2.v, MPFR_RNDN);
  mpfr_mul_ui(out, pi.v, 2, MPFR_RNDN);
  mpfr_pow_ui(out, out, 3, MPFR_RNDN);
  mpfr_sqrt(out, out, MPFR_RNDN);
  mpfr_div(out, out, agm.v, MPFR_RNDN);
  mpfr_sqrt(out, out, MPFR_RNDN);
}

}  // namespace

TEST(PiOracle, TenDigits) {
  const ApproxScalar pi = pi_oracle(10);
  EXPECT_NEAR(pi.to_double(), 3.141592654, 1e-9);
  EXPECT_LE(pi.err().to_double(), 1e-9);
}

TEST(PiOracle, FiftyDigitsAgainstMpfrAndSecondFormula) {
  Ref ref;
  mpfr_const_pi(ref.v, MPFR_RNDN);
  const ApproxScalar a = pi_oracle(50);
  const ApproxScalar b = pi_oracle_gauss(50);
  EXPECT_TRUE(near_ref(a, ref.v));
  EXPECT_TRUE(near_ref(b, ref.v));
  EXPECT_LE(distance(a, b), a.err() + b.err());
  EXPECT_EQ(a.str(50).substr(0, 20), "3.141592653589793238");
}

TEST(PiOracle, SquareOverProductIsOne) {
  const ApproxScalar pi = pi_oracle(40);
  const ApproxScalar one = pow(pi, 2) / (pi * pi);
  EXPECT_LE(distance(one, ApproxScalar(1, Precision::digits(40))), one.err());
}

TEST(GammaConstant, QuarterMatchesAgm) {
  Ref ref;
  gamma_quarter_agm(ref.v);
  const ApproxScalar g = gamma_constant(Frac(1, 4), 40);
  EXPECT_TRUE(near_ref(g, ref.v));
  EXPECT_GE(agreement_digits(g, ref.v), 20);
}

TEST(GammaConstant, MatchesMpfrGamma) {
  for (Frac x : {Frac(1, 4), Frac(3, 4), Frac(1, 3), Frac(2, 3), Frac(1, 2)}) {
    Ref ref;
    mpfr_set_si(ref.v, static_cast<long>(x.num()), MPFR_RNDN);
    mpfr_div_si(ref.v, ref.v, static_cast<long>(x.den()), MPFR_RNDN);
    mpfr_gamma(ref.v, ref.v, MPFR_RNDN);
    const ApproxScalar g = gamma_constant(x, 40);
    EXPECT_TRUE(near_ref(g, ref.v)) << x;
  }
}

TEST(GammaConstant, ReflectionIdentities) {
  const int d = 40;
  const ApproxScalar pi = pi_oracle(d);
  const Precision prec = Precision::digits(d);
  const ApproxScalar half = gamma_constant(Frac(1, 2), d);
  EXPECT_LE(distance(half, sqrt(pi)), half.err() + Bound::pow10(-35));
  const ApproxScalar q = gamma_constant(Frac(1, 4), d) * gamma_constant(Frac(3, 4), d);
  EXPECT_LE(distance(q, pi * sqrt(ApproxScalar(2, prec))), q.err() + Bound::pow10(-35));
  const ApproxScalar t = gamma_constant(Frac(1, 3), d) * gamma_constant(Frac(2, 3), d);
  EXPECT_LE(distance(t, 2 * pi / sqrt(ApproxScalar(3, prec))), t.err() + Bound::pow10(-35));
}

TEST(GammaConstant, UnsupportedArgument) {
  EXPECT_THROW(gamma_constant(Frac(1, 5), 30), DomainError);
}

TEST(EvalConstant, RendersCatalogTargets) {
  const auto& t = *find_record("QUAD").target;
  Ref ref;
  mpfr_const_pi(ref.v, MPFR_RNDN);
  Ref s2;
  mpfr_sqrt_ui(s2.v, 2, MPFR_RNDN);
  mpfr_ui_div(ref.v, 32, ref.v, MPFR_RNDN);
  mpfr_mul(ref.v, ref.v, s2.v, MPFR_RNDN);
  EXPECT_TRUE(near_ref(eval_constant(t, 40), ref.v));
}

TEST(EvalClassical, RamanujanQuarterSeries) {
  // Σ (1/2)^3_k/k!^3 (1+6k)/4^k = 4/π
  ClassicalSeries s{{Frac(1, 2), Frac(1, 2), Frac(1, 2)}, {Frac(1), Frac(1), Frac(1)},
                    Frac(1, 4), {1, 6}};
  const ApproxScalar v = eval_classical(s, 200, 40);
  Ref ref;
  mpfr_const_pi(ref.v, MPFR_RNDN);
  mpfr_ui_div(ref.v, 4, ref.v, MPFR_RNDN);
  EXPECT_TRUE(near_ref(v, ref.v));
  EXPECT_GE(agreement_digits(v, ref.v), 20);
}

TEST(EvalClassical, NamedCompanions) {
  for (const char* id : {"C1", "QUAD"}) {
    const auto& rec = find_record(id);
    const ApproxScalar v = eval_classical(*rec.classical, 400, 40);
    const ApproxScalar t = eval_constant(*rec.target, 40);
    EXPECT_LE(distance(v, t), v.err() + t.err()) << id;
  }
}

TEST(ClassicalCompanions, AllMatchTargets) {
  int checked = 0;
  for (const auto& rec : catalog()) {
    if (!rec.classical) continue;
    const auto r = check_classical(rec, 400, 15);
    EXPECT_TRUE(r.passed()) << r.to_text();
    ++checked;
  }
  EXPECT_GE(checked, 27);
}

TEST(ClassicalCompanions, MissingCompanionIsUsageError) {
  EXPECT_THROW(check_classical(find_record("PP-A")), UsageError);
}

TEST(Richardson, ExactOnPolynomials) {
  const Precision prec = Precision::digits(40);
  std::vector<ApproxScalar> h;
  std::vector<ApproxScalar> v;
  for (int j = 1; j <= 8; ++j) {
    const ApproxScalar x(Frac(1, 1L << j), prec);
    h.push_back(x);
    // 3 + 2h - 5h^2 + h^4
    v.push_back(3 + 2 * x - 5 * x * x + pow(x, 4));
  }
  const Extrapolation e = richardson(h, v, 6);
  EXPECT_LE(distance(e.value, ApproxScalar(3, prec)), Bound::pow10(-30));
  EXPECT_TRUE(e.consistent);
}

TEST(Richardson, ErrorReflectsSmoothNonPolynomial) {
  const Precision prec = Precision::digits(40);
  std::vector<ApproxScalar> h;
  std::vector<ApproxScalar> v;
  for (int j = 3; j <= 10; ++j) {
    const ApproxScalar x(Frac(1, 1L << j), prec);
    h.push_back(x);
    v.push_back(exp(x));
  }
  const Extrapolation e = richardson(h, v, 6);
  const Bound dist = distance(e.value, ApproxScalar(1, prec));
  EXPECT_LT(dist.to_double(), 1e-14);
  EXPECT_TRUE(e.monotone);
}

TEST(QLimit, AcceptanceSet) {
  for (const char* id : {"A1", "A5", "C1", "C2-SIMPLE", "QUAD"}) {
    const auto r = check_limit(find_record(id), GridSpec{}, 5);
    EXPECT_TRUE(r.passed()) << r.to_text();
    const Extrapolation e = q_limit(find_record(id), GridSpec{});
    const ApproxScalar t = eval_constant(*find_record(id).target, 30);
    EXPECT_LT(distance(e.value, t).to_double() / t.to_double(), 1e-6) << id;
  }
}

TEST(QLimit, TerminatingRecordIsUsageError) {
  EXPECT_THROW(check_limit(find_record("PP-A"), GridSpec{}), UsageError);
}
