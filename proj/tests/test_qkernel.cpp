#include <gtest/gtest.h>

#include <random>

#include "qpi/lattice.hpp"
#include "qpi/qkernel.hpp"
#include "qpi/series.hpp"

using namespace qpi;

namespace {

ExactScalar rat(long n, long d) { return ExactScalar(Frac(n, d)); }

ExactScalar naive_rising(const ExactScalar& x, const ExactScalar& q, long n) {
  ExactScalar r(1);
  for (long k = 0; k < n; ++k) r *= ExactScalar(1) - x * exact_pow(q, k);
  return r;
}

// [m,n]_q from the q-Pascal recurrence.
ExactScalar pascal_binomial(long m, long n, const ExactScalar& q) {
  std::vector<std::vector<ExactScalar>> t(m + 1, std::vector<ExactScalar>(m + 1, ExactScalar(0)));
  for (long i = 0; i <= m; ++i) {
    t[i][0] = 1;
    for (long j = 1; j <= i; ++j) {
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? exact_pow(q, j) * t[i - 1][j] : ExactScalar(0));
    }
  }
  return t[m][n];
}

}  // namespace

TEST(QpochRising, SpecExamples) {
  EXPECT_EQ(qpoch_rising<ExactScalar>(rat(3, 7), rat(1, 5), 0), ExactScalar(1));
  EXPECT_EQ(qpoch_rising<ExactScalar>(rat(1, 2), rat(1, 2), 2), rat(3, 8));
}

TEST(QpochRising, MatchesNaiveProduct) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 30);
  for (int i = 0; i < 20; ++i) {
    const ExactScalar x = rat(num(rng), 31);
    const ExactScalar q = rat(num(rng), 31);
    for (long n = 0; n <= 12; ++n) {
      EXPECT_EQ(qpoch_rising<ExactScalar>(x, q, n), naive_rising(x, q, n));
    }
  }
}

TEST(QpochRising, ExactInfiniteLengthRefused) {
  EXPECT_THROW(qpoch_rising(rat(1, 2), rat(1, 2), Length::infinite()), ModeError);
  EXPECT_THROW(Length(-1), DomainError);
}

TEST(QpochInfinite, MatchesLongPartialProductWithTail) {
  const int digits = 30;
  const Precision prec = Precision::digits(digits);
  const ApproxScalar half(Frac(1, 2), prec);
  const ApproxScalar inf = qpoch_infinite(half, half);
  // 200 factors leave a relative tail below 2^-199.
  const ApproxScalar partial = qpoch_rising(half, half, Length(200));
  EXPECT_LE(distance(inf, partial), inf.err() + partial.err() + Bound::pow10(-55));
  EXPECT_LT(inf.err().to_double(), 1e-28);
  EXPECT_NEAR(inf.to_double(), 0.288788095086602421, 1e-16);
}

TEST(QpochInfinite, SerialAndParallelAgree) {
  const Precision prec = Precision::digits(40);
  for (Frac qf : {Frac(1, 2), Frac(9, 10), Frac(999, 1000), Frac(9999, 10000)}) {
    const ApproxScalar q(qf, prec);
    const ApproxScalar x = q * ApproxScalar(Frac(1, 3), prec);
    const ApproxScalar s = qpoch_infinite(x, q, Exec::kSerial);
    const ApproxScalar p = qpoch_infinite(x, q, Exec::kParallel);
    EXPECT_LE(distance(s, p), s.err() + p.err()) << qf;
  }
}

TEST(QpochInfinite, EulerPentagonalOracle) {
  // (q;q)_inf = Σ_k (-1)^k q^{k(3k-1)/2} over k in Z.
  const Precision prec = Precision::digits(40);
  const ApproxScalar q(Frac(7, 10), prec);
  ApproxScalar s(1, prec);
  for (long k = 1; k < 60; ++k) {
    const ApproxScalar t = pow(q, k * (3 * k - 1) / 2) + pow(q, k * (3 * k + 1) / 2);
    s += (k % 2 == 0) ? t : -t;
  }
  const ApproxScalar e = qpoch_infinite(q, q);
  EXPECT_LE(distance(s, e), e.err() + s.err() + Bound::pow10(-38));
}

TEST(QpochFalling, SpecExamples) {
  EXPECT_EQ(qpoch_falling<ExactScalar>(rat(2, 9), rat(1, 4), 0), ExactScalar(1));
  EXPECT_EQ(qpoch_falling<ExactScalar>(rat(1, 2), rat(1, 2), 2), ExactScalar(0));
  EXPECT_EQ(qpoch_falling<ExactScalar>(rat(1, 3), rat(1, 2), 3), rat(-2, 27));
}

TEST(QpochFalling, EqualsRisingAtInverseBase) {
  const ExactScalar x = rat(5, 7);
  const ExactScalar q = rat(3, 11);
  for (long n = 0; n < 10; ++n) {
    EXPECT_EQ(qpoch_falling<ExactScalar>(x, q, n),
              qpoch_rising<ExactScalar>(x, ExactScalar(1) / q, n));
  }
}

TEST(QBinomial, SpecExamples) {
  const ExactScalar q = rat(2, 5);
  EXPECT_EQ(qbinomial<ExactScalar>(7, 0, q), ExactScalar(1));
  const ExactScalar expect = 1 + q + 2 * q * q + exact_pow(q, 3) + exact_pow(q, 4);
  EXPECT_EQ(qbinomial<ExactScalar>(4, 2, q), expect);
  EXPECT_EQ(qbinomial<ExactScalar>(3, 1, rat(1, 2)), rat(7, 4));
  EXPECT_EQ(qbinomial<ExactScalar>(3, 4, q), ExactScalar(0));
}

TEST(QBinomial, MatchesPascalRecurrenceAndSymmetry) {
  const ExactScalar q = rat(3, 8);
  for (long m = 0; m <= 12; ++m) {
    for (long n = 0; n <= m; ++n) {
      EXPECT_EQ(qbinomial<ExactScalar>(m, n, q), pascal_binomial(m, n, q));
      EXPECT_EQ(qbinomial<ExactScalar>(m, n, q), qbinomial<ExactScalar>(m, m - n, q));
    }
  }
}

TEST(QBinomial, FiniteBinomialTheorem) {
  // (x;q)_n = Σ_k [n,k] (-1)^k q^{k(k-1)/2} x^k
  const ExactScalar q = rat(4, 9);
  const ExactScalar x = rat(-5, 3);
  for (long n = 0; n <= 10; ++n) {
    ExactScalar s(0);
    for (long k = 0; k <= n; ++k) {
      const ExactScalar sign = k % 2 ? ExactScalar(-1) : ExactScalar(1);
      s += sign * qbinomial<ExactScalar>(n, k, q) * exact_pow(q, k * (k - 1) / 2) *
           exact_pow(x, k);
    }
    EXPECT_EQ(s, naive_rising(x, q, n));
  }
}

TEST(QpochMulti, SpecExamples) {
  const ExactScalar q = rat(1, 2);
  EXPECT_EQ(qpoch_multi<ExactScalar>({}, {}, q, 5), ExactScalar(1));
  const ExactScalar a = rat(2, 7);
  EXPECT_EQ(qpoch_multi<ExactScalar>({a}, {a}, q, 6), ExactScalar(1));
  EXPECT_EQ(qpoch_multi<ExactScalar>({rat(1, 2)}, {rat(1, 4)}, q, 2), rat(4, 7));
}

TEST(QpochMulti, VanishingDenominatorIsPole) {
  EXPECT_THROW(qpoch_multi<ExactScalar>({rat(1, 3)}, {rat(4, 1)}, rat(1, 2), 4), PoleError);
}

TEST(QGamma, SpecExamples) {
  const Precision prec = Precision::digits(40);
  for (Frac qf : {Frac(1, 2), Frac(9, 10)}) {
    const QPoint<ApproxScalar> pt(ApproxScalar(qf, prec), 1);
    const ApproxScalar g1 = qgamma(Frac(1), pt);
    const ApproxScalar g2 = qgamma(Frac(2), pt);
    EXPECT_LE(distance(g1, ApproxScalar(1, prec)), g1.err() + Bound::pow10(-39));
    EXPECT_LE(distance(g2, ApproxScalar(1, prec)), g2.err() + Bound::pow10(-39));
  }
  const QPoint<ApproxScalar> half(ApproxScalar(Frac(1, 2), prec), 1);
  const ApproxScalar g3 = qgamma(Frac(3), half);
  EXPECT_LE(distance(g3, ApproxScalar(Frac(3, 2), prec)), g3.err() + Bound::pow10(-39));
}

TEST(QGamma, FunctionalEquation) {
  // Γ_q(x+1) = (1-q^x)/(1-q) Γ_q(x)
  const Precision prec = Precision::digits(40);
  const ApproxScalar p(Frac(4, 5), prec);
  const QPoint<ApproxScalar> pt(p, 4);
  const ApproxScalar q = pt.q();
  for (Frac x : {Frac(1, 4), Frac(1, 2), Frac(3, 4)}) {
    const ApproxScalar lhs = qgamma(x + Frac(1), pt);
    const ApproxScalar rhs = (1 - pt.power(x)) / (1 - q) * qgamma(x, pt);
    EXPECT_LE(distance(lhs, rhs), lhs.err() + rhs.err()) << x;
  }
}

TEST(QGamma, BaseExponentMatchesDirectBase) {
  const Precision prec = Precision::digits(30);
  const QPoint<ApproxScalar> pt(ApproxScalar(Frac(9, 10), prec), 2);
  const ApproxScalar a = qgamma(Frac(1, 2), pt, Frac(4));
  const ApproxScalar b = qgamma_at(Frac(1, 2), pt.power(Frac(4)));
  EXPECT_LE(distance(a, b), a.err() + b.err());
}

TEST(QPoint, PowersStayOnLattice) {
  const QPoint<ExactScalar> pt(rat(2, 3), 12);
  EXPECT_EQ(pt.q(), exact_pow(rat(2, 3), 12));
  EXPECT_EQ(pt.power(Frac(5, 12)), exact_pow(rat(2, 3), 5));
  EXPECT_THROW(pt.power(Frac(1, 5)), DomainError);
  EXPECT_THROW(QPoint<ExactScalar>(rat(1, 2), 0), DomainError);
}

TEST(Lattice, PochhammerInLatticeExponents) {
  Lattice<ExactScalar> ctx(rat(3, 4), 4);
  const ExactScalar q = ctx.q();
  // (q^{1/2}; q)_3 on lattice 4
  EXPECT_EQ(ctx.poch(Frac(1, 2), 3), naive_rising(ctx.pow(Frac(1, 2)), q, 3));
}

TEST(SumSeries, GeometricSeriesWithinErr) {
  const Precision prec = Precision::digits(40);
  const ApproxScalar r(Frac(9, 10), prec);
  const SeriesSum s = sum_series([&](long k) { return pow(r, k); }, prec);
  const ApproxScalar exact(10, prec);
  EXPECT_LE(distance(s.value, exact), s.value.err() + exact.err());
  EXPECT_LT(s.value.err().to_double(), 1e-38);
  EXPECT_GT(s.terms, 800);
}

TEST(SumSeries, TermCapRaisesConvergenceError) {
  const Precision prec = Precision::digits(40);
  SeriesOptions opts;
  opts.max_terms = 100;
  EXPECT_THROW(
      sum_series([&](long k) { return ApproxScalar(Frac(1, k + 1), prec); }, prec, opts),
      ConvergenceError);
}
