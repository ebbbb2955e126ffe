#include <gtest/gtest.h>

#include <random>

#include "qpi/carlitz.hpp"
#include "qpi/errors.hpp"
#include "qpi/qkernel.hpp"

using namespace qpi;

namespace {

ExactScalar rat(long n, long d) { return ExactScalar(Frac(n, d)); }

ExactScalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 40);
  return ExactScalar(mpz_class(num(rng)), mpz_class(den(rng)));
}

ExactScalar random_base(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(3, 40);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(1, d - 1);
  return rat(num(rng), d);
}

// Random table-driven φ; retried until no inverse denominator vanishes.
PhiPolynomial random_phi(std::mt19937_64& rng, long size) {
  std::vector<ExactScalar> a;
  std::vector<ExactScalar> b;
  for (long k = 0; k <= size; ++k) {
    ExactScalar ak = random_rational(rng);
    if (ak.is_zero()) ak = 1;
    a.push_back(ak);
    b.push_back(random_rational(rng));
  }
  return PhiPolynomial::table(a, b);
}

Sequence random_sequence(std::mt19937_64& rng, long size) {
  Sequence s;
  for (long k = 0; k < size; ++k) s.push_back(random_rational(rng));
  return s;
}

}  // namespace

TEST(PhiEval, SpecExamples) {
  const PhiPolynomial any = PhiPolynomial::qpoch(rat(3, 7), rat(1, 3));
  EXPECT_EQ(phi_eval(any, rat(5, 2), 0), ExactScalar(1));

  const ExactScalar q = rat(1, 2);
  const PhiPolynomial poch = PhiPolynomial::qpoch(ExactScalar(1), q);
  EXPECT_EQ(phi_eval(poch, rat(1, 2), 2), rat(3, 8));
  EXPECT_EQ(phi_eval(poch, rat(1, 2), 2), qpoch_rising<ExactScalar>(rat(1, 2), q, 2));

  const PhiPolynomial constant = PhiPolynomial::table(Sequence(5, ExactScalar(1)),
                                                      Sequence(5, ExactScalar(0)));
  EXPECT_EQ(phi_eval(constant, rat(9, 4), 5), ExactScalar(1));
}

TEST(Carlitz, SingleTermCases) {
  const PhiPolynomial phi = PhiPolynomial::qpoch(rat(2, 3), rat(1, 4));
  const Sequence g{rat(5, 3)};
  EXPECT_EQ(forward_minus(g, phi, rat(1, 4), 0), rat(5, 3));
  EXPECT_EQ(forward_plus(g, phi, rat(1, 4), 0), rat(5, 3));
  // n = 0 inverse: f(0) (a_0 + b_0) / φ(1;1) = f(0).
  EXPECT_EQ(inverse_minus(g, phi, rat(1, 4), 0), rat(5, 3));
  EXPECT_EQ(inverse_plus(g, phi, rat(1, 4), 0), rat(5, 3));
}

TEST(Carlitz, DeltaSequenceGivesPhiAtOne) {
  // g = δ_{k0}: f(n) = φ(1;n) in both variants.
  const ExactScalar q = rat(2, 5);
  const PhiPolynomial phi = PhiPolynomial::qpoch(rat(3, 4), q);
  Sequence g(8, ExactScalar(0));
  g[0] = 1;
  for (long n = 0; n < 8; ++n) {
    EXPECT_EQ(forward_plus(g, phi, q, n), phi_eval(phi, ExactScalar(1), n) *
                                              exact_pow(q, n * (n - 1) / 2));
    EXPECT_EQ(forward_minus(g, phi, q, n), phi_eval(phi, ExactScalar(1), n));
  }
}

class CarlitzRoundtrip : public ::testing::TestWithParam<Variant> {};

TEST_P(CarlitzRoundtrip, RandomExactInstances) {
  std::mt19937_64 rng(GetParam() == Variant::kMinus ? 101 : 202);
  int done = 0;
  while (done < 20) {
    const long size = 13;
    const ExactScalar q = random_base(rng);
    const PhiPolynomial phi = random_phi(rng, size);
    const Sequence g = random_sequence(rng, size);
    try {
      const Sequence f = forward_all(GetParam(), g, phi, q);
      EXPECT_EQ(inverse_all(GetParam(), f, phi, q), g);
      const Sequence h = inverse_all(GetParam(), g, phi, q);
      EXPECT_EQ(forward_all(GetParam(), h, phi, q), g);
      ++done;
    } catch (const PoleError&) {
    }
  }
}

TEST_P(CarlitzRoundtrip, MatricesMultiplyToIdentity) {
  const ExactScalar q = rat(2, 3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    const PhiPolynomial phi =
        trial == 0 ? PhiPolynomial::qpoch(rat(5, 7), q) : random_phi(rng, 11);
    try {
      const Matrix fm = forward_matrix(GetParam(), phi, q, 11);
      const Matrix im = inverse_matrix(GetParam(), phi, q, 11);
      EXPECT_TRUE(is_identity(multiply(fm, im)));
      EXPECT_TRUE(is_identity(multiply(im, fm)));
    } catch (const PoleError&) {
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Variants, CarlitzRoundtrip,
                         ::testing::Values(Variant::kMinus, Variant::kPlus),
                         [](const auto& info) {
                           return info.param == Variant::kMinus ? "Minus" : "Plus";
                         });

TEST(Carlitz, PlusIsBaseChangeOfMinus) {
  std::mt19937_64 rng(9);
  EXPECT_TRUE(check_base_change(PhiPolynomial::qpoch(rat(3, 5), rat(1, 3)), rat(1, 3), 9));
  EXPECT_TRUE(check_base_change(random_phi(rng, 9), rat(4, 7), 9));
}

TEST(Carlitz, VanishingDualDenominatorIsPole) {
  // φ(x;n) = (x;q)_n vanishes at x = 1, i.e. at the dual point q^0.
  const ExactScalar q = rat(1, 2);
  const PhiPolynomial phi = PhiPolynomial::qpoch(ExactScalar(1), q);
  const Sequence f{ExactScalar(1), ExactScalar(2)};
  EXPECT_THROW(inverse_plus(f, phi, q, 0), PoleError);
}

TEST(Carlitz, DougallDualRandomPoints) {
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 5) {
    const ExactScalar a = random_base(rng);
    const ExactScalar b = random_base(rng) * 3;
    const ExactScalar d = random_base(rng) * 5;
    const ExactScalar q = random_base(rng);
    const VerificationReport r = check_dougall_dual(a, b, d, q, 10);
    if (r.result == Outcome::kError) continue;
    EXPECT_EQ(r.result, Outcome::kExactEqual) << r.to_text();
    ++done;
  }
}

TEST(Carlitz, DougallDualDetectsWrongSequence) {
  // Perturbing φ breaks the dual pair.
  const ExactScalar q = rat(1, 3);
  const ExactScalar a = rat(2, 5);
  const PhiPolynomial phi = PhiPolynomial::qpoch(a * rat(11, 10), q);
  Sequence g;
  for (long n = 0; n < 6; ++n) g.push_back(qpoch_rising<ExactScalar>(a, q, n));
  const Sequence f = forward_all(Variant::kPlus, g, PhiPolynomial::qpoch(a, q), q);
  EXPECT_NE(inverse_all(Variant::kPlus, f, phi, q), g);
}
