#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "qpi/errors.hpp"
#include "qpi/identities.hpp"
#include "qpi/qkernel.hpp"

using namespace qpi;

namespace {

ExactScalar rat(long n, long d) { return ExactScalar(Frac(n, d)); }

double residual_of(const VerificationReport& r) {
  return r.residual.empty() ? 0.0 : std::stod(r.residual);
}

ExactScalar poch(const ExactScalar& x, const ExactScalar& q, long n) {
  ExactScalar r(1);
  for (long k = 0; k < n; ++k) r *= ExactScalar(1) - x * exact_pow(q, k);
  return r;
}

// Balanced 3φ2 sum and its product side, written out term by term.
std::pair<ExactScalar, ExactScalar> pfaff_brute(long n, const ExactScalar& a,
                                                const ExactScalar& b, const ExactScalar& c,
                                                const ExactScalar& q) {
  const ExactScalar qmn = exact_pow(q, -n);
  const ExactScalar d = exact_pow(q, 1 - n) * a * b / c;
  ExactScalar lhs(0);
  for (long k = 0; k <= n; ++k) {
    lhs += poch(qmn, q, k) * poch(a, q, k) * poch(b, q, k) * exact_pow(q, k) /
           (poch(q, q, k) * poch(c, q, k) * poch(d, q, k));
  }
  const ExactScalar rhs = poch(c / a, q, n) * poch(c / b, q, n) /
                          (poch(c, q, n) * poch(c / (a * b), q, n));
  return {lhs, rhs};
}

ApproxScalar ratio_of_products(const ApproxScalar& q, const std::vector<ApproxScalar>& top,
                               const std::vector<ApproxScalar>& bottom) {
  ApproxScalar r(1, q.precision());
  for (const auto& x : top) r *= qpoch_infinite(x, q);
  for (const auto& x : bottom) r /= qpoch_infinite(x, q);
  return r;
}

const std::vector<std::string> kLettered = {
    "A1",  "A2",  "A3",  "A4",  "A5",  "A6",  "A7",  "A8",  "A9",  "A10", "B1",     "B2",
    "B3",  "B4",  "B5",  "C1",  "C2",  "C3",  "C4",  "C5",  "D1",  "D2",  "D3",     "D4",
    "D5",  "W1",  "A1-ALT", "B1-ALT"};

}  // namespace

TEST(Catalog, SizeAndUniqueIds) {
  const auto& all = catalog();
  EXPECT_GE(all.size(), 38u);
  std::set<std::string> ids;
  for (const auto& r : all) EXPECT_TRUE(ids.insert(r.id).second) << r.id;
  for (const auto& id : kLettered) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Catalog, NamedTargets) {
  EXPECT_EQ(find_record("A1").target->display, "4/pi");
  EXPECT_EQ(find_record("C2-SIMPLE").target->display, "2*sqrt(2)/pi");
  EXPECT_EQ(find_record("QUAD").target->display, "32*sqrt(2)/pi");
  EXPECT_FALSE(find_record("PP-A").target.has_value());
}

TEST(Catalog, UnknownIdIsUsageError) {
  EXPECT_THROW(find_record("Z9"), UsageError);
}

TEST(Catalog, ExportListsEveryRecord) {
  const std::string text = export_catalog();
  for (const auto& r : catalog()) {
    EXPECT_NE(text.find("id: " + r.id + "\n"), std::string::npos) << r.id;
  }
  EXPECT_EQ(domain_summary(find_record("PS")), "free a, b, c");
}

TEST(PfaffSaalschutz, DepthZeroIsOne) {
  const auto s = terminating_sides(find_record("PS"), [] {
    ParamSet ps;
    ps.a = rat(2, 3);
    ps.b = rat(5, 7);
    ps.c = rat(3, 11);
    return ps;
  }(), rat(1, 2));
  EXPECT_EQ(s.lhs, ExactScalar(1));
  EXPECT_EQ(s.rhs, ExactScalar(1));
}

TEST(PfaffSaalschutz, SpecPointDepthOne) {
  const auto r = check_pfaff_saalschutz(1, rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 2));
  EXPECT_EQ(r.result, Outcome::kExactEqual) << r.to_text();
  const auto [lhs, rhs] = pfaff_brute(1, rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 2));
  EXPECT_EQ(lhs, rhs);
}

TEST(PfaffSaalschutz, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(1, 30);
  int done = 0;
  while (done < 5) {
    const ExactScalar a = rat(num(rng), 7);
    const ExactScalar b = rat(num(rng), 11);
    const ExactScalar c = rat(num(rng), 13);
    const ExactScalar q = rat(num(rng), 31);
    ParamSet ps;
    ps.a = a;
    ps.b = b;
    ps.c = c;
    ps.n = 8;
    try {
      const auto oracle = pfaff_brute(8, a, b, c, q);
      EXPECT_EQ(oracle.first, oracle.second);
      const auto s = terminating_sides(find_record("PS"), ps, q);
      EXPECT_EQ(s.lhs, oracle.first);
      EXPECT_EQ(s.rhs, oracle.second);
      ++done;
    } catch (const PoleError&) {
    }
  }
}

TEST(Terminating, RandomPointsUpToSixteen) {
  for (const char* id : {"PS", "QD", "PP-A", "PP-B", "PP-C"}) {
    const IdentityRecord& rec = find_record(id);
    int done = 0;
    for (std::uint64_t seed = 1; done < 5; ++seed) {
      const ParamSet ps = draw_params(rec, seed);
      const ExactScalar p = rat(static_cast<long>(seed % 17) + 1, 19);
      const auto r = check_terminating(rec, ps, p, 16);
      if (r.result == Outcome::kError) continue;
      EXPECT_EQ(r.result, Outcome::kExactEqual) << r.to_text();
      ++done;
    }
  }
}

TEST(Terminating, ReciprocalADisplayedPoint) {
  ParamSet ps;
  ps.a = Frac(1, 3);
  ps.c = Frac(2, 3);
  ps.e = Frac(5, 12);
  ps.n = 0;
  const auto s0 = terminating_sides(find_record("PP-A"), ps, rat(3, 5));
  EXPECT_EQ(s0.lhs, s0.rhs);
  ps.n = 7;
  const auto s = terminating_sides(find_record("PP-A"), ps, rat(3, 5));
  EXPECT_EQ(s.lhs, s.rhs);
}

TEST(Terminating, ReciprocalCOnHalfLattice) {
  IdentityRecord rec = find_record("PP-C");
  rec.lattice = 2;
  ParamSet ps;
  ps.a = Frac(1);
  ps.c = Frac(1);
  ps.e = Frac(1, 2);
  ps.n = 9;
  const auto s = terminating_sides(rec, ps, rat(2, 3));
  EXPECT_EQ(s.lhs, s.rhs);
}

TEST(Terminating, MismatchNamesDepthAndPoint) {
  IdentityRecord bad = find_record("PS");
  const ExactSides good = bad.exact;
  bad.exact = [good](Lattice<ExactScalar>& ctx, const ParamSet& ps) {
    auto s = good(ctx, ps);
    if (ps.n >= 3) s.rhs += ctx.q();
    return s;
  };
  ParamSet ps;
  ps.a = rat(2, 3);
  ps.b = rat(5, 7);
  ps.c = rat(3, 11);
  const auto r = check_terminating(bad, ps, rat(1, 2), 6);
  EXPECT_EQ(r.result, Outcome::kMismatch);
  EXPECT_NE(r.detail.find("n=3"), std::string::npos) << r.detail;
  EXPECT_NE(r.detail.find("1/2"), std::string::npos) << r.detail;
}

TEST(DegreeCertificate, CertifiesSmallDepths) {
  for (const char* id : {"PS", "QD", "PP-A", "PP-B", "PP-C"}) {
    const IdentityRecord& rec = find_record(id);
    ParamSet ps = draw_params(rec, 4);
    for (long n = 1; n <= 2; ++n) {
      ps.n = n;
      const auto cert = certify_terminating(rec, ps, 17);
      EXPECT_TRUE(cert.certified) << id << " n=" << n;
      EXPECT_EQ(cert.points_checked, cert.degree_bound + 1);
      EXPECT_GT(cert.degree_bound, 0);
    }
  }
}

TEST(DegreeCertificate, RejectsFalseIdentity) {
  IdentityRecord bad = find_record("PS");
  const ExactSides good = bad.exact;
  bad.exact = [good](Lattice<ExactScalar>& ctx, const ParamSet& ps) {
    auto s = good(ctx, ps);
    s.rhs *= 1 + ctx.q() * ctx.q();
    return s;
  };
  ParamSet ps = draw_params(bad, 4);
  ps.n = 2;
  EXPECT_FALSE(certify_terminating(bad, ps, 17).certified);
}

TEST(Theorems, RandomDrawsAtTwoPoints) {
  for (const char* id : {"THM-A", "THM-B", "THM-C"}) {
    const IdentityRecord& rec = find_record(id);
    for (const char* p : {"1/2", "4/5"}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto r = check_nonterminating(rec, draw_params(rec, seed), ExactScalar::parse(p), 40);
        EXPECT_TRUE(r.passed()) << r.to_text();
        EXPECT_LE(residual_of(r), 1e-30) << r.to_text();
      }
    }
  }
}

TEST(Theorems, LeftMemberMatchesIndependentProducts) {
  const int digits = 40;
  const Precision prec = Precision::digits(digits);
  const ApproxScalar p(Frac(4, 5), prec);
  const ApproxScalar q = p * p;
  ParamSet ps;
  ps.a = Frac(1);
  ps.c = Frac(1);
  ps.e = Frac(1, 2);
  IdentityRecord b = find_record("THM-B");
  IdentityRecord c = find_record("THM-C");
  b.lattice = 2;
  c.lattice = 2;
  const ApproxScalar e = p;
  const ApproxScalar lb = eval_theorem_lhs(b, ps, p, digits);
  const ApproxScalar ob = ratio_of_products(q, {q, q}, {q * e, q / e});
  EXPECT_LE(distance(lb, ob), lb.err() + ob.err());
  const ApproxScalar lc = eval_theorem_lhs(c, ps, p, digits);
  const ApproxScalar oc = ratio_of_products(q, {q, q * q}, {q * e, q * q / e});
  EXPECT_LE(distance(lc, oc), lc.err() + oc.err());
  for (auto* rec : {&b, &c}) {
    const auto r = check_nonterminating(*rec, ps, rat(4, 5), digits);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(Theorems, SeriesAgreesWithLongerTruncation) {
  const IdentityRecord& rec = find_record("THM-A");
  const ParamSet ps = draw_params(rec, 9);
  const int digits = 40;
  const ApproxScalar p(Frac(4, 5), Precision::digits(digits));
  long terms = 0;
  const ApproxScalar s = eval_theorem_rhs(rec, ps, p, digits, &terms);
  Lattice<ApproxScalar> ctx(p, rec.lattice);
  ApproxScalar longer(0, Precision::digits(digits));
  for (long k = 0; k < 10 * terms; ++k) longer += rec.term(ctx, ps, k);
  EXPECT_LE(distance(s, longer), s.err() + longer.err() + Bound::pow10(-39));
}

TEST(Theorems, CoincidingParametersArePole) {
  const IdentityRecord& rec = find_record("THM-A");
  ParamSet ps;
  ps.a = rat(1, 3);
  ps.c = rat(1, 2);
  ps.e = rat(1, 2);
  const auto r = check_nonterminating(rec, ps, rat(1, 2), 30);
  EXPECT_EQ(r.result, Outcome::kError);
}

TEST(Lettered, AllPassAtNineTenths) {
  VerifyConfig cfg;
  cfg.p = rat(9, 10);
  cfg.digits = 40;
  const auto reports = verify_records(kLettered, cfg);
  ASSERT_EQ(reports.size(), kLettered.size());
  std::set<std::string> seen;
  for (const auto& r : reports) {
    seen.insert(r.id);
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_LE(residual_of(r), 1e-25) << r.id;
  }
  EXPECT_EQ(seen, std::set<std::string>(kLettered.begin(), kLettered.end()));
}

TEST(VerifyAll, PassesAtSeveralPoints) {
  for (const char* p : {"1/2", "7/10", "9/10"}) {
    VerifyConfig cfg;
    cfg.p = ExactScalar::parse(p);
    const auto reports = verify_all(cfg);
    EXPECT_EQ(reports.size(), catalog().size());
    for (const auto& r : reports) EXPECT_TRUE(r.passed()) << p << "\n" << r.to_text();
  }
}

TEST(VerifyAll, FewerTermsAtSmallerBase) {
  VerifyConfig lo;
  lo.p = rat(1, 2);
  VerifyConfig hi;
  hi.p = rat(9, 10);
  const auto a = verify_records({"A1", "C1", "QUAD"}, lo);
  const auto b = verify_records({"A1", "C1", "QUAD"}, hi);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(a[i].terms, b[i].terms);
}

TEST(VerifyExample, FixedRecord) {
  const auto r = verify_example("A1", rat(9, 10), 40);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.mode, Mode::kCertified);
  EXPECT_LE(residual_of(r), 1e-25);
}

TEST(ReciprocalLimit, DepthFortyApproachesTheorem) {
  ParamSet ps;
  ps.a = rat(1, 3);
  ps.c = rat(1, 5);
  ps.e = rat(1, 2);
  for (const char* id : {"PP-A", "PP-B", "PP-C"}) {
    const auto& rec = find_record(id);
    const auto r40 = check_reciprocal_limit(rec, ps, rat(1, 2), 40, 40, Bound(1e-10));
    EXPECT_TRUE(r40.passed()) << r40.to_text();
    const auto r20 = check_reciprocal_limit(rec, ps, rat(1, 2), 20, 40, Bound(1.0));
    EXPECT_LT(residual_of(r40) * 1e4, residual_of(r20)) << id;
  }
}

TEST(DrawParams, HonorsDomains) {
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const ParamSet t = draw_params(find_record("THM-B"), seed);
    EXPECT_LT(std::get<ExactScalar>(*t.c), std::get<ExactScalar>(*t.e));
    const ParamSet pp = draw_params(find_record("PP-B"), seed);
    EXPECT_NO_THROW(std::get<Frac>(*pp.a).on_lattice(12));
  }
  EXPECT_EQ(draw_params(find_record("PS"), 3).str(), draw_params(find_record("PS"), 3).str());
}
