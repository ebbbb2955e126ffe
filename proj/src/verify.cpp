#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "qpi/identities.hpp"
#include "qpi/series.hpp"

namespace qpi {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string point_str(const ExactScalar& p, int lattice) {
  std::string s = "p=" + p.str();
  if (lattice != 1) s += ", q=p^" + std::to_string(lattice);
  return s;
}

std::string point_str(const ExactScalar& p, int lattice, const ParamSet& ps) {
  std::string s = point_str(p, lattice);
  const std::string extra = ps.str();
  if (!extra.empty()) s += ", " + extra;
  return s;
}

Sides<ExactScalar> sides_at(const IdentityRecord& rec, const ParamSet& params,
                            const ExactScalar& p, int lattice) {
  if (rec.kind != Kind::kTerminating) {
    throw UsageError(rec.id + " is not a terminating record");
  }
  Lattice<ExactScalar> ctx(p, lattice);
  return rec.exact(ctx, params);
}

// Throws PoleError through so callers can resample.
VerificationReport terminating_raw(const IdentityRecord& rec, ParamSet params,
                                   const ExactScalar& p, long n_max) {
  VerificationReport r;
  r.id = rec.id;
  r.mode = Mode::kExact;
  r.points.push_back(point_str(p, rec.lattice, params) + ", n=0.." + std::to_string(n_max));
  r.result = Outcome::kExactEqual;
  for (long n = 0; n <= n_max; ++n) {
    params.n = n;
    const auto s = sides_at(rec, params, p, rec.lattice);
    ++r.terms;
    if (!(s.lhs == s.rhs)) {
      r.result = Outcome::kMismatch;
      r.detail = "mismatch at n=" + std::to_string(n) + ", " +
                 point_str(p, rec.lattice, params) + ": lhs-rhs=" + (s.lhs - s.rhs).str();
      break;
    }
  }
  return r;
}

struct Check {
  Bound residual;
  Bound budget;
  long terms = 0;
  bool ok = false;
};

Check certified(const ApproxScalar& lhs, const SeriesSum& rhs, int digits) {
  Check c;
  c.residual = distance(lhs, rhs.value);
  c.budget = lhs.err() + rhs.value.err();
  c.terms = rhs.terms;
  c.ok = c.residual <= c.budget && c.budget <= Bound::pow10(-(digits - 10));
  return c;
}

Check nonterminating_raw(const IdentityRecord& rec, const ParamSet& params,
                         const ExactScalar& p, int digits, long max_terms) {
  const Precision prec = Precision::digits(digits);
  Lattice<ApproxScalar> ctx(ApproxScalar(p, prec), rec.lattice);
  const ApproxScalar lhs = rec.lhs(ctx, params);
  SeriesOptions opts;
  opts.max_terms = max_terms;
  const SeriesSum rhs =
      sum_series([&](long k) { return rec.term(ctx, params, k); }, prec, opts);
  return certified(lhs, rhs, digits);
}

// Folds per-point checks into one report: worst residual, largest budget.
void fold(VerificationReport& r, const Check& c, const std::string& where) {
  r.terms += c.terms;
  if (!c.ok && r.result != Outcome::kError) {
    r.result = Outcome::kMismatch;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += "failed at " + where + " (residual " + c.residual.str() + ", budget " +
                c.budget.str() + ")";
  }
}

// splitmix64 finalizer over (seed, record index)
std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ExactScalar random_unit_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(2, 40);
  const long b = den(rng);
  std::uniform_int_distribution<long> num(1, b - 1);
  return ExactScalar(Frac(num(rng), b));
}

ExactScalar random_positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(1, 40);
  return ExactScalar(Frac(d(rng), d(rng)));
}

constexpr int kMaxDraws = 200;

VerificationReport error_report(const IdentityRecord& rec, Mode mode, const std::string& what) {
  VerificationReport r;
  r.id = rec.id;
  r.mode = mode;
  r.result = Outcome::kError;
  r.detail = what;
  return r;
}

VerificationReport verify_terminating(const IdentityRecord& rec, const VerifyConfig& cfg,
                                      std::uint64_t seed) {
  VerificationReport out;
  out.id = rec.id;
  out.mode = Mode::kExact;
  out.result = Outcome::kExactEqual;
  std::mt19937_64 rng(seed);
  int done = 0;
  for (int draw = 0; draw < kMaxDraws && done < cfg.trials; ++draw) {
    ParamSet ps = draw_params(rec, rng());
    const ExactScalar p = cfg.random_exact_point ? random_unit_rational(rng) : cfg.p;
    VerificationReport r;
    try {
      r = terminating_raw(rec, ps, p, cfg.n_max);
    } catch (const PoleError&) {
      continue;
    }
    ++done;
    out.points.insert(out.points.end(), r.points.begin(), r.points.end());
    out.terms += r.terms;
    if (!r.passed()) {
      out.result = r.result;
      out.detail = r.detail;
      return out;
    }
  }
  if (done < cfg.trials) {
    return error_report(rec, Mode::kExact, "could not draw pole-free parameters");
  }
  ParamSet ps = draw_params(rec, seed);
  ps.n = cfg.n_max;
  Lattice<DegreeTracker> dctx(DegreeTracker::variable(), rec.lattice);
  const auto d = rec.degree(dctx, ps);
  out.detail = "degree bound in p at n=" + std::to_string(cfg.n_max) + ": " +
               std::to_string((d.lhs - d.rhs).num_degree());
  return out;
}

VerificationReport verify_nonterminating(const IdentityRecord& rec, const VerifyConfig& cfg,
                                         std::uint64_t seed) {
  VerificationReport out;
  out.id = rec.id;
  out.mode = Mode::kCertified;
  out.result = Outcome::kWithinBound;
  Bound worst_residual;
  Bound worst_budget;

  auto run = [&](const ParamSet& ps) {
    const std::string where = point_str(cfg.p, rec.lattice, ps);
    out.points.push_back(where);
    const Check c = nonterminating_raw(rec, ps, cfg.p, cfg.digits, cfg.max_terms);
    worst_residual = max(worst_residual, c.residual);
    worst_budget = max(worst_budget, c.budget);
    fold(out, c, where);
  };

  try {
    switch (rec.domain) {
      case ParamDomain::kLambda:
        for (const Frac& l : rec.lambdas) {
          ParamSet ps;
          ps.lambda = l;
          run(ps);
        }
        break;
      case ParamDomain::kFreeACE: {
        std::mt19937_64 rng(seed);
        int done = 0;
        for (int draw = 0; draw < kMaxDraws && done < cfg.trials; ++draw) {
          const ParamSet ps = draw_params(rec, rng());
          try {
            run(ps);
            ++done;
          } catch (const PoleError&) {
            out.points.pop_back();
          }
        }
        break;
      }
      default:
        run(ParamSet{});
    }
  } catch (const std::exception& e) {
    out.result = Outcome::kError;
    out.detail = e.what();
  }
  out.residual = worst_residual.str();
  out.err_budget = worst_budget.str();
  return out;
}

}  // namespace

VerificationReport check_pfaff_saalschutz(long n, const ExactScalar& a, const ExactScalar& b,
                                          const ExactScalar& c, const ExactScalar& q) {
  const IdentityRecord& rec = find_record("PS");
  ParamSet ps;
  ps.a = a;
  ps.b = b;
  ps.c = c;
  ps.n = n;
  VerificationReport r;
  r.id = rec.id;
  r.mode = Mode::kExact;
  r.points.push_back("q=" + q.str() + ", " + ps.str() + ", n=" + std::to_string(n));
  r.terms = n + 1;
  try {
    const auto s = sides_at(rec, ps, q, 1);
    r.result = s.lhs == s.rhs ? Outcome::kExactEqual : Outcome::kMismatch;
    if (!r.passed()) r.detail = "lhs-rhs=" + (s.lhs - s.rhs).str();
  } catch (const DomainError& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

Sides<ExactScalar> terminating_sides(const IdentityRecord& rec, const ParamSet& params,
                                     const ExactScalar& p) {
  return sides_at(rec, params, p, rec.lattice);
}

VerificationReport check_terminating(const IdentityRecord& rec, const ParamSet& params,
                                     const ExactScalar& p, long n_max) {
  try {
    return terminating_raw(rec, params, p, n_max);
  } catch (const DomainError& e) {
    return error_report(rec, Mode::kExact, e.what());
  }
}

DegreeCertificate certify_terminating(const IdentityRecord& rec, const ParamSet& params,
                                      std::uint64_t seed) {
  DegreeCertificate cert;
  Lattice<DegreeTracker> dctx(DegreeTracker::variable(), rec.lattice);
  const auto d = rec.degree(dctx, params);
  cert.degree_bound = (d.lhs - d.rhs).num_degree();

  std::mt19937_64 rng(seed);
  std::set<std::pair<long, long>> used;
  long den_cap = 40;
  long attempts = 0;
  while (cert.points_checked < cert.degree_bound + 1) {
    // Widen the pool once the small-height rationals run low.
    if (++attempts > 4 * static_cast<long>(used.size()) + 64) den_cap *= 2;
    // Poles everywhere: the parameters sit on a singular locus.
    if (attempts > 64 * (cert.degree_bound + 1) + 4096) return cert;
    std::uniform_int_distribution<long> den(2, den_cap);
    const long b = den(rng);
    std::uniform_int_distribution<long> num(1, b - 1);
    const Frac f(num(rng), b);
    if (!used.insert({f.num(), f.den()}).second) continue;
    try {
      const auto s = sides_at(rec, params, ExactScalar(f), rec.lattice);
      if (!(s.lhs == s.rhs)) return cert;
    } catch (const PoleError&) {
      continue;
    }
    ++cert.points_checked;
  }
  cert.certified = true;
  return cert;
}

ApproxScalar eval_theorem_lhs(const IdentityRecord& rec, const ParamSet& params,
                              const ApproxScalar& p, int digits) {
  static_cast<void>(digits);
  Lattice<ApproxScalar> ctx(p, rec.lattice);
  return rec.lhs(ctx, params);
}

ApproxScalar eval_theorem_rhs(const IdentityRecord& rec, const ParamSet& params,
                              const ApproxScalar& p, int digits, long* terms, long max_terms) {
  Lattice<ApproxScalar> ctx(p, rec.lattice);
  SeriesOptions opts;
  opts.max_terms = max_terms;
  SeriesSum s = sum_series([&](long k) { return rec.term(ctx, params, k); },
                           Precision::digits(digits), opts);
  if (terms != nullptr) *terms = s.terms;
  return std::move(s.value);
}

VerificationReport check_nonterminating(const IdentityRecord& rec, const ParamSet& params,
                                        const ExactScalar& p, int digits, long max_terms) {
  VerificationReport r;
  r.id = rec.id;
  r.mode = Mode::kCertified;
  r.points.push_back(point_str(p, rec.lattice, params));
  try {
    const Check c = nonterminating_raw(rec, params, p, digits, max_terms);
    r.terms = c.terms;
    r.residual = c.residual.str();
    r.err_budget = c.budget.str();
    r.result = c.ok ? Outcome::kWithinBound : Outcome::kMismatch;
  } catch (const std::exception& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

VerificationReport verify_example(std::string_view id, const ExactScalar& p, int digits) {
  const IdentityRecord& rec = find_record(id);
  if (rec.kind != Kind::kNonterminating || rec.domain != ParamDomain::kFixed) {
    throw UsageError(rec.id + " is not a fixed-parameter series identity");
  }
  return check_nonterminating(rec, ParamSet{}, p, digits);
}

VerificationReport check_reciprocal_limit(const IdentityRecord& rec, const ParamSet& params,
                                          const ExactScalar& p, long n, int digits,
                                          const Bound& tol) {
  VerificationReport r;
  r.id = rec.id;
  r.mode = Mode::kCertified;
  r.points.push_back(point_str(p, 1, params) + ", n=" + std::to_string(n));
  r.terms = n;
  try {
    const std::string thm = rec.id == "PP-A" ? "THM-A" : rec.id == "PP-B" ? "THM-B" : "THM-C";
    ParamSet ps = params;
    ps.n = n;
    const auto s = sides_at(rec, ps, p, 1);
    if (!(s.lhs == s.rhs)) {
      r.result = Outcome::kMismatch;
      r.detail = "terminating relation fails at this depth";
      return r;
    }
    const Precision prec = Precision::digits(digits);
    const IdentityRecord& trec = find_record(thm);
    Lattice<ApproxScalar> ctx(ApproxScalar(p, prec), 1);
    ApproxScalar limit = trec.lhs(ctx, params);
    // [a,c;ae,qc/e] against [a,c;ae,c/e] or [a,qc;ae,qc/e].
    if (thm == "THM-C") {
      limit *= 1 - resolve(ctx, *params.c);
    } else {
      limit *= 1 - resolve(ctx, *params.c) / resolve(ctx, *params.e);
    }
    const ApproxScalar finite(s.rhs, prec);
    const Bound residual = distance(limit, finite);
    r.residual = residual.str();
    r.err_budget = tol.str();
    r.result = residual <= tol ? Outcome::kWithinBound : Outcome::kMismatch;
    r.detail = "compared with " + thm + " left member";
  } catch (const std::exception& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

std::vector<VerificationReport> verify_records(const std::vector<std::string>& ids,
                                               const VerifyConfig& cfg) {
  std::vector<const IdentityRecord*> selected;
  std::vector<std::size_t> index;
  const auto& all = catalog();
  if (ids.empty()) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      selected.push_back(&all[i]);
      index.push_back(i);
    }
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (const auto& id : ids) {
        if (all[i].id == id) {
          selected.push_back(&all[i]);
          index.push_back(i);
          break;
        }
      }
    }
    for (const auto& id : ids) find_record(id);
  }

  std::vector<VerificationReport> out(selected.size());
  const long count = static_cast<long>(selected.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const IdentityRecord& rec = *selected[static_cast<std::size_t>(i)];
    const std::uint64_t seed = mix(cfg.seed, index[static_cast<std::size_t>(i)]);
    const auto t0 = Clock::now();
    VerificationReport r;
    try {
      r = rec.kind == Kind::kTerminating ? verify_terminating(rec, cfg, seed)
                                         : verify_nonterminating(rec, cfg, seed);
    } catch (const std::exception& e) {
      r = error_report(rec, rec.kind == Kind::kTerminating ? Mode::kExact : Mode::kCertified,
                       e.what());
    }
    r.millis = millis_since(t0);
    out[static_cast<std::size_t>(i)] = std::move(r);
  }
  return out;
}

std::vector<VerificationReport> verify_all(const VerifyConfig& cfg) {
  return verify_records({}, cfg);
}

ParamSet draw_params(const IdentityRecord& rec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ParamSet ps;
  switch (rec.domain) {
    case ParamDomain::kFixed:
    case ParamDomain::kLambda:
      break;
    case ParamDomain::kFreeABC:
      ps.a = random_positive_rational(rng);
      ps.b = random_positive_rational(rng);
      ps.c = random_positive_rational(rng);
      break;
    case ParamDomain::kFreeABD:
      ps.a = random_positive_rational(rng);
      ps.b = random_positive_rational(rng);
      ps.d = random_positive_rational(rng);
      break;
    case ParamDomain::kFreeACE:
      if (rec.kind == Kind::kTerminating) {
        std::uniform_int_distribution<long> m(1, 3 * rec.lattice);
        ps.a = Frac(m(rng), rec.lattice);
        ps.c = Frac(m(rng), rec.lattice);
        ps.e = Frac(m(rng), rec.lattice);
      } else {
        // c < e keeps (c/e;q)_inf and (qc/e;q)_inf away from zero.
        ExactScalar c = random_unit_rational(rng);
        ExactScalar e = random_unit_rational(rng);
        while (!(c < e)) {
          c = random_unit_rational(rng);
          e = random_unit_rational(rng);
        }
        ps.a = random_unit_rational(rng);
        ps.c = c;
        ps.e = e;
      }
      break;
  }
  return ps;
}

}  // namespace qpi
