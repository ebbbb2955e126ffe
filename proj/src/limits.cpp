#include "qpi/limits.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "qpi/series.hpp"

namespace qpi {

namespace {

ApproxScalar atan_inverse(long x, Precision prec) {
  const Bound eps = Bound::pow2(-static_cast<long>(prec.bits()) - 4);
  ApproxScalar sum(0, prec);
  ApproxScalar power = ApproxScalar(1, prec) / x;
  const ApproxScalar x2(x * x, prec);
  for (long k = 0;; ++k) {
    const ApproxScalar t = power / (2 * k + 1);
    if (t.abs_upper() < eps) {
      // Alternating with decreasing terms: the tail is below the first
      // omitted term.
      sum.widen(t.abs_upper());
      return sum;
    }
    if (k % 2 == 0) {
      sum += t;
    } else {
      sum -= t;
    }
    power /= x2;
  }
}

ExactScalar exact(Frac f) { return ExactScalar(f); }

struct ClassicalSum {
  ApproxScalar value;
  long terms = 0;
};

ExactScalar weight_at(const ClassicalSeries& s, long k) {
  ExactScalar w(0);
  ExactScalar kp(1);
  for (std::int64_t c : s.weight) {
    w += ExactScalar(static_cast<long>(c)) * kp;
    kp *= ExactScalar(k);
  }
  return w;
}

// Bound on |t_{k+1} / t_k| valid for every k >= K.
ExactScalar ratio_bound(const ClassicalSeries& s, long K) {
  ExactScalar rho = abs(exact(s.z));
  for (std::size_t i = 0; i < s.top.size(); ++i) {
    const ExactScalar r = (exact(s.top[i]) + K) / (exact(s.bottom[i]) + K);
    if (r > ExactScalar(1)) rho *= r;
  }
  const long degree = static_cast<long>(s.weight.size()) - 1;
  if (degree > 0) rho *= exact_pow(ExactScalar(K + 1) / ExactScalar(K), degree);
  return rho;
}

ApproxScalar cvz_alternating(const std::vector<ExactScalar>& a, Precision prec) {
  const long n = static_cast<long>(a.size());
  ApproxScalar d = pow(3 + sqrt(ApproxScalar(8, prec)), n);
  d = (d + 1 / d) / 2;
  ApproxScalar b(-1, prec);
  ApproxScalar c = -d;
  ApproxScalar s(0, prec);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * ApproxScalar(a[k], prec);
    b = b * ApproxScalar((k + n) * (k - n), prec) / ApproxScalar(Frac(2 * k + 1, 2) * (k + 1), prec);
  }
  return s / d;
}

// Sums until the certified tail is below 2^-bits (early_stop) or exactly
// max_terms terms.
ClassicalSum classical_sum(const ClassicalSeries& s, long max_terms, Precision prec,
                           bool early_stop) {
  if (s.top.size() != s.bottom.size()) {
    throw DomainError("classical series needs as many top as bottom parameters");
  }
  if (s.z == Frac(-1)) {
    const long needed =
        static_cast<long>(std::ceil(static_cast<double>(prec.bits()) * std::log(2.0) /
                                    std::log(3 + std::sqrt(8.0)))) + 8;
    const long n = std::min(max_terms, needed);
    std::vector<ExactScalar> a;
    ExactScalar c(1);
    for (long k = 0; k < n; ++k) {
      a.push_back(abs(c) * weight_at(s, k));
      for (std::size_t i = 0; i < s.top.size(); ++i) {
        c *= (exact(s.top[i]) + k) / (exact(s.bottom[i]) + k);
      }
    }
    ApproxScalar full = cvz_alternating(a, prec);
    a.resize(static_cast<std::size_t>(n - 8));
    const ApproxScalar shorter = cvz_alternating(a, prec);
    full.widen(distance(full, shorter));
    return {std::move(full), n};
  }

  const ExactScalar z = exact(s.z);
  const ExactScalar unit = exact_pow(ExactScalar(2), -static_cast<long>(prec.bits()));
  ExactScalar c(1);
  ExactScalar sum(0);
  long k = 0;
  for (; k < max_terms; ++k) {
    if (early_stop && k > 0) {
      const ExactScalar rho = ratio_bound(s, k);
      if (rho < ExactScalar(1)) {
        const ExactScalar tail = abs(c * weight_at(s, k)) / (1 - rho);
        if (tail < unit) break;
      }
    }
    sum += c * weight_at(s, k);
    for (std::size_t i = 0; i < s.top.size(); ++i) {
      c *= (exact(s.top[i]) + k) / (exact(s.bottom[i]) + k);
    }
    c *= z;
  }
  ApproxScalar value(sum, prec);
  const ExactScalar rho = ratio_bound(s, std::max(k, 1L));
  if (rho < ExactScalar(1)) {
    const ExactScalar tail = abs(c * weight_at(s, k)) / (1 - rho);
    value.widen(ApproxScalar(tail, prec).abs_upper());
  } else {
    value.widen(Bound::infinity());
  }
  return {std::move(value), k};
}

std::string fixed(const ApproxScalar& x, int digits) { return x.str(digits); }

double agreement_digits(const Bound& residual, const ApproxScalar& target) {
  if (residual.is_zero()) return 99;
  return -std::log10(residual.to_double() / std::abs(target.to_double()));
}

}  // namespace

ApproxScalar pi_oracle(int digits) {
  const Precision prec = Precision::digits(digits);
  return 16 * atan_inverse(5, prec) - 4 * atan_inverse(239, prec);
}

ApproxScalar pi_oracle_gauss(int digits) {
  const Precision prec = Precision::digits(digits);
  return 48 * atan_inverse(18, prec) + 32 * atan_inverse(57, prec) -
         20 * atan_inverse(239, prec);
}

ApproxScalar gamma_constant(Frac x, int digits) {
  if (!(x == Frac(1, 4) || x == Frac(3, 4) || x == Frac(1, 3) || x == Frac(2, 3) ||
        x == Frac(1, 2))) {
    throw DomainError("gamma_constant supports 1/4, 3/4, 1/3, 2/3, 1/2; got " + x.str());
  }
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, ApproxScalar> cache;
  const auto key = std::make_pair(x.num() * 1000 + x.den(), digits);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const Precision prec = Precision::digits(std::max(digits, 40));
  auto extrapolate = [&](Frac arg) {
    std::vector<ApproxScalar> hs;
    std::vector<ApproxScalar> vals;
    for (int j = 4; j <= 13; ++j) {
      const ApproxScalar h = ApproxScalar(ExactScalar(exact_pow(ExactScalar(2), -j)), prec);
      hs.push_back(h);
      vals.push_back(qgamma_at(arg, 1 - h));
    }
    Extrapolation e = richardson(hs, vals, 9);
    e.value.widen(e.error);
    return e.value;
  };

  const ApproxScalar g = extrapolate(x);
  const ApproxScalar pi = pi_oracle(std::max(digits, 40));
  ApproxScalar expected(0, prec);
  ApproxScalar product(0, prec);
  if (x == Frac(1, 2)) {
    product = g * g;
    expected = pi;
  } else {
    product = g * extrapolate(1 - x);
    expected = x.den() == 4 ? pi * sqrt(ApproxScalar(2, prec))
                            : 2 * pi / sqrt(ApproxScalar(3, prec));
  }
  if (!(distance(product, expected) <= Bound(10.0) * (product.err() + expected.err()))) {
    throw ConvergenceError("reflection check failed for Gamma(" + x.str() + ")");
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, g);
  return g;
}

ApproxScalar eval_constant(const ConstantTarget& t, int digits) {
  const Precision prec = Precision::digits(digits);
  ApproxScalar v(t.coeff, prec);
  const ApproxScalar pi = pi_oracle(digits);
  if (t.pi != 0) v *= pow(pi, static_cast<long>(t.pi));
  if (t.sqrt2 != 0) v *= pow(sqrt(ApproxScalar(2, prec)), static_cast<long>(t.sqrt2));
  if (t.sqrt3 != 0) v *= pow(sqrt(ApproxScalar(3, prec)), static_cast<long>(t.sqrt3));
  if (t.sqrt_pi != 0) v *= pow(sqrt(pi), static_cast<long>(t.sqrt_pi));
  if (t.gamma_1_4 != 0) v *= pow(gamma_constant(Frac(1, 4), digits), static_cast<long>(t.gamma_1_4));
  if (t.gamma_3_4 != 0) v *= pow(gamma_constant(Frac(3, 4), digits), static_cast<long>(t.gamma_3_4));
  if (t.gamma_1_3 != 0) v *= pow(gamma_constant(Frac(1, 3), digits), static_cast<long>(t.gamma_1_3));
  return v;
}

ApproxScalar eval_classical(const ClassicalSeries& s, long terms, int digits) {
  if (terms < 1) throw DomainError("eval_classical needs at least one term");
  return classical_sum(s, terms, Precision::digits(digits), false).value;
}

Extrapolation richardson(const std::vector<ApproxScalar>& h,
                         const std::vector<ApproxScalar>& values, int order) {
  const int n = static_cast<int>(h.size());
  if (order < 3 || n < order + 1 || values.size() != h.size()) {
    throw DomainError("richardson needs order >= 3 and at least order+1 points");
  }
  const int first = n - order - 1;
  // t[m][i] extrapolates through points first+i .. first+i+m.
  std::vector<std::vector<ApproxScalar>> t(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) t[0].push_back(values[first + i]);
  for (int m = 1; m <= order; ++m) {
    for (int i = 0; i + m <= order; ++i) {
      const ApproxScalar& ha = h[first + i];
      const ApproxScalar& hb = h[first + i + m];
      t[m].push_back((ha * t[m - 1][i + 1] - hb * t[m - 1][i]) / (ha - hb));
    }
  }
  Extrapolation e{t[order][0], distance(t[order][0], t[order - 1][1]), t[order - 2][2],
                  distance(t[order - 2][2], t[order - 3][3])};
  Bound previous = Bound::infinity();
  for (int m = 1; m <= order; ++m) {
    const Bound correction = distance(t[m][order - m], t[m - 1][order - m + 1]);
    if (correction > previous) e.monotone = false;
    previous = correction;
  }
  e.consistent = distance(e.value, e.lower) <= e.lower_error;
  return e;
}

Extrapolation q_limit(const IdentityRecord& rec, const GridSpec& grid, int digits) {
  if (!rec.target || !rec.term) throw UsageError(rec.id + " has no classical target");
  if (grid.j1 - grid.j0 < grid.order) throw UsageError("grid too short for the requested order");
  const Precision prec = Precision::digits(digits);
  const int count = grid.j1 - grid.j0 + 1;
  std::vector<ApproxScalar> hs(static_cast<std::size_t>(count), ApproxScalar(prec));
  std::vector<ApproxScalar> vals(static_cast<std::size_t>(count), ApproxScalar(prec));
  std::vector<std::string> failures(static_cast<std::size_t>(count));
  const ApproxScalar scale(rec.limit_scale, prec);

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      const ApproxScalar h(exact_pow(ExactScalar(2), -(grid.j0 + i)), prec);
      ApproxScalar p = 1 - h;
      if (rec.lattice > 1) p = root(p, static_cast<unsigned long>(rec.lattice));
      Lattice<ApproxScalar> ctx(p, rec.lattice);
      const ParamSet ps;
      const SeriesSum s = sum_series([&](long k) { return rec.term(ctx, ps, k); }, prec);
      hs[i] = h;
      vals[i] = scale * s.value;
    } catch (const std::exception& ex) {
      failures[i] = ex.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw ConvergenceError(rec.id + ": " + f);
  }
  return richardson(hs, vals, grid.order);
}

VerificationReport check_limit(const IdentityRecord& rec, const GridSpec& grid, int min_digits) {
  VerificationReport r;
  r.id = rec.id;
  r.mode = Mode::kLimit;
  std::ostringstream pt;
  pt << "q_j=1-2^-j, j=" << grid.j0 << ".." << grid.j1 << ", order " << grid.order;
  r.points.push_back(pt.str());
  try {
    if (!rec.target) throw UsageError(rec.id + " has no classical target");
    const Extrapolation e = q_limit(rec, grid);
    const ApproxScalar target = eval_constant(*rec.target, 30);
    const Bound residual = distance(e.value, target);
    const Bound tol = Bound::pow10(-min_digits) * target.abs_upper();
    r.residual = residual.str();
    r.err_budget = tol.str();
    r.terms = grid.j1 - grid.j0 + 1;
    r.result = residual <= tol ? Outcome::kWithinBound : Outcome::kMismatch;
    std::ostringstream d;
    d.precision(3);
    d << "estimate " << fixed(e.value, 15) << " vs " << rec.target->display << " = "
      << fixed(target, 15) << ", " << std::fixed << agreement_digits(residual, target)
      << " digits, extrapolation error " << e.error.str();
    if (!e.monotone) d << "; warning: non-monotone tableau";
    if (!e.consistent) d << "; warning: order-4 and order-6 estimates disagree";
    r.detail = d.str();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& ex) {
    r.result = Outcome::kError;
    r.detail = ex.what();
  }
  return r;
}

VerificationReport check_classical(const IdentityRecord& rec, long max_terms, int min_digits) {
  if (!rec.target || !rec.classical) throw UsageError(rec.id + " has no classical companion");
  VerificationReport r;
  r.id = rec.id;
  r.mode = Mode::kLimit;
  r.points.push_back("classical series, z=" + rec.classical->z.str());
  try {
    const int digits = min_digits + 15;
    const ClassicalSum s = classical_sum(*rec.classical, max_terms, Precision::digits(digits), true);
    const ApproxScalar target = eval_constant(*rec.target, digits);
    const Bound residual = distance(s.value, target);
    const Bound tol = Bound::pow10(-min_digits) * target.abs_upper();
    r.terms = s.terms;
    r.residual = residual.str();
    r.err_budget = tol.str();
    r.result = residual <= tol && s.value.err() <= tol ? Outcome::kWithinBound
                                                        : Outcome::kMismatch;
    std::ostringstream d;
    d.precision(3);
    d << rec.target->display << ": " << std::fixed << agreement_digits(residual, target)
      << " digits";
    r.detail = d.str();
  } catch (const std::exception& ex) {
    r.result = Outcome::kError;
    r.detail = ex.what();
  }
  return r;
}

}  // namespace qpi
