#include "qpi/carlitz.hpp"

#include <memory>

#include "qpi/qkernel.hpp"

namespace qpi {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

ExactScalar sign(long k) { return k % 2 == 0 ? ExactScalar(1) : ExactScalar(-1); }

// Point at which φ is sampled for index k: q^-k (minus) or q^k (plus).
ExactScalar node(Variant v, const ExactScalar& q, long k) {
  return exact_pow(q, v == Variant::kMinus ? -k : k);
}

ExactScalar forward_entry(Variant v, const PhiPolynomial& phi, const ExactScalar& q, long n,
                          long k) {
  if (k > n) return 0;
  ExactScalar w = sign(k) * qbinomial<ExactScalar>(n, k, q) * phi_eval(phi, node(v, q, k), n);
  if (v == Variant::kPlus) w *= exact_pow(q, choose2(n - k));
  return w;
}

ExactScalar inverse_entry(Variant v, const PhiPolynomial& phi, const ExactScalar& q, long n,
                          long k) {
  if (k > n) return 0;
  const ExactScalar den = phi_eval(phi, node(v, q, n), k + 1);
  if (den.is_zero()) {
    throw PoleError("phi(x;" + std::to_string(k + 1) + ") vanishes at the dual point for n=" +
                    std::to_string(n));
  }
  ExactScalar w = sign(k) * qbinomial<ExactScalar>(n, k, q) *
                  (phi.a(k) + node(v, q, k) * phi.b(k)) / den;
  if (v == Variant::kMinus) w *= exact_pow(q, choose2(n - k));
  return w;
}

}  // namespace

PhiPolynomial PhiPolynomial::qpoch(const ExactScalar& c, const ExactScalar& q) {
  return {[](long) { return ExactScalar(1); },
          [c, q](long k) { return -(c * exact_pow(q, k)); }};
}

PhiPolynomial PhiPolynomial::table(std::vector<ExactScalar> a, std::vector<ExactScalar> b) {
  auto pa = std::make_shared<std::vector<ExactScalar>>(std::move(a));
  auto pb = std::make_shared<std::vector<ExactScalar>>(std::move(b));
  return {[pa](long k) { return pa->at(static_cast<std::size_t>(k)); },
          [pb](long k) { return pb->at(static_cast<std::size_t>(k)); }};
}

ExactScalar phi_eval(const PhiPolynomial& phi, const ExactScalar& x, long n) {
  ExactScalar r(1);
  for (long k = 0; k < n; ++k) r *= phi.a(k) + x * phi.b(k);
  return r;
}

ExactScalar forward(Variant v, const Sequence& g, const PhiPolynomial& phi, const ExactScalar& q,
                    long n) {
  ExactScalar s(0);
  for (long k = 0; k <= n; ++k) {
    s += forward_entry(v, phi, q, n, k) * g.at(static_cast<std::size_t>(k));
  }
  return s;
}

ExactScalar inverse(Variant v, const Sequence& f, const PhiPolynomial& phi, const ExactScalar& q,
                    long n) {
  ExactScalar s(0);
  for (long k = 0; k <= n; ++k) {
    s += inverse_entry(v, phi, q, n, k) * f.at(static_cast<std::size_t>(k));
  }
  return s;
}

Sequence forward_all(Variant v, const Sequence& g, const PhiPolynomial& phi,
                     const ExactScalar& q) {
  Sequence out;
  for (std::size_t n = 0; n < g.size(); ++n) {
    out.push_back(forward(v, g, phi, q, static_cast<long>(n)));
  }
  return out;
}

Sequence inverse_all(Variant v, const Sequence& f, const PhiPolynomial& phi,
                     const ExactScalar& q) {
  Sequence out;
  for (std::size_t n = 0; n < f.size(); ++n) {
    out.push_back(inverse(v, f, phi, q, static_cast<long>(n)));
  }
  return out;
}

Matrix forward_matrix(Variant v, const PhiPolynomial& phi, const ExactScalar& q, long size) {
  Matrix m(static_cast<std::size_t>(size), Sequence(static_cast<std::size_t>(size)));
  for (long n = 0; n < size; ++n) {
    for (long k = 0; k < size; ++k) m[n][k] = forward_entry(v, phi, q, n, k);
  }
  return m;
}

Matrix inverse_matrix(Variant v, const PhiPolynomial& phi, const ExactScalar& q, long size) {
  Matrix m(static_cast<std::size_t>(size), Sequence(static_cast<std::size_t>(size)));
  for (long n = 0; n < size; ++n) {
    for (long k = 0; k < size; ++k) m[n][k] = inverse_entry(v, phi, q, n, k);
  }
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t rows = x.size();
  const std::size_t inner = y.size();
  const std::size_t cols = inner == 0 ? 0 : y[0].size();
  Matrix out(rows, Sequence(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      ExactScalar s(0);
      for (std::size_t k = 0; k < inner; ++k) {
        if (!x[i][k].is_zero() && !y[k][j].is_zero()) s += x[i][k] * y[k][j];
      }
      out[i][j] = s;
    }
  }
  return out;
}

bool is_identity(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (!(m[i][j] == ExactScalar(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

bool check_base_change(const PhiPolynomial& phi, const ExactScalar& q, long size) {
  const ExactScalar inv_q = ExactScalar(1) / q;
  const Matrix fp = forward_matrix(Variant::kPlus, phi, q, size);
  const Matrix ip = inverse_matrix(Variant::kPlus, phi, q, size);
  const Matrix fm = forward_matrix(Variant::kMinus, phi, inv_q, size);
  const Matrix im = inverse_matrix(Variant::kMinus, phi, inv_q, size);
  for (long n = 0; n < size; ++n) {
    for (long k = 0; k < size; ++k) {
      const ExactScalar conj = exact_pow(q, choose2(n) - choose2(k));
      if (!(fp[n][k] == conj * fm[n][k]) || !(ip[n][k] == conj * im[n][k])) return false;
    }
  }
  return true;
}

VerificationReport check_dougall_dual(const ExactScalar& a, const ExactScalar& b,
                                      const ExactScalar& d, const ExactScalar& q, long n_max) {
  VerificationReport r;
  r.id = "QD";
  r.mode = Mode::kExact;
  r.points.push_back("q=" + q.str() + ", a=" + a.str() + ", b=" + b.str() + ", d=" + d.str() +
                     ", n=0.." + std::to_string(n_max));
  r.terms = n_max + 1;
  try {
    const PhiPolynomial phi = PhiPolynomial::qpoch(a, q);
    const ExactScalar z = q * a / (b * d);
    Sequence f;
    Sequence g;
    for (long n = 0; n <= n_max; ++n) {
      f.push_back(exact_pow(z, n) *
                  qpoch_multi<ExactScalar>({a, b, d}, {q * a / b, q * a / d}, q, n) *
                  exact_pow(q, choose2(n)));
      g.push_back(qpoch_multi<ExactScalar>({a, z}, {q * a / b, q * a / d}, q, n));
    }
    const Sequence g2 = inverse_all(Variant::kPlus, f, phi, q);
    const Sequence f2 = forward_all(Variant::kPlus, g, phi, q);
    r.result = Outcome::kExactEqual;
    for (long n = 0; n <= n_max; ++n) {
      if (!(g2[n] == g[n]) || !(f2[n] == f[n])) {
        r.result = Outcome::kMismatch;
        r.detail = "dual relation fails at n=" + std::to_string(n);
        break;
      }
    }
  } catch (const DomainError& e) {
    r.result = Outcome::kError;
    r.detail = e.what();
  }
  return r;
}

}  // namespace qpi
