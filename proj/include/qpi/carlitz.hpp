#pragma once

// Carlitz inverse series relations.  Both variants share one implementation:
//
//   minus:  f(n) = Σ (-1)^k [n,k] φ(q^-k; n) g(k)
//           g(n) = Σ (-1)^k [n,k] q^C(n-k,2) (a_k + q^-k b_k) / φ(q^-n; k+1) f(k)
//   plus:   f(n) = Σ (-1)^k [n,k] q^C(n-k,2) φ(q^k; n) g(k)
//           g(n) = Σ (-1)^k [n,k] (a_k + q^k b_k) / φ(q^n; k+1) f(k)

#include <functional>
#include <vector>

#include "qpi/exact.hpp"
#include "qpi/report.hpp"

namespace qpi {

// φ(x;n) = Π_{k<n} (a_k + x b_k), φ(x;0) = 1.
struct PhiPolynomial {
  std::function<ExactScalar(long)> a;
  std::function<ExactScalar(long)> b;

  // φ(x;n) = (cx; q)_n, i.e. a_k = 1, b_k = -c q^k.
  static PhiPolynomial qpoch(const ExactScalar& c, const ExactScalar& q);
  // a_k, b_k read from finite tables.
  static PhiPolynomial table(std::vector<ExactScalar> a, std::vector<ExactScalar> b);
};

ExactScalar phi_eval(const PhiPolynomial& phi, const ExactScalar& x, long n);

enum class Variant { kMinus, kPlus };

using Sequence = std::vector<ExactScalar>;
using Matrix = std::vector<std::vector<ExactScalar>>;

// Single entries; the sequence must cover indices 0..n.
ExactScalar forward(Variant v, const Sequence& g, const PhiPolynomial& phi, const ExactScalar& q,
                    long n);
// Throws PoleError when φ vanishes at the dual point.
ExactScalar inverse(Variant v, const Sequence& f, const PhiPolynomial& phi, const ExactScalar& q,
                    long n);

inline ExactScalar forward_minus(const Sequence& g, const PhiPolynomial& phi,
                                 const ExactScalar& q, long n) {
  return forward(Variant::kMinus, g, phi, q, n);
}
inline ExactScalar inverse_minus(const Sequence& f, const PhiPolynomial& phi,
                                 const ExactScalar& q, long n) {
  return inverse(Variant::kMinus, f, phi, q, n);
}
inline ExactScalar forward_plus(const Sequence& g, const PhiPolynomial& phi,
                                const ExactScalar& q, long n) {
  return forward(Variant::kPlus, g, phi, q, n);
}
inline ExactScalar inverse_plus(const Sequence& f, const PhiPolynomial& phi,
                                const ExactScalar& q, long n) {
  return inverse(Variant::kPlus, f, phi, q, n);
}

// Whole transformed sequences of the same length as the input.
Sequence forward_all(Variant v, const Sequence& g, const PhiPolynomial& phi,
                     const ExactScalar& q);
Sequence inverse_all(Variant v, const Sequence& f, const PhiPolynomial& phi,
                     const ExactScalar& q);

// size x size lower-triangular transform matrices.
Matrix forward_matrix(Variant v, const PhiPolynomial& phi, const ExactScalar& q, long size);
Matrix inverse_matrix(Variant v, const PhiPolynomial& phi, const ExactScalar& q, long size);
Matrix multiply(const Matrix& x, const Matrix& y);
bool is_identity(const Matrix& m);

// Plus matrices at base q against D M(1/q) D^-1 of the minus matrices,
// D = diag(q^C(n,2)).
bool check_base_change(const PhiPolynomial& phi, const ExactScalar& q, long size);

// Replays the q-Dougall derivation: with φ(x;n) = (ax;q)_n and
// f(n) = (qa/bd)^n [a,b,d; qa/b,qa/d]_n q^C(n,2), inverse_plus yields
// g(n) = [a, qa/bd; qa/b, qa/d]_n for n = 0..n_max, and forward_plus maps g
// back to f.
VerificationReport check_dougall_dual(const ExactScalar& a, const ExactScalar& b,
                                      const ExactScalar& d, const ExactScalar& q, long n_max);

}  // namespace qpi
