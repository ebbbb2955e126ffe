#pragma once

// Evaluation context for one identity at one point q = p^L.  Powers q^e and
// q-factorials (q^x; q^b)_n with lattice exponents are memoized, since a
// series term at index k reuses the prefixes computed for k-1.

#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "qpi/degree.hpp"
#include "qpi/qkernel.hpp"
#include "qpi/scalar.hpp"

namespace qpi {

template <class S>
class Lattice {
 public:
  using Scalar = S;

  Lattice(S p, int lattice) : p_(std::move(p)), lattice_(lattice), q_(ipow(p_, lattice)) {
    if (lattice < 1) throw DomainError("lattice denominator must be positive");
  }

  const S& p() const { return p_; }
  int lattice() const { return lattice_; }
  const S& q() const { return q_; }

  S one() const { return unit_like(p_); }
  S c(Frac v) const { return constant_like(v, p_); }
  S value(const ExactScalar& v) const { return constant_like(v, p_); }

  // q^e for e on the lattice.
  const S& pow(Frac e) {
    const long m = e.on_lattice(lattice_);
    auto it = powers_.find(m);
    if (it == powers_.end()) it = powers_.emplace(m, ipow(p_, m)).first;
    return it->second;
  }

  // (q^x; q^b)_n
  S poch(Frac x, long n, Frac base = 1) {
    auto& prefix = prefixes_[{x.on_lattice(lattice_), base.on_lattice(lattice_)}];
    if (prefix.empty()) prefix.push_back(one());
    while (static_cast<long>(prefix.size()) <= n) {
      const long k = static_cast<long>(prefix.size()) - 1;
      prefix.push_back(prefix.back() * (1 - pow(x + base * k)));
    }
    return prefix[static_cast<std::size_t>(n)];
  }

  // (x; q^b)_n for an arbitrary scalar x.
  S poch_of(const S& x, long n, Frac base = 1) { return qpoch_rising<S>(x, pow(base), n); }

  // <x; q>_n
  S falling(const S& x, long n) const { return qpoch_falling<S>(x, q_, n); }

  // Gaussian binomial in base q, zero outside 0 <= n <= m.
  S binom(long m, long n) {
    if (n < 0 || n > m) return c(Frac(0));
    return poch(Frac(1), m) / (poch(Frac(1), n) * poch(Frac(1), m - n));
  }

  // (q^x; q^b)_inf, certified.
  S poch_inf(Frac x, Frac base = 1) {
    static_assert(std::is_same_v<S, ApproxScalar>, "infinite products need ApproxScalar");
    return qpoch_infinite(pow(x), pow(base));
  }
  S poch_inf_of(const S& x, Frac base = 1) {
    static_assert(std::is_same_v<S, ApproxScalar>, "infinite products need ApproxScalar");
    return qpoch_infinite(x, pow(base));
  }

  // Γ_{q^b}(x)
  S gamma(Frac x, Frac base = 1) {
    static_assert(std::is_same_v<S, ApproxScalar>, "q-gamma needs ApproxScalar");
    return qgamma_at(x, pow(base));
  }

 private:
  S p_;
  int lattice_;
  S q_;
  std::map<long, S> powers_;
  std::map<std::pair<long, long>, std::vector<S>> prefixes_;
};

}  // namespace qpi
