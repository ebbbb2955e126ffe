#include <sstream>

#include "qpi/identities.hpp"

namespace qpi {

namespace {

using A = ApproxScalar;
using C = Lattice<A>;

constexpr Frac h(1, 2);
constexpr Frac t1(1, 3);
constexpr Frac t2(2, 3);
constexpr Frac f1(1, 4);
constexpr Frac f3(3, 4);
constexpr Frac s1(1, 6);
constexpr Frac s5(5, 6);
constexpr Frac f32(3, 2);
constexpr Frac f43(4, 3);
constexpr Frac f53(5, 3);

// 1 - q^e and 1 + q^e
template <class S>
S om(Lattice<S>& c, Frac e) {
  return 1 - c.pow(e);
}
template <class S>
S op(Lattice<S>& c, Frac e) {
  return 1 + c.pow(e);
}
template <class S>
S alt(long k, S x) {
  return k % 2 != 0 ? -x : x;
}
template <class S>
S sq(const S& x) {
  return x * x;
}
template <class S>
S cube(const S& x) {
  return x * x * x;
}

// ---- terminating relations, generic over the scalar type -------------------

// 3φ2 [q^-n, a, b; c, q^{1-n}ab/c] = [c/a, c/b; c, c/ab]_n
struct PfaffSaalschutz {
  template <class S>
  Sides<S> operator()(Lattice<S>& ctx, const ParamSet& ps) const {
    const S a = resolve(ctx, *ps.a);
    const S b = resolve(ctx, *ps.b);
    const S c = resolve(ctx, *ps.c);
    const S& q = ctx.q();
    const long n = ps.n;
    const S qmn = ipow(q, -n);
    const S d = q * qmn * a * b / c;
    S lhs = ctx.c(Frac(0));
    S term = ctx.one();
    S qk = ctx.one();
    for (long k = 0; k <= n; ++k) {
      lhs += term;
      term *= (1 - qmn * qk) * (1 - a * qk) * (1 - b * qk) * q;
      term /= (1 - q * qk) * (1 - c * qk) * (1 - d * qk);
      qk *= q;
    }
    S rhs = qpoch_multi<S>({c / a, c / b}, {c, c / (a * b)}, q, n);
    return {lhs, rhs};
  }
};

// 6φ5 q-Dougall sum, with the very-well-poised factor written as
// (1 - a q^{2k}) / (1 - a).
struct QDougall {
  template <class S>
  Sides<S> operator()(Lattice<S>& ctx, const ParamSet& ps) const {
    const S a = resolve(ctx, *ps.a);
    const S b = resolve(ctx, *ps.b);
    const S d = resolve(ctx, *ps.d);
    const S& q = ctx.q();
    const long n = ps.n;
    const S qmn = ipow(q, -n);
    const S z = ipow(q, n + 1) * a / (b * d);
    S lhs = ctx.c(Frac(0));
    S ratio = ctx.one();  // (a,b,d,q^-n)_k / (q,qa/b,qa/d,q^{n+1}a)_k z^k
    S qk = ctx.one();
    for (long k = 0; k <= n; ++k) {
      lhs += (1 - a * qk * qk) / (1 - a) * ratio;
      ratio *= (1 - a * qk) * (1 - b * qk) * (1 - d * qk) * (1 - qmn * qk) * z;
      ratio /= (1 - q * qk) * (1 - q * a / b * qk) * (1 - q * a / d * qk) *
               (1 - ipow(q, n + 1) * a * qk);
      qk *= q;
    }
    S rhs = qpoch_multi<S>({q * a, q * a / (b * d)}, {q * a / b, q * a / d}, q, n);
    return {lhs, rhs};
  }
};

template <class S>
S lhs_ace(Lattice<S>& ctx, const S& a, const S& c, const S& e, long n) {
  const S& q = ctx.q();
  return qpoch_multi<S>({a, c}, {a * e, q * c / e}, q, n);
}

struct ReciprocalA {
  template <class S>
  Sides<S> operator()(Lattice<S>& ctx, const ParamSet& ps) const {
    const S a = resolve(ctx, *ps.a);
    const S c = resolve(ctx, *ps.c);
    const S e = resolve(ctx, *ps.e);
    const S& q = ctx.q();
    const long n = ps.n;
    const S ae = a * e;
    const S u = ipow(q, 1 - n) / ae;   // q^{1-n}/ae
    const S v = ipow(q, -n) * e / c;   // q^{-n} e/c
    S rhs = ctx.c(Frac(0));
    for (long k = 0; 2 * k <= n; ++k) {
      const S common = ctx.poch_of(q / e, k) * ctx.poch_of(q * c / ae, k) /
                       ctx.poch_of(q * c / e, k);
      S even = ctx.binom(n, 2 * k) * (1 - ipow(q, -k) * e / c) *
               ipow(q, (1 + 2 * k) * (k - n)) / (ctx.poch_of(u, k) * ctx.poch_of(v, k + 1));
      even *= ctx.poch_of(e, k) * ctx.poch_of(ae / c, k) / ctx.poch_of(ae, k) * common;
      rhs += even;
      if (2 * k + 1 <= n) {
        S odd = ctx.binom(n, 2 * k + 1) * (1 - ipow(q, -k) / ae) *
                ipow(q, (1 + k) * (1 + 2 * k - 2 * n)) /
                (ctx.poch_of(u, k + 1) * ctx.poch_of(v, k + 1));
        odd *= ctx.poch_of(e, k + 1) * ctx.poch_of(ae / c, k + 1) / ctx.poch_of(ae, k + 1) *
               common;
        rhs -= odd;
      }
    }
    return {lhs_ace(ctx, a, c, e, n), rhs};
  }
};

struct ReciprocalB {
  template <class S>
  Sides<S> operator()(Lattice<S>& ctx, const ParamSet& ps) const {
    const S a = resolve(ctx, *ps.a);
    const S c = resolve(ctx, *ps.c);
    const S e = resolve(ctx, *ps.e);
    const S& q = ctx.q();
    const long n = ps.n;
    const S ae = a * e;
    const S qna = ipow(q, n) * a;
    const S qnce = ipow(q, n) * c / e;
    S rhs = ctx.c(Frac(0));
    for (long k = 0; 2 * k <= n; ++k) {
      const S common = ctx.poch_of(q / e, k) * ctx.poch_of(a, k) / ctx.poch_of(q * c / e, k);
      S even = ipow(q, (3 * k * k - k) / 2) * ctx.binom(n, 2 * k) * (1 - ipow(q, k) * c / e) *
               ipow(c, 2 * k) / (ctx.poch_of(qna, k) * ctx.falling(qnce, k + 1));
      even *= ctx.poch_of(e, k) / ipow(e, k) * ctx.poch_of(ae / c, 2 * k) /
              ctx.poch_of(ae, 2 * k) * common;
      rhs += alt(k, even);
      if (2 * k + 1 <= n) {
        S odd = ipow(q, (3 * k * k + k) / 2) * ctx.binom(n, 2 * k + 1) *
                (1 - a * ipow(q, 3 * k + 1)) * ipow(c, 2 * k + 1) /
                (ctx.poch_of(qna, k + 1) * ctx.falling(qnce, k + 1));
        odd *= ctx.poch_of(e, k + 1) / ipow(e, k + 1) * ctx.poch_of(ae / c, 2 * k + 1) /
               ctx.poch_of(ae, 2 * k + 1) * common;
        rhs += alt(k, odd);
      }
    }
    return {lhs_ace(ctx, a, c, e, n), rhs};
  }
};

struct ReciprocalC {
  template <class S>
  Sides<S> operator()(Lattice<S>& ctx, const ParamSet& ps) const {
    const S a = resolve(ctx, *ps.a);
    const S c = resolve(ctx, *ps.c);
    const S e = resolve(ctx, *ps.e);
    const S& q = ctx.q();
    const long n = ps.n;
    const S ae = a * e;
    const S qna = ipow(q, n) * a;
    const S qnc = ipow(q, n) * c;
    S rhs = ctx.c(Frac(0));
    for (long k = 0; 2 * k <= n; ++k) {
      const S head = ctx.poch_of(a, k) * ctx.poch_of(q / e, k) * ctx.poch_of(ae / c, k);
      S even = ctx.binom(n, 2 * k) * (1 - ipow(q, 3 * k) * c) * ipow(q, 3 * k * k - k) *
               ipow(a * c, k) / (ctx.poch_of(qna, k) * ctx.poch_of(qnc, k + 1));
      even *= head * ctx.poch_of(c, k) * ctx.poch_of(e, k) * ctx.poch_of(q * c / ae, k) /
              (ctx.poch_of(ae, 2 * k) * ctx.poch_of(q * c / e, 2 * k));
      rhs += even;
      if (2 * k + 1 <= n) {
        S odd = a * ctx.binom(n, 2 * k + 1) * (1 - ipow(q, 3 * k + 1) * a) *
                ipow(q, 3 * k * k + 2 * k) * ipow(a * c, k) /
                (ctx.poch_of(qna, k + 1) * ctx.poch_of(qnc, k + 1));
        odd *= head * ctx.poch_of(c, k + 1) * ctx.poch_of(e, k + 1) *
               ctx.poch_of(q * c / ae, k + 1) /
               (ctx.poch_of(ae, 2 * k + 1) * ctx.poch_of(q * c / e, 2 * k + 1));
        rhs -= odd;
      }
    }
    return {lhs_ace(ctx, a, c, e, n), rhs};
  }
};

// ---- nonterminating theorems ---------------------------------------------

struct Ace {
  A a, c, e;
};
Ace ace(C& ctx, const ParamSet& ps) {
  return {resolve(ctx, *ps.a), resolve(ctx, *ps.c), resolve(ctx, *ps.e)};
}

A thm_ab_lhs(C& ctx, const ParamSet& ps) {
  const auto [a, c, e] = ace(ctx, ps);
  return ctx.poch_inf_of(a) * ctx.poch_inf_of(c) /
         (ctx.poch_inf_of(a * e) * ctx.poch_inf_of(c / e));
}

A thm_a_term(C& ctx, const ParamSet& ps, long k) {
  const auto [a, c, e] = ace(ctx, ps);
  const A& q = ctx.q();
  const A& qk = ctx.pow(k);
  const A ae = a * e;
  A t = ipow(a * c, k) / ctx.poch(1, 2 * k) * ctx.poch_of(e, k) * ctx.poch_of(ae / c, k) /
        ctx.poch_of(ae, k) * ctx.poch_of(q / e, k) * ctx.poch_of(q * c / ae, k) /
        ctx.poch_of(c / e, k) * ctx.pow(k * k - k);
  return t * (1 + qk * c * (1 - qk * e) * (1 - qk * ae / c) /
                      (e * om(ctx, 1 + 2 * k) * (1 - qk * c / e)));
}

A thm_b_term(C& ctx, const ParamSet& ps, long k) {
  const auto [a, c, e] = ace(ctx, ps);
  const A& q = ctx.q();
  const A& qk = ctx.pow(k);
  const A ae = a * e;
  A t = ipow(-(c * c) / e, k) / ctx.poch(1, 2 * k) * ctx.poch_of(ae / c, 2 * k) /
        ctx.poch_of(ae, 2 * k) * ctx.poch_of(a, k) * ctx.poch_of(e, k) *
        ctx.poch_of(q / e, k) / ctx.poch_of(c / e, k) * ctx.pow(Frac(3 * k * k - k, 2));
  return t * (1 + qk * c * (1 - a * ctx.pow(3 * k + 1)) * (1 - qk * e) *
                      (1 - ctx.pow(2 * k) * ae / c) /
                      (e * om(ctx, 1 + 2 * k) * (1 - qk * c / e) * (1 - ae * ctx.pow(2 * k))));
}

A thm_c_lhs(C& ctx, const ParamSet& ps) {
  const auto [a, c, e] = ace(ctx, ps);
  const A& q = ctx.q();
  return ctx.poch_inf_of(a) * ctx.poch_inf_of(q * c) /
         (ctx.poch_inf_of(a * e) * ctx.poch_inf_of(q * c / e));
}

A thm_c_term(C& ctx, const ParamSet& ps, long k) {
  const auto [a, c, e] = ace(ctx, ps);
  const A& q = ctx.q();
  const A& qk = ctx.pow(k);
  const A& q3k = ctx.pow(3 * k);
  const A ae = a * e;
  A t = (1 - q3k * c) / (1 - c) * ctx.poch_of(a, k) * ctx.poch_of(c, k) * ctx.poch_of(e, k) *
        ctx.poch_of(q / e, k) * ctx.poch_of(ae / c, k) * ctx.poch_of(q * c / ae, k) /
        (ctx.poch(1, 2 * k) * ctx.poch_of(ae, 2 * k) * ctx.poch_of(q * c / e, 2 * k)) *
        ctx.pow(3 * k * k - k) * ipow(a * c, k);
  return t * (1 - q3k * a * (1 - ctx.pow(3 * k + 1) * a) * (1 - qk * c) * (1 - qk * e) *
                      (1 - ctx.pow(1 + k) * c / ae) /
                      ((1 - q3k * c) * om(ctx, 1 + 2 * k) * (1 - ctx.pow(2 * k) * ae) *
                       (1 - ctx.pow(1 + 2 * k) * c / e)));
}

// ---- corollaries in λ --------------------------------------------------------

template <class S>
S cc_a_minus(Lattice<S>& c, const ParamSet& ps, long k) {
  const Frac l = ps.lambda;
  return c.poch(l, k) * c.poch(1 + l, k) * c.poch(1 - l, k) * c.poch(2 - l, k) /
         (sq(c.poch(1, k)) * c.poch(2, 2 * k)) * c.pow(k * k + k) *
         (1 - om(c, -k) * om(c, 1 + 2 * k) / (om(c, l + k) * om(c, 1 - l + k)));
}

template <class S>
S cc_a_plus(Lattice<S>& c, const ParamSet& ps, long k) {
  const Frac l = ps.lambda;
  return c.pow(k * k + k) * c.poch(l, k) * c.poch(1 - l, k) / c.poch(2, 2 * k) *
         (om(c, 1 + 2 * k) / om(c, l + k) - om(c, l + k) / om(c, l - 1 - k));
}

template <class S>
S cc_b_minus(Lattice<S>& c, const ParamSet& ps, long k) {
  const Frac l = ps.lambda;
  S t = c.poch(1 + l, 2 * k) / sq(c.poch(2, 2 * k)) * sq(c.poch(l, k)) * c.poch(2 - l, k) /
        c.poch(1, k) * c.pow(Frac(k) * (3 + 3 * k - 2 * l) / 2) * om(c, 1 + l + 3 * k) /
        om(c, 1);
  return alt(k, t * (1 + c.pow(-k) * om(c, k) * sq(om(c, 1 + 2 * k)) /
                             (om(c, 1 - l + k) * om(c, l + 2 * k) * om(c, 1 + l + 3 * k))));
}

template <class S>
S cc_b_plus(Lattice<S>& c, const ParamSet& ps, long k) {
  const Frac l = ps.lambda;
  S t = c.poch(1, k) * c.poch(l, k) / c.poch(1, 2 * k) * c.poch(l, 2 * k) /
        c.poch(1 + l, 2 * k) * c.pow(Frac(k) * (3 + 3 * k - 2 * l) / 2);
  return alt(k, t * (1 + c.pow(1 + k - l) * om(c, 2 + 3 * k) * om(c, l + k) * om(c, l + 2 * k) /
                             (om(c, 1 + 2 * k) * om(c, 1 - l + k) * om(c, 1 + l + 2 * k))));
}

template <class S>
S cc_c_minus(Lattice<S>& c, const ParamSet& ps, long k) {
  const Frac l = ps.lambda;
  return c.pow(3 * k * k) * cube(c.poch(l, k)) * cube(c.poch(1 - l, k)) /
         cube(c.poch(1, 2 * k)) * om(c, 3 * k + 1 - l) / om(c, 1) *
         (1 - c.pow(3 * k + l) * om(c, 3 * k + 1 + l) * cube(om(c, k + 1 - l)) /
                  (om(c, 3 * k + 1 - l) * cube(om(c, 2 * k + 1))));
}

template <class S>
S cc_c_plus(Lattice<S>& c, const ParamSet& ps, long k) {
  const Frac l = ps.lambda;
  return om(c, 3 * k + 1) / om(c, 1) * sq(c.poch(1, k)) * sq(c.poch(l, k)) *
         sq(c.poch(1 - l, k)) /
         (c.poch(1, 2 * k) * c.poch(1 + l, 2 * k) * c.poch(2 - l, 2 * k)) *
         c.pow(3 * k * k + k) *
         (1 - c.pow(1 + 3 * k) * om(c, 2 + 3 * k) * om(c, 1 + k) * om(c, l + k) *
                  om(c, 1 - l + k) /
                  (om(c, 1 + 3 * k) * om(c, 1 + 2 * k) * om(c, 1 + l + 2 * k) *
                   om(c, 2 - l + 2 * k)));
}

// ---- lettered examples ---------------------------------------------------------

template <class S>
S w1(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, cube(c.poch(h, k)) / cube(c.poch(1, k)) * om(c, 2 * k + h) / om(c, 1) *
                    c.pow(Frac(k * k, 2)));
}

template <class S>
S a1(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(k * k) * ipow(c.poch(h, k), 4) / (sq(c.poch(1, k)) * c.poch(1, 2 * k)) *
         (1 + c.pow(k + h) - 2 * c.pow(2 * k + h)) / (om(c, 1) * op(c, k + h));
}

template <class S>
S a1_alt(Lattice<S>& c, const ParamSet&, long k) {
  return om(c, 6 * k + 1) / om(c, 4) * sq(c.poch(1, k, 2)) * c.poch(2, k, 4) /
         cube(c.poch(4, k, 4)) * c.pow(k * k);
}

// The A2–A4 displays share one shape with parameters (u, 1-u).
template <class S>
S a_minus_shape(Lattice<S>& c, long k, Frac u) {
  return c.pow(k * k + k) * c.poch(u, k) * c.poch(1 - u, k) * c.poch(1 + u, k) *
         c.poch(2 - u, k) / (sq(c.poch(1, k)) * c.poch(2, 2 * k)) *
         (1 - om(c, -k) * om(c, 2 * k + 1) / (om(c, k + u) * om(c, k + 1 - u)));
}

template <class S>
S a_plus_shape(Lattice<S>& c, long k, Frac u) {
  return c.pow(k * k + k) * c.poch(u, k) * c.poch(1 - u, k) / c.poch(2, 2 * k) *
         (om(c, 1 + 2 * k) / om(c, k + u) - om(c, k + u) / om(c, -k - (1 - u)));
}

template <class S>
S a5(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(k * k + k) * sq(c.poch(h, k)) / c.poch(2, 2 * k) * (1 + 2 * c.pow(k + h));
}

template <class S>
S a8(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(k * k) + Frac(2 * k, 3)) * c.poch(t1, k) * sq(c.poch(t2, k)) /
         (c.poch(Frac(4, 3), k) * c.poch(2, 2 * k)) *
         (1 + c.pow(k + t1) - 2 * c.pow(2 * k + 1)) / om(c, t1);
}

template <class S>
S a9(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(k) * (Frac(k) - h)) * cube(c.poch(h, k)) * c.poch(Frac(3, 2), k) /
         (sq(c.poch(f3, k)) * c.poch(2, 2 * k)) *
         (1 + c.pow(k + h) - 2 * c.pow(2 * k + f1)) / (om(c, 1) * op(c, h));
}

template <class S>
S a10(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(k) * (Frac(k) + h)) * cube(c.poch(h, k)) * c.poch(Frac(3, 2), k) /
         (sq(c.poch(Frac(5, 4), k)) * c.poch(2, 2 * k)) * op(c, f1) *
         (1 + c.pow(k + h) - 2 * c.pow(2 * k + f3)) / om(c, f1);
}

template <class S>
S b1(Lattice<S>& c, const ParamSet&, long k) {
  const S s = op(c, k + h);
  return alt(k, cube(c.poch(h, k)) * c.poch(h, 2 * k) / (c.poch(1, k) * sq(c.poch(1, 2 * k))) *
                    c.pow(Frac(3 * k * k, 2)) *
                    ((sq(s) * om(c, 3 * k + h) - c.pow(2 * k + h) * om(c, 2 * k + h)) /
                     (om(c, 1) * sq(s))));
}

template <class S>
S b1_alt(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, sq(c.poch(h, k)) * c.poch(f1, 2 * k, h) / (sq(c.poch(1, k)) * c.poch(1, 2 * k)) *
                    c.pow(Frac(k * k, 2)) *
                    (om(c, 2 * k + f1) / om(c, 1) +
                     c.pow(k + f1) * om(c, k + f1) / (om(c, 1) * op(c, k + h))));
}

template <class S>
S b2(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, c.pow(Frac(3 * k * k, 2) + k) * c.poch(1, k) * c.poch(h, k) * c.poch(h, 2 * k) /
                    (c.poch(Frac(3, 2), 2 * k) * c.poch(1, 2 * k)) *
                    (1 + c.pow(k + h) * om(c, 3 * k + 2) * om(c, 2 * k + h) /
                             (om(c, 2 * k + 1) * om(c, 2 * k + Frac(3, 2)))));
}

template <class S>
S b3(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k + 1, c.poch(1, k + 1) * c.poch(t1, k) * c.poch(f43, 2 * k) /
                        (c.poch(2, 2 * k) * c.poch(f43, 2 * k + 1)) *
                        c.pow(Frac(9 * k * k + 19 * k + 6, 6)) *
                        (1 + op(c, k + t2) * om(c, -2 * k - 1) * om(c, 3 * k + 1) /
                                 (om(c, k + 1) * om(c, 2 * k + t1))));
}

template <class S>
S b4(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, c.poch(1, k) * c.poch(t2, k) * c.poch(t2, 2 * k) /
                    (c.poch(1, 2 * k) * c.poch(f53, 2 * k)) *
                    c.pow(Frac(9 * k * k + 5 * k, 6)) *
                    (1 + c.pow(k + t1) * op(c, k + t1) * om(c, k + t2) * om(c, 3 * k + 2) /
                             (om(c, 2 * k + 1) * om(c, 2 * k + f53))));
}

template <class S>
S b5(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, c.poch(t2, k) * c.poch(s5, k) / c.poch(1, 2 * k) * c.poch(h, 2 * k) /
                    c.poch(s5, 2 * k) * c.pow(Frac(3 * k * k, 2)) *
                    (1 + c.pow(k + s1) * om(c, h + 2 * k) * om(c, Frac(5, 3) + 3 * k) /
                             (om(c, 1 + 2 * k) * om(c, s5 + 2 * k))));
}

template <class S>
S c1(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(3 * k * k) * ipow(c.poch(h, k), 6) / cube(c.poch(1, 2 * k)) *
         om(c, 3 * k + h) / om(c, 1) *
         (1 - c.pow(3 * k + h) * om(c, 3 * k + Frac(3, 2)) /
                  (cube(op(c, k + h)) * om(c, 3 * k + h)));
}

template <class S>
S c2(Lattice<S>& c, const ParamSet&, long k) {
  return om(c, 3 * k + f3) / om(c, 1) * cube(c.poch(f1, k)) * cube(c.poch(f3, k)) /
         cube(c.poch(1, 2 * k)) * c.pow(3 * k * k) *
         (1 - c.pow(3 * k + f1) * om(c, 3 * k + Frac(5, 4)) * cube(om(c, k + f3)) /
                  (om(c, 3 * k + f3) * cube(om(c, 2 * k + 1))));
}

template <class S>
S c2_simple(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, om(c, Frac(1 + 6 * k, 4)) / om(c, 1) * cube(c.poch(f1, k, h)) /
                    cube(c.poch(1, k)) * c.pow(Frac(3 * k * k, 4)));
}

template <class S>
S c3(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(3 * k * k + k) * om(c, 3 * k + 1) / om(c, 1) * sq(c.poch(1, k)) *
         ipow(c.poch(h, k), 4) / (sq(c.poch(Frac(3, 2), 2 * k)) * c.poch(1, 2 * k)) *
         (1 - c.pow(3 * k + 1) * om(c, k + h) * om(c, k + 1) * om(c, 3 * k + 2) /
                  (op(c, k + h) * sq(om(c, 2 * k + Frac(3, 2))) * om(c, 3 * k + 1)));
}

template <class S>
S c4(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(3 * k * k) - Frac(k, 2)) * om(c, 3 * k + f1) / om(c, 1) *
         ipow(c.poch(f1, k), 4) * sq(c.poch(f3, k)) /
         (c.poch(h, 2 * k) * sq(c.poch(1, 2 * k))) *
         (1 - c.pow(3 * k + f1) * om(c, k + f1) * om(c, k + f3) * om(c, 3 * k + Frac(5, 4)) /
                  (op(c, k + f1) * sq(om(c, 2 * k + 1)) * om(c, 3 * k + f1)));
}

template <class S>
S c5(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(3 * k * k) + Frac(k, 2)) * om(c, 3 * k + f3) / om(c, 1) *
         sq(c.poch(f1, k)) * ipow(c.poch(f3, k), 4) /
         (c.poch(Frac(3, 2), 2 * k) * sq(c.poch(1, 2 * k))) *
         (1 - c.pow(3 * k + f3) * om(c, k + f1) * om(c, k + f3) * om(c, 3 * k + Frac(7, 4)) /
                  (op(c, k + f3) * sq(om(c, 2 * k + 1)) * om(c, 3 * k + f3)));
}

template <class S>
S d1(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(2 * k * k + k) / om(c, 1) * c.poch(t1, k) * c.poch(t2, k) *
         c.poch(t1, 2 * k + 1) * c.poch(t2, 2 * k + 1) /
         (c.poch(1, k) * c.poch(1, 2 * k) * c.poch(1, 3 * k + 1)) *
         (1 - om(c, -k) * om(c, 3 * k + 1) / (om(c, 2 * k + t1) * om(c, 2 * k + t2)) +
          c.pow(2 * k + 1) * om(c, k + t1) * om(c, k + t2) /
              (om(c, 2 * k + 1) * om(c, 3 * k + 2)));
}

template <class S>
S d2(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(k + 1) * (Frac(2 * k) + t2)) / om(c, 1) * sq(c.poch(t2, k)) *
         sq(c.poch(t1, 2 * k + 1)) /
         (c.poch(Frac(5, 3), k) * c.poch(Frac(4, 3), 2 * k) * c.poch(1, 3 * k + 1)) *
         (1 - om(c, -k - t2) * om(c, 3 * k + 1) / sq(om(c, 2 * k + t1)) +
          c.pow(2 * k + Frac(4, 3)) * sq(om(c, k + t2)) /
              (om(c, 2 * k + Frac(4, 3)) * om(c, 3 * k + 2)));
}

template <class S>
S d3(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(k + 1) * (Frac(2 * k) + t1)) / om(c, 1) * sq(c.poch(t1, k)) *
         sq(c.poch(t2, 2 * k + 1)) /
         (c.poch(Frac(4, 3), k) * c.poch(Frac(5, 3), 2 * k) * c.poch(1, 3 * k + 1)) *
         (1 - om(c, -k - t1) * om(c, 3 * k + 1) / sq(om(c, 2 * k + t2)) +
          c.pow(2 * k + Frac(5, 3)) * sq(om(c, k + t1)) /
              (om(c, 2 * k + Frac(5, 3)) * om(c, 3 * k + 2)));
}

template <class S>
S d4(Lattice<S>& c, const ParamSet&, long k) {
  const S w = om(c, 4 * k + Frac(5, 3));
  return w / om(c, 1) * sq(c.poch(t1, k)) * sq(c.poch(t2, k)) * c.poch(t1, 2 * k + 1) *
         c.poch(t2, 2 * k + 1) / (c.poch(1, 2 * k) * sq(c.poch(1, 3 * k + 1))) *
         c.pow(5 * k * k + 2 * k) *
         (1 - om(c, -2 * k) * sq(om(c, 3 * k + 1)) /
                  (om(c, 2 * k + t1) * om(c, 2 * k + t2) * w) -
          c.pow(4 * k + Frac(4, 3)) * om(c, 2 * k + Frac(5, 3)) * sq(om(c, k + t2)) *
              om(c, 4 * k + Frac(7, 3)) / (om(c, 2 * k + 1) * sq(om(c, 3 * k + 2)) * w));
}

template <class S>
S d5(Lattice<S>& c, const ParamSet&, long k) {
  const S r1 = om(c, 3 * k + 1);
  const S r2 = om(c, 3 * k + Frac(3, 2));
  return c.pow(Frac(5 * k * k) + Frac(3 * k, 2)) / op(c, h) * sq(c.poch(h, k)) *
         sq(c.poch(1, k)) * c.poch(h, 2 * k) / (c.poch(Frac(3, 2), 3 * k) * c.poch(1, 3 * k)) *
         (1 + c.pow(2 * k + h) * om(c, 2 * k + h) * om(c, 4 * k + 2) / (r1 * r2) -
          c.pow(6 * k + Frac(5, 2)) * om(c, k + h) * om(c, k + 1) * om(c, 2 * k + h) *
              om(c, 4 * k + 3) / (r1 * r2 * om(c, 3 * k + 2) * om(c, 3 * k + Frac(5, 2))));
}

template <class S>
S d5_simple(Lattice<S>& c, const ParamSet&, long k) {
  return c.pow(Frac(k * (3 + 5 * k), 4)) * sq(c.poch(h, k, h)) * c.poch(h, k) /
         c.poch(Frac(3, 2), 3 * k, h) *
         (1 + c.pow(h + k) - c.pow(1 + Frac(3 * k, 2)) - c.pow(1 + 2 * k)) / om(c, h);
}

template <class S>
S quad(Lattice<S>& c, const ParamSet&, long k) {
  return alt(k, sq(c.poch(f1, k, h)) * c.poch(f1, 3 * k, h) /
                    (c.poch(1, k) * sq(c.poch(1, 2 * k))) * c.pow(Frac(7 * k * k, 4)) *
                    (om(c, f1 + Frac(5 * k, 2)) / om(c, 1) -
                     c.pow(f3 + Frac(5 * k, 2)) * om(c, f1 + Frac(3 * k, 2)) /
                         (om(c, 1) * sq(op(c, f1 + Frac(k, 2))) * sq(op(c, h + k)))));
}

// ---- closed-form sides ------------------------------------------------------------

A inv_gamma_sq(C& c, const ParamSet&) { return 1 / sq(c.gamma(h)); }

// ---- targets and classical companions -----------------------------------------

ConstantTarget target(Frac coeff, std::string display) {
  ConstantTarget t;
  t.coeff = coeff;
  t.display = std::move(display);
  return t;
}

ClassicalSeries series(std::vector<Frac> top, std::vector<Frac> bottom, Frac z,
                       std::vector<std::int64_t> w) {
  return {std::move(top), std::move(bottom), z, std::move(w)};
}

std::vector<Frac> lattice_lambdas(int lattice) {
  std::vector<Frac> out;
  for (int m = 1; m < lattice; ++m) out.emplace_back(m, lattice);
  return out;
}

std::vector<IdentityRecord> build() {
  std::vector<IdentityRecord> out;

  auto terminating = [&](std::string id, int lattice, ParamDomain dom, std::string desc,
                         auto fn) {
    IdentityRecord r;
    r.id = std::move(id);
    r.kind = Kind::kTerminating;
    r.lattice = lattice;
    r.domain = dom;
    r.description = std::move(desc);
    r.exact = fn;
    r.degree = fn;
    out.push_back(std::move(r));
  };
  auto series_rec = [&](std::string id, int lattice, std::string desc, ApproxSide lhs,
                        ApproxTerm term) -> IdentityRecord& {
    IdentityRecord r;
    r.id = std::move(id);
    r.kind = Kind::kNonterminating;
    r.lattice = lattice;
    r.description = std::move(desc);
    r.lhs = std::move(lhs);
    r.term = std::move(term);
    out.push_back(std::move(r));
    return out.back();
  };
  auto companion = [](IdentityRecord& r, ConstantTarget t, ClassicalSeries s, Frac scale) {
    r.target = std::move(t);
    r.classical = std::move(s);
    r.limit_scale = scale;
  };


  terminating("PS", 1, ParamDomain::kFreeABC, "q-Pfaff-Saalschutz balanced 3phi2 sum",
              PfaffSaalschutz{});
  terminating("QD", 1, ParamDomain::kFreeABD, "q-Dougall 6phi5 sum", QDougall{});
  terminating("PP-A", 12, ParamDomain::kFreeACE,
              "terminating reciprocal relation, binary split of the 3phi2 denominators",
              ReciprocalA{});
  terminating("PP-B", 12, ParamDomain::kFreeACE,
              "terminating reciprocal relation with falling factorials", ReciprocalB{});
  terminating("PP-C", 12, ParamDomain::kFreeACE,
              "terminating reciprocal relation, split of the 3phi2 numerators", ReciprocalC{});

  {
    auto& r = series_rec("THM-A", 1, "[a,c;ae,c/e]_inf as a q^{k^2-k} series", thm_ab_lhs,
                         thm_a_term);
    r.domain = ParamDomain::kFreeACE;
    auto& s = series_rec("THM-B", 1, "[a,c;ae,c/e]_inf as a q^{(3k^2-k)/2} series",
                         thm_ab_lhs, thm_b_term);
    s.domain = ParamDomain::kFreeACE;
    auto& t = series_rec("THM-C", 1, "[a,qc;ae,qc/e]_inf as a q^{3k^2-k} series", thm_c_lhs,
                         thm_c_term);
    t.domain = ParamDomain::kFreeACE;
  }

  auto corollary = [&](std::string id, std::string desc, ApproxSide lhs, ApproxTerm term,
                       std::vector<Frac> lambdas) {
    auto& r = series_rec(std::move(id), 12, std::move(desc), std::move(lhs), std::move(term));
    r.domain = ParamDomain::kLambda;
    r.lambdas = std::move(lambdas);
  };
  const std::vector<Frac> all12 = lattice_lambdas(12);
  corollary("CC-A-", "1/(G(1+l)G(2-l)) from a=q^l, c=e=q^{1-l}",
            [](C& c, const ParamSet& ps) {
              return 1 / (c.gamma(1 + ps.lambda) * c.gamma(2 - ps.lambda));
            },
            cc_a_minus<A>, all12);
  corollary("CC-A+", "G(l)G(1-l) from a=c=q, e=q^l",
            [](C& c, const ParamSet& ps) { return c.gamma(ps.lambda) * c.gamma(1 - ps.lambda); },
            cc_a_plus<A>, all12);
  corollary("CC-B-", "1/(G(1+l)G(2-l)), cubic-rate companion",
            [](C& c, const ParamSet& ps) {
              return 1 / (c.gamma(1 + ps.lambda) * c.gamma(2 - ps.lambda));
            },
            cc_b_minus<A>, all12);
  corollary("CC-B+", "G(1+l)G(1-l), cubic-rate companion",
            [](C& c, const ParamSet& ps) {
              return c.gamma(1 + ps.lambda) * c.gamma(1 - ps.lambda);
            },
            cc_b_plus<A>, all12);
  corollary("CC-C-", "1/(G(l)G(1-l)) from the q^{3k^2} theorem",
            [](C& c, const ParamSet& ps) {
              return 1 / (c.gamma(ps.lambda) * c.gamma(1 - ps.lambda));
            },
            cc_c_minus<A>, all12);
  corollary("CC-C+", "G(1+l)G(2-l) from the q^{3k^2} theorem",
            [](C& c, const ParamSet& ps) {
              return c.gamma(1 + ps.lambda) * c.gamma(2 - ps.lambda);
            },
            cc_c_plus<A>, all12);

  const std::vector<Frac> half3{h, h, h};
  const std::vector<Frac> one3{1, 1, 1};

  companion(series_rec("W1", 2, "1/G^2(1/2), alternating q^{k^2/2} series", inv_gamma_sq, w1<A>),
            [] { auto t = target(2, "2/pi"); t.pi = -1; return t; }(),
            series(half3, one3, -1, {1, 4}), 2);

  companion(series_rec("A1", 2, "q-analogue of Ramanujan's 4/pi series", inv_gamma_sq, a1<A>),
            [] { auto t = target(4, "4/pi"); t.pi = -1; return t; }(),
            series(half3, one3, Frac(1, 4), {1, 6}), 4);
  companion(series_rec("A1-ALT", 1, "simpler q-analogue of 4/pi in base q^4",
                       [](C& c, const ParamSet&) { return 1 / sq(c.gamma(h, 4)); }, a1_alt<A>),
            [] { auto t = target(4, "4/pi"); t.pi = -1; return t; }(),
            series(half3, one3, Frac(1, 4), {1, 6}), 4);
  companion(series_rec("A2", 3, "1/(G(4/3)G(5/3)), lambda = 1/3",
                       [](C& c, const ParamSet&) { return 1 / (c.gamma(f43) * c.gamma(f53)); },
                       [](C& c, const ParamSet&, long k) { return a_minus_shape(c, k, t1); }),
            [] { auto t = target(Frac(9, 2), "9*sqrt(3)/(2*pi)"); t.sqrt3 = 1; t.pi = -1; return t; }(),
            series({t1, t1, t2, t2}, {1, 1, 1, f32}, Frac(1, 4), {2, 18, 27}), 2);
  companion(series_rec("A3", 4, "1/(G(5/4)G(7/4)), lambda = 1/4",
                       [](C& c, const ParamSet&) {
                         return 1 / (c.gamma(Frac(5, 4)) * c.gamma(Frac(7, 4)));
                       },
                       [](C& c, const ParamSet&, long k) { return a_minus_shape(c, k, f1); }),
            [] { auto t = target(8, "8*sqrt(2)/pi"); t.sqrt2 = 1; t.pi = -1; return t; }(),
            series({f1, f1, f3, f3}, {1, 1, 1, f32}, Frac(1, 4), {3, 32, 48}), 3);
  companion(series_rec("A4", 6, "1/(G(7/6)G(11/6)), lambda = 1/6",
                       [](C& c, const ParamSet&) {
                         return 1 / (c.gamma(Frac(7, 6)) * c.gamma(Frac(11, 6)));
                       },
                       [](C& c, const ParamSet&, long k) { return a_minus_shape(c, k, s1); }),
            [] { auto t = target(18, "18/pi"); t.pi = -1; return t; }(),
            series({s1, s1, s5, s5}, {1, 1, 1, f32}, Frac(1, 4), {5, 72, 108}), 5);
  companion(series_rec("A5", 2, "G^2(1/2) = pi companion",
                       [](C& c, const ParamSet&) { return sq(c.gamma(h)); }, a5<A>),
            [] { auto t = target(Frac(1, 3), "pi/3"); t.pi = 1; return t; }(),
            series({h, h}, {1, f32}, Frac(1, 4), {1}), Frac(1, 3));
  companion(series_rec("A6", 3, "G(1/3)G(2/3), lambda = 1/3",
                       [](C& c, const ParamSet&) { return c.gamma(t1) * c.gamma(t2); },
                       [](C& c, const ParamSet&, long k) { return a_plus_shape(c, k, t1); }),
            [] { auto t = target(4, "4*pi/sqrt(3)"); t.pi = 1; t.sqrt3 = -1; return t; }(),
            series({t1, t1, t2, t2}, {1, f32, f43, f53}, Frac(1, 4), {7, 27, 27}), 2);
  companion(series_rec("A7", 6, "G(1/6)G(5/6), lambda = 1/6",
                       [](C& c, const ParamSet&) { return c.gamma(s1) * c.gamma(s5); },
                       [](C& c, const ParamSet&, long k) { return a_plus_shape(c, k, s1); }),
            [] { auto t = target(10, "10*pi"); t.pi = 1; return t; }(),
            series({s1, s1, s5, s5}, {1, f32, Frac(7, 6), Frac(11, 6)}, Frac(1, 4),
                   {31, 108, 108}),
            5);
  companion(series_rec("A8", 3, "G^2(1/3)/G(2/3)",
                       [](C& c, const ParamSet&) { return sq(c.gamma(t1)) / c.gamma(t2); }, a8<A>),
            [] {
              auto t = target(Frac(1, 2), "sqrt(3)*G(1/3)^3/(2*pi)");
              t.sqrt3 = 1; t.gamma_1_3 = 3; t.pi = -1;
              return t;
            }(),
            series({t1, t2, t2}, {1, f32, f43}, Frac(1, 4), {5, 9}), 1);
  companion(series_rec("A9", 4, "G^2(3/4)/G^2(1/4)",
                       [](C& c, const ParamSet&) { return sq(c.gamma(f3) / c.gamma(f1)); }, a9<A>),
            [] {
              auto t = target(Frac(2, 3), "2*G(3/4)^2/(3*G(1/4)^2)");
              t.gamma_3_4 = 2; t.gamma_1_4 = -2;
              return t;
            }(),
            series(half3, {1, f3, f3}, Frac(1, 4), {0, 1}), Frac(2, 3));
  companion(series_rec("A10", 4, "G^2(1/4)/G^2(3/4)",
                       [](C& c, const ParamSet&) { return sq(c.gamma(f1) / c.gamma(f3)); }, a10<A>),
            [] {
              auto t = target(Frac(1, 8), "G(1/4)^2/(8*G(3/4)^2)");
              t.gamma_1_4 = 2; t.gamma_3_4 = -2;
              return t;
            }(),
            series(half3, {1, Frac(5, 4), Frac(5, 4)}, Frac(1, 4), {1, 3}), Frac(1, 8));

  const std::vector<Frac> b_top{h, f1, f3};
  companion(series_rec("B1", 2, "q-analogue of Ramanujan's 8/pi series", inv_gamma_sq, b1<A>),
            [] { auto t = target(8, "8/pi"); t.pi = -1; return t; }(),
            series(b_top, one3, Frac(-1, 4), {3, 20}), 8);
  companion(series_rec("B1-ALT", 4, "alternative q-analogue of 8/pi with (q^{1/4};q^{1/2})",
                       inv_gamma_sq, b1_alt<A>),
            [] { auto t = target(8, "8/pi"); t.pi = -1; return t; }(),
            series(b_top, one3, Frac(-1, 4), {3, 20}), 8);
  companion(series_rec("B2", 2, "G(1/2)G(3/2)",
                       [](C& c, const ParamSet&) { return c.gamma(h) * c.gamma(f32); }, b2<A>),
            [] { auto t = target(Frac(3, 2), "3*pi/2"); t.pi = 1; return t; }(),
            series(b_top, {f32, Frac(5, 4), Frac(7, 4)}, Frac(-1, 4), {5, 21, 20}), 3);
  companion(series_rec("B3", 6, "G(1/3)G(2/3), shifted-index series",
                       [](C& c, const ParamSet&) { return c.gamma(t1) * c.gamma(t2); }, b3<A>),
            [] { auto t = target(Frac(8, 3), "8*pi/(3*sqrt(3))"); t.pi = 1; t.sqrt3 = -1; return t; }(),
            series({t1, t2, s1}, {f32, f53, Frac(7, 6)}, Frac(-1, 4), {5, 23, 30}),
            Frac(4, 3));
  companion(series_rec("B4", 6, "G(1/3)G(5/3)",
                       [](C& c, const ParamSet&) { return c.gamma(t1) * c.gamma(f53); }, b4<A>),
            [] { auto t = target(Frac(20, 3), "20*pi/(3*sqrt(3))"); t.pi = 1; t.sqrt3 = -1; return t; }(),
            series({t1, t2, s5}, {f32, f43, Frac(11, 6)}, Frac(-1, 4), {13, 40, 30}), 5);
  companion(series_rec("B5", 6, "G(1/6)G(5/6)/(G(1/3)G(2/3))",
                       [](C& c, const ParamSet&) {
                         return c.gamma(s1) * c.gamma(s5) / (c.gamma(t1) * c.gamma(t2));
                       },
                       b5<A>),
            [] { auto t = target(5, "5*sqrt(3)"); t.sqrt3 = 1; return t; }(),
            series({t2, f1, f3, s5}, {1, f32, Frac(11, 12), Frac(17, 12)}, Frac(-1, 4),
                   {10, 51, 60}),
            5);

  companion(series_rec("C1", 2, "q-analogue of Ramanujan's 16/pi series", inv_gamma_sq, c1<A>),
            [] { auto t = target(16, "16/pi"); t.pi = -1; return t; }(),
            series(half3, one3, Frac(1, 64), {5, 42}), 16);
  auto inv_g14_g34 = [](C& c, const ParamSet&) { return 1 / (c.gamma(f1) * c.gamma(f3)); };
  auto guillera_2sqrt2 = [] { auto t = target(2, "2*sqrt(2)/pi"); t.sqrt2 = 1; t.pi = -1; return t; };
  companion(series_rec("C2", 4, "1/(G(1/4)G(3/4)), lambda = 1/4", inv_g14_g34, c2<A>),
            guillera_2sqrt2(), series(half3, one3, Frac(-1, 8), {1, 6}), 4);
  companion(series_rec("C2-SIMPLE", 4, "1/(G(1/4)G(3/4)) via (q^{1/4};q^{1/2})^3_k",
                       inv_g14_g34, c2_simple<A>),
            guillera_2sqrt2(), series(half3, one3, Frac(-1, 8), {1, 6}), 4);
  companion(series_rec("C3", 2, "G^2(3/2)",
                       [](C& c, const ParamSet&) { return sq(c.gamma(f32)); }, c3<A>),
            [] { auto t = target(Frac(9, 4), "9*pi/4"); t.pi = 1; return t; }(),
            series({1, h, h, h}, {Frac(5, 4), Frac(5, 4), Frac(7, 4), Frac(7, 4)}, Frac(1, 64),
                   {7, 42, 75, 42}),
            9);
  companion(series_rec("C4", 4, "G(1/2)/G^2(1/4)",
                       [](C& c, const ParamSet&) { return c.gamma(h) / sq(c.gamma(f1)); }, c4<A>),
            [] {
              auto t = target(128, "128*sqrt(pi)/G(1/4)^2");
              t.sqrt_pi = 1; t.gamma_1_4 = -2;
              return t;
            }(),
            series({f1, f1, f1, f3}, {1, 1, f32, f32}, Frac(1, 64), {17, 396, 1392, 1344}), 128);
  companion(series_rec("C5", 4, "G(3/2)/G^2(3/4)",
                       [](C& c, const ParamSet&) { return c.gamma(f32) / sq(c.gamma(f3)); }, c5<A>),
            [] {
              auto t = target(64, "64*sqrt(pi)/G(3/4)^2");
              t.sqrt_pi = 1; t.gamma_3_4 = -2;
              return t;
            }(),
            series({f1, f3, f3, f3}, {1, 1, f32, f32}, Frac(1, 64), {75, 320, 336}), 128);

  auto inv_g13_g23 = [](C& c, const ParamSet&) { return 1 / (c.gamma(t1) * c.gamma(t2)); };
  auto g43_g53 = [](C& c, const ParamSet&) { return c.gamma(f43) * c.gamma(f53); };
  companion(series_rec("D1", 3, "1/(G(1/3)G(2/3)), rate 4/27", inv_g13_g23, d1<A>),
            [] { auto t = target(Frac(81, 2), "81*sqrt(3)/(2*pi)"); t.sqrt3 = 1; t.pi = -1; return t; }(),
            series({t1, t2, s1, s5}, {1, 1, 1, f32}, Frac(4, 27), {20, 243, 414}), 81);
  companion(series_rec("D2", 3, "G(4/3)G(5/3), e = q^{1/3}", g43_g53, d2<A>),
            [] { auto t = target(8, "8*pi*sqrt(3)"); t.pi = 1; t.sqrt3 = 1; return t; }(),
            series({t2, t2, s1, s1}, {1, f43, f53, Frac(7, 6)}, Frac(4, 27), {43, 246, 414}),
            54);
  companion(series_rec("D3", 3, "G(4/3)G(5/3), e = q^{2/3}", g43_g53, d3<A>),
            [] { auto t = target(40, "40*pi*sqrt(3)"); t.pi = 1; t.sqrt3 = 1; return t; }(),
            series({t1, t1, s5, s5}, {1, f43, f53, Frac(11, 6)}, Frac(4, 27),
                   {214, 591, 414}),
            270);
  companion(series_rec("D4", 3, "1/(G(1/3)G(2/3)), rate 4/729", inv_g13_g23, d4<A>),
            [] { auto t = target(Frac(729, 4), "729*sqrt(3)/(4*pi)"); t.sqrt3 = 1; t.pi = -1; return t; }(),
            series({t1, t2, s1, s5}, {1, 1, 1, f32}, Frac(4, 729), {100, 1521, 2610}),
            Frac(729, 2));
  auto pi_target = [] { auto t = target(1, "pi"); t.pi = 1; return t; };
  companion(series_rec("D5", 2, "G^2(3/2), rate 2/27",
                       [](C& c, const ParamSet&) { return sq(c.gamma(Frac(3, 2))); }, d5<A>),
            pi_target(), series({1, h}, {f43, f53}, Frac(2, 27), {3, 5}), 4);
  companion(series_rec("D5-SIMPLE", 2, "G^2(1/2), series whose bisection is D5",
                       [](C& c, const ParamSet&) { return sq(c.gamma(h)); }, d5_simple<A>),
            pi_target(), series({1, h}, {f43, f53}, Frac(2, 27), {3, 5}), 1);

  auto quad_target = [] { auto t = target(32, "32*sqrt(2)/pi"); t.sqrt2 = 1; t.pi = -1; return t; };
  const ClassicalSeries quad_series = series({h, s1, s5}, one3, Frac(-27, 512), {15, 154});
  companion(series_rec("QUAD", 4, "1/(G(1/4)G(3/4)) from the quadruplicate split", inv_g14_g34,
                       quad<A>),
            quad_target(), quad_series, 64);
  companion(series_rec("QUAD-BISECT", 4, "bisection series of QUAD", inv_g14_g34,
                       [](C& c, const ParamSet& ps, long k) {
                         return quad(c, ps, 2 * k) + quad(c, ps, 2 * k + 1);
                       }),
            quad_target(), quad_series, 64);

  using E = ExactScalar;
  using EC = Lattice<E>;
  const std::vector<std::pair<std::string, ExactTerm>> exact_terms = {
      {"CC-A-", cc_a_minus<E>}, {"CC-A+", cc_a_plus<E>}, {"CC-B-", cc_b_minus<E>},
      {"CC-B+", cc_b_plus<E>}, {"CC-C-", cc_c_minus<E>}, {"CC-C+", cc_c_plus<E>},
      {"W1", w1<E>}, {"A1", a1<E>}, {"A1-ALT", a1_alt<E>},
      {"A2", [](EC& c, const ParamSet&, long k) { return a_minus_shape(c, k, t1); }},
      {"A3", [](EC& c, const ParamSet&, long k) { return a_minus_shape(c, k, f1); }},
      {"A4", [](EC& c, const ParamSet&, long k) { return a_minus_shape(c, k, s1); }},
      {"A5", a5<E>},
      {"A6", [](EC& c, const ParamSet&, long k) { return a_plus_shape(c, k, t1); }},
      {"A7", [](EC& c, const ParamSet&, long k) { return a_plus_shape(c, k, s1); }},
      {"A8", a8<E>}, {"A9", a9<E>}, {"A10", a10<E>},
      {"B1", b1<E>}, {"B1-ALT", b1_alt<E>}, {"B2", b2<E>}, {"B3", b3<E>}, {"B4", b4<E>},
      {"B5", b5<E>}, {"C1", c1<E>}, {"C2", c2<E>}, {"C2-SIMPLE", c2_simple<E>}, {"C3", c3<E>},
      {"C4", c4<E>}, {"C5", c5<E>}, {"D1", d1<E>}, {"D2", d2<E>}, {"D3", d3<E>}, {"D4", d4<E>},
      {"D5", d5<E>}, {"D5-SIMPLE", d5_simple<E>}, {"QUAD", quad<E>},
      {"QUAD-BISECT",
       [](EC& c, const ParamSet& ps, long k) { return quad(c, ps, 2 * k) + quad(c, ps, 2 * k + 1); }},
  };
  for (auto& r : out) {
    for (const auto& [id, fn] : exact_terms) {
      if (r.id == id) r.exact_term = fn;
    }
  }
  return out;
}

std::string param_str(const Param& p) {
  if (const Frac* e = std::get_if<Frac>(&p)) return "q^(" + e->str() + ")";
  return std::get<ExactScalar>(p).str();
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::kTerminating: return "terminating";
    case Kind::kNonterminating: return "nonterminating";
    case Kind::kLimitCompanion: return "limit-companion";
  }
  return "?";
}

std::string ParamSet::str() const {
  std::string s;
  auto add = [&s](const char* name, const std::optional<Param>& v) {
    if (!v) return;
    if (!s.empty()) s += ", ";
    s += std::string(name) + "=" + param_str(*v);
  };
  add("a", a);
  add("b", b);
  add("c", c);
  add("d", d);
  add("e", e);
  if (lambda != Frac(0)) s += (s.empty() ? "" : ", ") + std::string("lambda=") + lambda.str();
  return s;
}

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> records = build();
  return records;
}

const IdentityRecord& find_record(std::string_view id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw UsageError("unknown identity id '" + std::string(id) + "'");
}

std::string domain_summary(const IdentityRecord& r) {
  std::ostringstream os;
  switch (r.domain) {
    case ParamDomain::kFixed: os << "fixed"; break;
    case ParamDomain::kLambda: {
      os << "lambda in {";
      for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
        os << (i ? ", " : "") << r.lambdas[i];
      }
      os << "}";
      break;
    }
    case ParamDomain::kFreeABC: os << "free a, b, c"; break;
    case ParamDomain::kFreeABD: os << "free a, b, d"; break;
    case ParamDomain::kFreeACE: os << "free a, c, e"; break;
  }
  return os.str();
}

std::string export_catalog() {
  std::ostringstream os;
  for (const auto& r : catalog()) {
    os << "id: " << r.id << "\n";
    os << "kind: " << to_string(r.kind) << "\n";
    os << "lattice: " << r.lattice << "\n";
    os << "params: " << domain_summary(r);
    os << "\n";
    os << "summary: " << r.description << "\n";
    os << "classical_target: " << (r.target ? r.target->display : "none") << "\n";
    if (r.target) os << "limit_scale: " << r.limit_scale << "\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace qpi
