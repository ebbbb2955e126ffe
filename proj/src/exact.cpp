#include "qpi/exact.hpp"

#include <cctype>

namespace qpi {

ExactScalar::ExactScalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("ExactScalar: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

ExactScalar ExactScalar::parse(const std::string& text) {
  if (text.empty()) throw DomainError("cannot parse empty number");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0) {
      throw DomainError("cannot parse rational '" + text + "'");
    }
    return ExactScalar(num, den);
  }
  // Decimal: power-of-ten denominator, no rounding.
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-' && i == 0) {
      digits.push_back(c);
    } else if (c == '+' && i == 0) {
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw DomainError("cannot parse decimal '" + text + "'");
    }
  }
  if (digits.empty() || digits == "-") {
    throw DomainError("cannot parse decimal '" + text + "'");
  }
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  return ExactScalar(num, den);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw PoleError("exact division by zero");
  v_ /= o.v_;
  return *this;
}

ExactScalar exact_pow(const ExactScalar& x, long n) {
  if (n == 0) return ExactScalar(1);
  if (x.is_zero()) {
    if (n < 0) throw DomainError("exact_pow: zero base with negative exponent");
    return ExactScalar(0);
  }
  const unsigned long e = n < 0 ? static_cast<unsigned long>(-n)
                                : static_cast<unsigned long>(n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), e);
  // Already coprime; avoid a gcd pass.
  if (n < 0) std::swap(num, den);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_class r;
  mpz_swap(mpq_numref(r.get_mpq_t()), num.get_mpz_t());
  mpz_swap(mpq_denref(r.get_mpq_t()), den.get_mpz_t());
  return ExactScalar::adopt_canonical(std::move(r));
}

ExactScalar abs(const ExactScalar& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qpi
