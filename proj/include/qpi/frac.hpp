#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "qpi/errors.hpp"

namespace qpi {

// Small machine-word rational used for exponents on the q-lattice
// (1/2, 3k^2/4, 19k/6 + 1, ...).  Always normalized, den > 0.
class Frac {
 public:
  constexpr Frac() = default;
  constexpr Frac(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of exponent algebra
  constexpr Frac(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("Frac: zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  // Numerator after scaling by `lattice`; throws if the exponent is not a
  // multiple of 1/lattice.
  constexpr std::int64_t on_lattice(std::int64_t lattice) const {
    if (lattice % den_ != 0) {
      throw DomainError("exponent " + str() + " is not on lattice 1/" +
                        std::to_string(lattice));
    }
    return num_ * (lattice / den_);
  }

  // floor(num/den)
  constexpr std::int64_t floor() const {
    std::int64_t f = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --f;
    return f;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  constexpr Frac operator-() const { return Frac(-num_, den_); }
  friend constexpr Frac operator+(Frac a, Frac b) {
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Frac operator-(Frac a, Frac b) { return a + (-b); }
  friend constexpr Frac operator*(Frac a, Frac b) {
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Frac operator/(Frac a, Frac b) {
    if (b.num_ == 0) throw DomainError("Frac: division by zero");
    return Frac(a.num_ * b.den_, a.den_ * b.num_);
  }
  constexpr Frac& operator+=(Frac b) { return *this = *this + b; }
  constexpr Frac& operator-=(Frac b) { return *this = *this - b; }
  constexpr Frac& operator*=(Frac b) { return *this = *this * b; }

  friend constexpr bool operator==(Frac a, Frac b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Frac a, Frac b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, Frac f) {
    return os << f.str();
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qpi
