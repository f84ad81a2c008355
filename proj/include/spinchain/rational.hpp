#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spinchain {

/// Exact rational number p/q on 64-bit integers, stored reduced with q >= 1.
///
/// Chain parameters alpha and beta are kept exact so that the revival
/// predictors can reason about the parities of p and q; conversion to
/// floating point happens only when matrices or times are built.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1) : num_(num), den_(den) { normalize(); }

  /// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed
  /// input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] long long num() const { return num_; }
  [[nodiscard]] long long den() const { return den_; }

  [[nodiscard]] double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] Rational abs() const { return {num_ < 0 ? -num_ : num_, den_}; }

  /// "p" when q == 1, otherwise "p/q".
  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace spinchain
