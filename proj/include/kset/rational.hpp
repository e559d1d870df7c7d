#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace kset {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with a positive denominator, always kept in lowest terms.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(BigInt numerator, BigInt denominator = 1);  // NOLINT(google-explicit-constructor)
  ExactRational(std::int64_t value) : ExactRational(BigInt(value)) {}  // NOLINT

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  ExactRational operator+(const ExactRational& rhs) const;
  ExactRational operator-(const ExactRational& rhs) const;
  ExactRational operator*(const ExactRational& rhs) const;
  ExactRational operator/(const ExactRational& rhs) const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  double to_double() const;
  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

/// base^exponent by repeated squaring.
ExactRational pow(const ExactRational& base, unsigned exponent);

}  // namespace kset
