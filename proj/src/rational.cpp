#include "kset/rational.hpp"

#include <utility>

#include "kset/errors.hpp"

namespace kset {

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw InvalidArgument("rational denominator must be non-zero");
  normalize();
}

void ExactRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

ExactRational ExactRational::operator+(const ExactRational& rhs) const {
  return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

ExactRational ExactRational::operator-(const ExactRational& rhs) const {
  return {num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_};
}

ExactRational ExactRational::operator*(const ExactRational& rhs) const {
  return {num_ * rhs.num_, den_ * rhs.den_};
}

ExactRational ExactRational::operator/(const ExactRational& rhs) const {
  if (rhs.num_ == 0) throw InvalidArgument("division by zero rational");
  return {num_ * rhs.den_, den_ * rhs.num_};
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExactRational::to_double() const {
  using boost::multiprecision::cpp_rational;
  return cpp_rational(num_, den_).convert_to<double>();
}

std::string ExactRational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExactRational pow(const ExactRational& base, unsigned exponent) {
  ExactRational result{1};
  ExactRational square = base;
  while (exponent != 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1u;
    if (exponent != 0) square = square * square;
  }
  return result;
}

}  // namespace kset
