#include "slelab/algebra/rational.hpp"

#include <stdexcept>

namespace slelab::algebra {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("Rational::parse: empty string");
  }
  std::string s(text);
  if (s.front() == '+') {
    s.erase(0, 1);
  }
  const auto slash = s.find('/');
  auto valid_integer = [](std::string_view digits, bool allow_sign) {
    if (digits.empty()) {
      return false;
    }
    std::size_t i = 0;
    if (allow_sign && digits[0] == '-') {
      i = 1;
    }
    if (i == digits.size()) {
      return false;
    }
    for (; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') {
        return false;
      }
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_integer(s, true)) {
      throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    }
    return Rational(mpq_class(mpz_class(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
  }
  const mpz_class d(den);
  if (d == 0) {
    throw std::domain_error("Rational::parse: zero denominator");
  }
  return Rational(mpq_class(mpz_class(num), d));
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("Rational: inverse of zero");
  }
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  mpq_class result(1);
  for (int i = 0; i < exponent; ++i) {
    result *= value_;
  }
  return Rational(std::move(result));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

}  // namespace slelab::algebra
