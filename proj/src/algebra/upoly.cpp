#include "slelab/algebra/upoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace slelab::algebra {

namespace {

// Positive divisors of |n|, n != 0. Trial division is fine for the small
// integers produced by level <= 8 computations.
std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m > mpz_class("1000000000000")) {
    throw std::domain_error("UPoly::rational_roots: coefficient too large for divisor enumeration");
  }
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) {
        large.push_back(m / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(Rational constant) : coeffs_{std::move(constant)} { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UPoly UPoly::from_param_poly(const ParamPoly& poly, Param p) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(poly.degree(p) + 1), Rational(0));
  const auto idx = static_cast<std::size_t>(p);
  for (const auto& [e, coeff] : poly.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != idx && e[i] != 0) {
        throw std::invalid_argument("UPoly::from_param_poly: polynomial depends on " +
                                    std::string(param_name(static_cast<Param>(i))));
      }
    }
    coeffs[e[idx]] += coeff;
  }
  return UPoly(std::move(coeffs));
}

ParamPoly UPoly::to_param_poly(Param p) const {
  ParamPoly result;
  const ParamPoly var = ParamPoly::variable(p);
  for (int i = degree(); i >= 0; --i) {
    result = result * var + ParamPoly(coeffs_[static_cast<std::size_t>(i)]);
  }
  return result;
}

Rational UPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) {
    return *this;
  }
  const Rational lead_inv = leading().inverse();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) {
    v *= lead_inv;
  }
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("UPoly::divmod: division by zero polynomial");
  }
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) {
    return {UPoly(), *this};
  }
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational lead_inv = divisor.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor.is_zero()) {
      continue;
    }
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::vector<Rational> UPoly::rational_roots() const {
  if (is_zero()) {
    throw std::domain_error("UPoly::rational_roots: zero polynomial has every root");
  }
  std::set<Rational> roots;
  UPoly p = *this;
  // Strip the root at zero.
  while (!p.is_zero() && p.coeffs_.front().is_zero()) {
    roots.insert(Rational(0));
    p.coeffs_.erase(p.coeffs_.begin());
  }
  if (p.degree() <= 0) {
    return {roots.begin(), roots.end()};
  }
  // Clear denominators to get an integer polynomial with the same roots.
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs_) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  ints.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) {
    ints.emplace_back(c.numerator() * (lcm_den / c.denominator()));
  }
  const auto num_candidates = divisors(ints.front());
  const auto den_candidates = divisors(ints.back());
  for (const auto& q : den_candidates) {
    for (const auto& n : num_candidates) {
      for (int sign : {1, -1}) {
        const Rational candidate(mpq_class(n * sign, q));
        if (p(candidate).is_zero()) {
          roots.insert(candidate);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::string UPoly::str(std::string_view var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) {
      continue;
    }
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
    } else if (c.sign() < 0) {
      os << '-';
    }
    first = false;
    const Rational mag = c.abs();
    if (i == 0 || mag != Rational(1)) {
      os << mag.str();
      if (i > 0) {
        os << '*';
      }
    }
    if (i > 0) {
      os << var;
      if (i > 1) {
        os << '^' << i;
      }
    }
  }
  return os.str();
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace slelab::algebra
