#include "slelab/algebra/param_poly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slelab::algebra {

namespace {

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ParamPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) {
      throw error("empty polynomial");
    }
    ParamPoly result;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) {
        break;
      }
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      ParamPoly term = parse_term();
      result += sign < 0 ? -term : term;
    }
    return result;
  }

 private:
  ParamPoly parse_term() {
    ParamPoly term(1L);
    bool any = false;
    while (true) {
      skip_ws();
      term *= parse_factor();
      any = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) {
      throw error("empty term");
    }
    return term;
  }

  ParamPoly parse_factor() {
    if (pos_ >= text_.size()) {
      throw error("unexpected end");
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '/')) {
        ++pos_;
      }
      return ParamPoly(Rational::parse(text_.substr(start, pos_ - start)));
    }
    for (Param p : kAllParams) {
      const auto name = param_name(p);
      if (text_.substr(pos_, name.size()) == name) {
        const std::size_t after = pos_ + name.size();
        if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after])) != 0) {
          continue;
        }
        pos_ = after;
        int power = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          const std::size_t start = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
          }
          if (start == pos_) {
            throw error("missing exponent");
          }
          power = std::stoi(std::string(text_.substr(start, pos_ - start)));
        }
        return ParamPoly::variable(p).pow(power);
      }
    }
    throw error("unexpected character");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("ParamPoly::parse: " + what + " at offset " + std::to_string(pos_) +
                                 " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view param_name(Param p) {
  switch (p) {
    case Param::kappa:
      return "kappa";
    case Param::c:
      return "c";
    case Param::delta:
      return "delta";
  }
  return "?";
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int ta = total(a);
  const int tb = total(b);
  if (ta != tb) {
    return ta < tb;
  }
  return a > b;
}

ParamPoly::ParamPoly(Rational constant) {
  if (!constant.is_zero()) {
    terms_.emplace(Exponents{0, 0, 0}, std::move(constant));
  }
}

ParamPoly ParamPoly::variable(Param p) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(p)] = 1;
  return monomial(e, Rational(1));
}

ParamPoly ParamPoly::monomial(const Exponents& exponents, const Rational& coeff) {
  ParamPoly result;
  result.add_term(exponents, coeff);
  return result;
}

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

std::optional<Rational> ParamPoly::as_rational() const {
  if (!is_constant()) {
    return std::nullopt;
  }
  return constant_term();
}

Rational ParamPoly::constant_term() const {
  const auto it = terms_.find(Exponents{0, 0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree(Param p) const {
  int d = 0;
  for (const auto& [e, coeff] : terms_) {
    d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(p)]));
  }
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, coeff] : terms_) {
    d = std::max(d, total(e));
  }
  return d;
}

ParamPoly ParamPoly::coefficient(Param p, int power) const {
  ParamPoly result;
  const auto idx = static_cast<std::size_t>(p);
  for (const auto& [e, coeff] : terms_) {
    if (e[idx] == power) {
      Exponents stripped = e;
      stripped[idx] = 0;
      result.add_term(stripped, coeff);
    }
  }
  return result;
}

ParamPoly ParamPoly::substitute(Param p, const Rational& value) const {
  ParamPoly result;
  const auto idx = static_cast<std::size_t>(p);
  for (const auto& [e, coeff] : terms_) {
    Exponents stripped = e;
    stripped[idx] = 0;
    result.add_term(stripped, coeff * value.pow(e[idx]));
  }
  return result;
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& value) const {
  ParamPoly result;
  const auto idx = static_cast<std::size_t>(p);
  for (const auto& [e, coeff] : terms_) {
    Exponents stripped = e;
    stripped[idx] = 0;
    result += monomial(stripped, coeff) * value.pow(e[idx]);
  }
  return result;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : terms_) {
    const bool constant = total(e) == 0;
    Rational magnitude = coeff.abs();
    if (first) {
      if (coeff.sign() < 0) {
        os << '-';
      }
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || magnitude != Rational(1)) {
      os << magnitude.str();
      need_star = true;
    }
    for (Param p : kAllParams) {
      const int power = e[static_cast<std::size_t>(p)];
      if (power == 0) {
        continue;
      }
      if (need_star) {
        os << '*';
      }
      os << param_name(p);
      if (power > 1) {
        os << '^' << power;
      }
      need_star = true;
    }
  }
  return os.str();
}

void ParamPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [e, coeff] : other.terms_) {
    add_term(e, coeff);
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [e, coeff] : other.terms_) {
    add_term(e, -coeff);
  }
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  ParamPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      }
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly result;
  for (const auto& [e, coeff] : terms_) {
    result.terms_.emplace(e, -coeff);
  }
  return result;
}

ParamPoly ParamPoly::pow(int exponent) const {
  if (exponent < 0) {
    throw std::domain_error("ParamPoly::pow: negative exponent");
  }
  ParamPoly result(1L);
  for (int i = 0; i < exponent; ++i) {
    result *= *this;
  }
  return result;
}

}  // namespace slelab::algebra
