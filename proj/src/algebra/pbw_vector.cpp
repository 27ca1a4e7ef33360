#include "slelab/algebra/pbw_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace slelab::algebra {

VermaParams VermaParams::symbolic() {
  return {ParamPoly::variable(Param::c), ParamPoly::variable(Param::delta)};
}

VermaParams VermaParams::numeric(const Rational& c, const Rational& delta) {
  return {ParamPoly(c), ParamPoly(delta)};
}

PBWVector::PBWVector(int level, VermaParams params) : level_(level), params_(std::move(params)) {
  if (level < 0) {
    throw std::invalid_argument("PBWVector: negative level");
  }
}

PBWVector::PBWVector(int level, VermaParams params,
                     std::initializer_list<std::pair<Partition, ParamPoly>> terms)
    : PBWVector(level, std::move(params)) {
  for (const auto& [p, coeff] : terms) {
    add_term(p, coeff);
  }
}

PBWVector PBWVector::highest_weight(VermaParams params) {
  PBWVector v(0, std::move(params));
  v.add_term(Partition{}, ParamPoly(1L));
  return v;
}

ParamPoly PBWVector::coefficient(const Partition& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void PBWVector::add_term(const Partition& p, const ParamPoly& coeff) {
  if (p.level() != level_) {
    throw std::invalid_argument("PBWVector: partition " + p.str() + " is not at level " +
                                std::to_string(level_));
  }
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

PBWVector PBWVector::substitute(Param p, const Rational& value) const {
  PBWVector out(level_, params_);
  for (const auto& [part, coeff] : terms_) {
    out.add_term(part, coeff.substitute(p, value));
  }
  return out;
}

void PBWVector::check_compatible(const PBWVector& other) const {
  if (level_ != other.level_) {
    throw std::invalid_argument("PBWVector: level mismatch");
  }
  if (!(params_ == other.params_)) {
    throw std::invalid_argument("PBWVector: module parameter mismatch");
  }
}

PBWVector& PBWVector::operator+=(const PBWVector& other) {
  check_compatible(other);
  for (const auto& [p, coeff] : other.terms_) {
    add_term(p, coeff);
  }
  return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& other) {
  check_compatible(other);
  for (const auto& [p, coeff] : other.terms_) {
    add_term(p, -coeff);
  }
  return *this;
}

PBWVector& PBWVector::operator*=(const ParamPoly& scalar) {
  TermMap scaled;
  for (const auto& [p, coeff] : terms_) {
    ParamPoly product = coeff * scalar;
    if (!product.is_zero()) {
      scaled.emplace(p, std::move(product));
    }
  }
  terms_ = std::move(scaled);
  return *this;
}

std::string PBWVector::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, coeff] : terms_) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << '(' << coeff.str() << ')';
    for (int part : p.parts()) {
      os << " L_{-" << part << '}';
    }
    os << "|h>";
  }
  return os.str();
}

}  // namespace slelab::algebra
