#include "vizsos/nhpoly.hpp"

#include <sstream>

namespace vizsos {

NHPoly::NHPoly(const RadicalScalar& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

NHPoly NHPoly::symbol() {
  NHPoly p;
  p.coeffs_ = {RadicalScalar(0), RadicalScalar(1)};
  return p;
}

NHPoly NHPoly::from_coefficients(std::vector<RadicalScalar> coeffs) {
  NHPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

NHPoly NHPoly::falling_product(long from, unsigned count) {
  NHPoly p(RadicalScalar(1));
  for (unsigned t = 0; t < count; ++t) {
    NHPoly factor = symbol() - NHPoly(RadicalScalar(Rational(from + t)));
    p = p * factor;
  }
  return p;
}

NHPoly NHPoly::binomial_poly(unsigned k) {
  return falling_product(0, k).scaled(
      RadicalScalar(Rational(1) / Rational(factorial(k))));
}

RadicalScalar NHPoly::coefficient(size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : RadicalScalar();
}

void NHPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NHPoly NHPoly::operator-() const {
  NHPoly p;
  p.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) p.coeffs_.push_back(-c);
  return p;
}

NHPoly NHPoly::operator+(const NHPoly& other) const {
  NHPoly p;
  p.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) p.coeffs_[i] += coeffs_[i];
    if (i < other.coeffs_.size()) p.coeffs_[i] += other.coeffs_[i];
  }
  p.trim();
  return p;
}

NHPoly NHPoly::operator-(const NHPoly& other) const {
  return *this + (-other);
}

NHPoly NHPoly::operator*(const NHPoly& other) const {
  if (is_zero() || other.is_zero()) return NHPoly();
  NHPoly p;
  p.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, RadicalScalar());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      p.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  p.trim();
  return p;
}

NHPoly NHPoly::scaled(const RadicalScalar& c) const {
  NHPoly p;
  p.coeffs_.reserve(coeffs_.size());
  for (const auto& k : coeffs_) p.coeffs_.push_back(k * c);
  p.trim();
  return p;
}

RadicalScalar NHPoly::evaluate(const Rational& at) const {
  return evaluate(RadicalScalar(at));
}

RadicalScalar NHPoly::evaluate(const RadicalScalar& at) const {
  RadicalScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

std::string NHPoly::to_string(const std::string& symbol) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[i].to_string() << ")";
    if (i >= 1) out << "*" << symbol;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

NHPoly interpolate(const std::vector<Rational>& nodes,
                   const std::vector<RadicalScalar>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw ValidationError("interpolate: node/value size mismatch");
  NHPoly result;
  for (size_t i = 0; i < nodes.size(); ++i) {
    NHPoly basis(RadicalScalar(1));
    Rational denom = 1;
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      basis = basis * (NHPoly::symbol() - NHPoly(RadicalScalar(nodes[j])));
      denom *= nodes[i] - nodes[j];
    }
    result += basis.scaled(values[i] * RadicalScalar(Rational(1) / denom));
  }
  return result;
}

}  // namespace vizsos
