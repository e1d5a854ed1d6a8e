#include "vizsos/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vizsos {

Monomial Monomial::from_pairs(
    std::vector<std::pair<uint32_t, uint32_t>> exps) {
  std::sort(exps.begin(), exps.end());
  Monomial m;
  for (const auto& [var, exp] : exps) {
    if (exp == 0) continue;
    if (!m.exps_.empty() && m.exps_.back().first == var) {
      m.exps_.back().second += exp;
      m.degree_ += exp;
      continue;
    }
    m.exps_.emplace_back(var, exp);
    m.degree_ += exp;
    m.mask_ |= bit(var);
  }
  return m;
}

uint32_t Monomial::exponent(uint32_t var) const {
  for (const auto& [v, e] : exps_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exps_.reserve(a.exps_.size() + b.exps_.size());
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
      m.exps_.push_back(*ia++);
    } else if (ia == a.exps_.end() || ib->first < ia->first) {
      m.exps_.push_back(*ib++);
    } else {
      m.exps_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  m.mask_ = a.mask_ | b.mask_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0) return false;
  if (degree_ > other.degree_) return false;
  auto io = other.exps_.begin();
  for (const auto& [var, exp] : exps_) {
    while (io != other.exps_.end() && io->first < var) ++io;
    if (io == other.exps_.end() || io->first != var || io->second < exp)
      return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& other) const {
  Monomial m;
  auto io = other.exps_.begin();
  for (const auto& [var, exp] : exps_) {
    uint32_t sub = 0;
    while (io != other.exps_.end() && io->first < var) ++io;
    if (io != other.exps_.end() && io->first == var) sub = io->second;
    if (sub > exp) throw StructuralError("monomial division is not exact");
    if (exp > sub) {
      m.exps_.emplace_back(var, exp - sub);
      m.degree_ += exp - sub;
      m.mask_ |= bit(var);
    }
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    uint32_t var, exp;
    if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
      var = ia->first;
      exp = ia->second;
      ++ia;
    } else if (ia == a.exps_.end() || ib->first < ia->first) {
      var = ib->first;
      exp = ib->second;
      ++ib;
    } else {
      var = ia->first;
      exp = std::max(ia->second, ib->second);
      ++ia;
      ++ib;
    }
    m.exps_.emplace_back(var, exp);
    m.degree_ += exp;
    m.mask_ |= bit(var);
  }
  return m;
}

bool Monomial::coprime_with(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  auto ia = exps_.begin(), ib = other.exps_.begin();
  while (ia != exps_.end() && ib != other.exps_.end()) {
    if (ia->first < ib->first)
      ++ia;
    else if (ib->first < ia->first)
      ++ib;
    else
      return false;
  }
  return true;
}

Monomial Monomial::boolean_expanded() const {
  Monomial m;
  m.exps_.reserve(exps_.size());
  for (const auto& [var, exp] : exps_) m.exps_.emplace_back(var, 1);
  m.degree_ = static_cast<uint32_t>(m.exps_.size());
  m.mask_ = mask_;
  return m;
}

bool Monomial::is_squarefree() const {
  for (const auto& [var, exp] : exps_)
    if (exp > 1) return false;
  return true;
}

MonomialOrder::MonomialOrder(Kind kind, uint32_t num_vars,
                             std::vector<uint32_t> precedence)
    : kind_(kind), num_vars_(num_vars) {
  if (precedence.empty()) return;
  if (precedence.size() != num_vars)
    throw StructuralError("precedence permutation size mismatch");
  rank_of_.assign(num_vars, 0);
  std::vector<uint8_t> seen(num_vars, 0);
  for (uint32_t rank = 0; rank < num_vars; ++rank) {
    uint32_t var = precedence[rank];
    if (var >= num_vars || seen[var])
      throw StructuralError("precedence is not a permutation");
    seen[var] = 1;
    rank_of_[var] = rank;
  }
  // Identity permutations collapse to the fast path.
  bool identity = true;
  for (uint32_t v = 0; v < num_vars; ++v)
    if (rank_of_[v] != v) identity = false;
  if (identity) rank_of_.clear();
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
  return kind_ == other.kind_ && num_vars_ == other.num_vars_ &&
         rank_of_ == other.rank_of_;
}

namespace {

// Exponents as (rank, exp) sorted ascending by rank.
void rank_exps(const Monomial& m, const std::vector<uint32_t>& rank_of,
               std::vector<std::pair<uint32_t, uint32_t>>& out) {
  out.clear();
  for (const auto& [var, exp] : m.exponents())
    out.emplace_back(rank_of.empty() ? var : rank_of[var], exp);
  if (!rank_of.empty()) std::sort(out.begin(), out.end());
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  if (kind_ == Kind::degrevlex && a.degree() != b.degree())
    return a.degree() < b.degree() ? -1 : 1;

  thread_local std::vector<std::pair<uint32_t, uint32_t>> ra, rb;
  rank_exps(a, rank_of_, ra);
  rank_exps(b, rank_of_, rb);

  if (kind_ == Kind::lex) {
    // Scan strongest rank first; larger exponent wins.
    auto ia = ra.begin(), ib = rb.begin();
    while (ia != ra.end() || ib != rb.end()) {
      if (ib == rb.end()) return 1;
      if (ia == ra.end()) return -1;
      if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
      if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
      ++ia;
      ++ib;
    }
    return 0;
  }

  // degrevlex tie-break: scan weakest rank first; the monomial with the
  // smaller exponent at the first difference is the larger one.
  auto ia = ra.rbegin(), ib = rb.rbegin();
  while (ia != ra.rend() || ib != rb.rend()) {
    if (ib == rb.rend()) return -1;  // a has a weak variable b lacks
    if (ia == ra.rend()) return 1;
    if (ia->first != ib->first) return ia->first > ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  return 0;
}

Polynomial Polynomial::constant(OrderPtr order, const RadicalScalar& c) {
  Polynomial p(std::move(order));
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(OrderPtr order, uint32_t var) {
  if (var >= order->num_vars())
    throw StructuralError("variable id outside the universe");
  Polynomial p(std::move(order));
  p.terms_.push_back({Monomial::variable(var), RadicalScalar(1)});
  return p;
}

Polynomial Polynomial::from_terms(OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(order));
  p.sort_and_combine(std::move(terms));
  return p;
}

void Polynomial::sort_and_combine(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [this](const Term& a, const Term& b) {
    return order_->greater(a.monomial, b.monomial);
  });
  terms_.clear();
  terms_.reserve(raw.size());
  for (auto& t : raw) {
    if (t.coeff.is_zero()) continue;
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

uint32_t Polynomial::degree() const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  return terms_.front().monomial;
}

const RadicalScalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
  return terms_.front().coeff;
}

void Polynomial::check_same_universe(const Polynomial& other) const {
  if (order_ == other.order_) return;
  if (!(*order_ == *other.order_))
    throw StructuralError("polynomials from different universes/orders");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, -t.coeff});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_universe(other);
  Polynomial p(order_);
  p.terms_.reserve(terms_.size() + other.terms_.size());
  auto ia = terms_.begin(), ib = other.terms_.begin();
  while (ia != terms_.end() || ib != other.terms_.end()) {
    int cmp;
    if (ia == terms_.end())
      cmp = -1;
    else if (ib == other.terms_.end())
      cmp = 1;
    else
      cmp = order_->compare(ia->monomial, ib->monomial);
    if (cmp > 0) {
      p.terms_.push_back(*ia++);
    } else if (cmp < 0) {
      p.terms_.push_back(*ib++);
    } else {
      RadicalScalar c = ia->coeff + ib->coeff;
      if (!c.is_zero()) p.terms_.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_universe(other);
  std::vector<Term> raw;
  raw.reserve(terms_.size() * other.terms_.size());
  for (const auto& ta : terms_)
    for (const auto& tb : other.terms_)
      raw.push_back({ta.monomial * tb.monomial, ta.coeff * tb.coeff});
  Polynomial p(order_);
  p.sort_and_combine(std::move(raw));
  return p;
}

Polynomial Polynomial::scaled(const RadicalScalar& c) const {
  Polynomial p(order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    RadicalScalar v = t.coeff * c;
    if (!v.is_zero()) p.terms_.push_back({t.monomial, std::move(v)});
  }
  // Radical products can cancel term-wise but never reorder monomials.
  return p;
}

Polynomial Polynomial::add_scaled(const Polynomial& g, const RadicalScalar& c,
                                  const Monomial& m) const {
  check_same_universe(g);
  Polynomial p(order_);
  p.terms_.reserve(terms_.size() + g.terms_.size());
  auto ia = terms_.begin();
  auto ib = g.terms_.begin();
  Monomial mb;
  bool mb_valid = false;
  while (ia != terms_.end() || ib != g.terms_.end()) {
    if (ib != g.terms_.end() && !mb_valid) {
      mb = ib->monomial * m;
      mb_valid = true;
    }
    int cmp;
    if (ia == terms_.end())
      cmp = -1;
    else if (ib == g.terms_.end())
      cmp = 1;
    else
      cmp = order_->compare(ia->monomial, mb);
    if (cmp > 0) {
      p.terms_.push_back(*ia++);
    } else if (cmp < 0) {
      RadicalScalar v = ib->coeff * c;
      if (!v.is_zero()) p.terms_.push_back({mb, std::move(v)});
      ++ib;
      mb_valid = false;
    } else {
      RadicalScalar v = ia->coeff + ib->coeff * c;
      if (!v.is_zero()) p.terms_.push_back({ia->monomial, std::move(v)});
      ++ia;
      ++ib;
      mb_valid = false;
    }
  }
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::boolean_expanded() const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_)
    raw.push_back({t.monomial.boolean_expanded(), t.coeff});
  Polynomial p(order_);
  p.sort_and_combine(std::move(raw));
  return p;
}

RadicalScalar Polynomial::evaluate01(const std::vector<uint8_t>& point) const {
  RadicalScalar sum;
  for (const auto& t : terms_) {
    bool on = true;
    for (const auto& [var, exp] : t.monomial.exponents()) {
      if (var >= point.size() || !point[var]) {
        on = false;
        break;
      }
    }
    if (on) sum += t.coeff;
  }
  return sum;
}

RadicalScalar Polynomial::evaluate(
    const std::vector<RadicalScalar>& point) const {
  RadicalScalar sum;
  for (const auto& t : terms_) {
    RadicalScalar v = t.coeff;
    for (const auto& [var, exp] : t.monomial.exponents()) {
      if (var >= point.size())
        throw StructuralError("evaluation point too short");
      for (uint32_t i = 0; i < exp; ++i) v *= point[var];
    }
    sum += v;
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial)) return false;
    if (terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string(
    const std::function<std::string(uint32_t)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << t.coeff.to_string() << ")";
    for (const auto& [var, exp] : t.monomial.exponents()) {
      out << "*" << var_name(var);
      if (exp > 1) out << "^" << exp;
    }
  }
  return out.str();
}

Polynomial boolean_expand(const Polynomial& p) { return p.boolean_expanded(); }

}  // namespace vizsos
