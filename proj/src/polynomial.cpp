#include "evoiso/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace evoiso {

Polynomial Polynomial::constant(const Field& f, VarSetPtr vars, const Scalar& c) {
  Polynomial p(f, std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Polynomial Polynomial::variable(const Field& f, VarSetPtr vars, std::uint32_t v) {
  if (v >= vars->size()) throw std::out_of_range("variable index out of range");
  Polynomial p(f, std::move(vars));
  p.terms_.push_back({Monomial::var(v), Scalar::one(f)});
  return p;
}

Polynomial Polynomial::from_terms(const Field& f, VarSetPtr vars, std::vector<Term> terms) {
  Polynomial p(f, std::move(vars));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (t.coeff.field() != field_) throw field_error("term coefficient from wrong field");
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

static void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw field_error("mixed-field polynomials");
  if (!(*a.vars() == *b.vars()))
    throw std::invalid_argument("polynomials over different variable sets");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial::from_terms(a.field_, a.vars_, std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(field_)); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.field() != field_) throw field_error("scaling coefficient from wrong field");
  std::vector<Term> terms;
  if (!c.is_zero()) {
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({t.mono, t.coeff * c});
  }
  return from_terms(field_, vars_, std::move(terms));
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.mono * m, t.coeff});
  return from_terms(field_, vars_, std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) terms.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return Polynomial::from_terms(a.field_, a.vars_, std::move(terms));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.less(best->mono, t.mono)) best = &t;
  return *best;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != vars_->size())
    throw std::invalid_argument("evaluation point has wrong arity");
  Scalar acc = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (const auto& [var, e] : t.mono.factors())
      for (std::uint32_t k = 0; k < e; ++k) v *= point[var];
    acc += v;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || !(*a.vars_ == *b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::str(const MonomialOrder* order) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  if (order) {
    std::sort(ts.begin(), ts.end(),
              [&](const Term* x, const Term* y) { return order->less(y->mono, x->mono); });
  } else {
    std::reverse(ts.begin(), ts.end());
  }
  std::string s;
  for (const Term* t : ts) {
    std::string c = t->coeff.str();
    bool neg = false;
    if (!c.empty() && c[0] == '-') {
      neg = true;
      c = c.substr(1);
    }
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (t->mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += t->mono.str(*vars_);
    }
  }
  return s;
}

}  // namespace evoiso
