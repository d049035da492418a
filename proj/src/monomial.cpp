#include "evoiso/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace evoiso {

std::shared_ptr<const VarSet> VarSet::of(std::vector<std::string> names) {
  auto vs = std::make_shared<VarSet>();
  vs->names_ = std::move(names);
  for (std::uint32_t i = 0; i < vs->names_.size(); ++i) {
    if (!vs->index_.emplace(vs->names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + vs->names_[i]);
  }
  return vs;
}

std::optional<std::uint32_t> VarSet::index(const std::string& n) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Monomial Monomial::var(std::uint32_t v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.emplace_back(v, e);
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t v) const noexcept {
  for (const auto& [var, e] : f_)
    if (var == v) return e;
  return 0;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [var, e] : f_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
      r.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
      r.f_.push_back(o.f_[j++]);
    } else {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  std::size_t j = 0;
  for (const auto& [var, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < var) ++j;
    if (j == o.f_.size() || o.f_[j].first != var || o.f_[j].second < e) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::quotient_by(const Monomial& d) const {
  if (!d.divides(*this)) return std::nullopt;
  Monomial r;
  std::size_t j = 0;
  for (const auto& [var, e] : f_) {
    std::uint32_t sub = 0;
    while (j < d.f_.size() && d.f_[j].first < var) ++j;
    if (j < d.f_.size() && d.f_[j].first == var) sub = d.f_[j].second;
    if (e > sub) r.f_.emplace_back(var, e - sub);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      r.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      r.f_.push_back(b.f_[j++]);
    } else {
      r.f_.emplace_back(a.f_[i].first, std::max(a.f_[i].second, b.f_[j].second));
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) noexcept {
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first == b.f_[j].first) return false;
    if (a.f_[i].first < b.f_[j].first)
      ++i;
    else
      ++j;
  }
  return true;
}

std::string Monomial::str(const VarSet& vars) const {
  if (is_one()) return "1";
  std::string s;
  for (const auto& [var, e] : f_) {
    if (!s.empty()) s += "*";
    s += vars.name(var);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

MonomialOrder::MonomialOrder(Kind k, std::vector<std::uint32_t> significance)
    : kind_(k), sig_(std::move(significance)) {
  std::vector<bool> seen(sig_.size(), false);
  for (std::uint32_t v : sig_) {
    if (v >= sig_.size() || seen[v])
      throw std::invalid_argument("monomial order significance list is not a permutation");
    seen[v] = true;
  }
}

MonomialOrder MonomialOrder::lex(const VarSetPtr& vars) {
  std::vector<std::uint32_t> sig(vars->size());
  for (std::uint32_t i = 0; i < sig.size(); ++i) sig[i] = i;
  return MonomialOrder(Kind::Lex, std::move(sig));
}

MonomialOrder MonomialOrder::degrevlex(const VarSetPtr& vars) {
  std::vector<std::uint32_t> sig(vars->size());
  for (std::uint32_t i = 0; i < sig.size(); ++i) sig[i] = i;
  return MonomialOrder(Kind::DegRevLex, std::move(sig));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  if (kind_ == Kind::Lex) {
    for (std::uint32_t v : sig_) {
      const std::uint32_t ea = a.exponent(v), eb = b.exponent(v);
      if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
  }
  const std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  // graded reverse lex: scan from the least significant variable; the
  // monomial with the smaller exponent at the first difference is larger.
  for (auto it = sig_.rbegin(); it != sig_.rend(); ++it) {
    const std::uint32_t ea = a.exponent(*it), eb = b.exponent(*it);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::str() const {
  return kind_ == Kind::Lex ? "lex" : "degrevlex";
}

}  // namespace evoiso
