#pragma once

#include <span>
#include <vector>

#include "evoiso/monomial.hpp"
#include "evoiso/scalar.hpp"

namespace evoiso {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial over one field and one variable universe.
/// Terms are kept in a canonical structural order with no zero coefficients,
/// so equality is plain value comparison.
class Polynomial {
 public:
  Polynomial(const Field& f, VarSetPtr vars) : field_(f), vars_(std::move(vars)) {}

  static Polynomial zero(const Field& f, VarSetPtr vars) { return {f, std::move(vars)}; }
  static Polynomial constant(const Field& f, VarSetPtr vars, const Scalar& c);
  static Polynomial variable(const Field& f, VarSetPtr vars, std::uint32_t v);
  static Polynomial from_terms(const Field& f, VarSetPtr vars, std::vector<Term> terms);

  const Field& field() const noexcept { return field_; }
  const VarSetPtr& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint64_t total_degree() const noexcept;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m) const;

  /// Largest term under the given order; polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& order) const;

  /// Full evaluation; `point` is indexed by the variable universe.
  Scalar evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str(const MonomialOrder* order = nullptr) const;

 private:
  void normalize();

  Field field_;
  VarSetPtr vars_;
  std::vector<Term> terms_;
};

/// Generator set for a polynomial ideal; all generators share the ambient
/// variable universe and field.
struct Ideal {
  Field field;
  VarSetPtr vars;
  std::vector<Polynomial> generators;
};

}  // namespace evoiso
