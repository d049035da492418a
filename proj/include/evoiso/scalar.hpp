#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "evoiso/field.hpp"

namespace evoiso {

/// An exact field element in canonical form: a residue in [0,p) for a prime
/// field, a reduced fraction with positive denominator for the rationals.
/// Equality is plain value comparison; no normalization happens on compare.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  Scalar(const Field& f, std::int64_t n) : field_(f) { assign_int(n); }

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  /// n/d embedded into f (d invertible there).
  static Scalar fraction(const Field& f, std::int64_t n, std::int64_t d);
  static Scalar from_residue(const Field& f, std::uint64_t r);
  static Scalar from_rational(const mpq_class& q);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0,p); prime fields only.
  std::uint64_t residue() const;
  const mpq_class& rational() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for canonical sorting of outputs
  /// (residue order on prime fields, numeric order on the rationals).
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// "3", "-1/2", ...
  std::string str() const;

 private:
  void assign_int(std::int64_t n);
  static void check_same(const Scalar& a, const Scalar& b);

  Field field_;
  std::uint64_t res_ = 0;  // prime-field representation
  mpq_class rat_;          // rationals representation
};

/// Smallest m with m*m == a, if a is a square (exact test over both fields).
std::optional<Scalar> square_root(const Scalar& a);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace evoiso
