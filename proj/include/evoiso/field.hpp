#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evoiso {

/// Raised when an operation mixes scalars from different fields or a field
/// precondition fails (composite modulus, division by zero, ...).
struct field_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n) noexcept;

/// Base field descriptor: a prime field F_p or the rationals.
/// Small value type, freely copyable; equality is structural.
class Field {
 public:
  enum class Kind : std::uint8_t { Prime, Rationals };

  static Field gf(std::uint64_t p);
  static Field rationals() noexcept { return Field(Kind::Rationals, 0); }

  /// Accepts "gf(p)" or "q".
  static Field parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Prime; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

  std::uint64_t prime() const {
    if (kind_ != Kind::Prime) throw field_error("prime(): field is not finite");
    return p_;
  }
  std::uint64_t characteristic() const noexcept {
    return kind_ == Kind::Prime ? p_ : 0;
  }

  std::string str() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

}  // namespace evoiso
