#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace evoiso {

/// Ordered variable universe shared by the polynomials of one ring.
class VarSet {
 public:
  static std::shared_ptr<const VarSet> of(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::uint32_t i) const { return names_.at(i); }
  std::optional<std::uint32_t> index(const std::string& n) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// Power product, stored sparsely: (variable index, exponent > 0) pairs
/// sorted by variable index. The empty list is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(std::uint32_t v, std::uint32_t e = 1);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const noexcept {
    return f_;
  }
  std::uint32_t exponent(std::uint32_t v) const noexcept;
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  /// this / d, when d divides this.
  std::optional<Monomial> quotient_by(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Structural order used only for canonical term storage.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

  std::string str(const VarSet& vars) const;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> f_;
};

/// Total, multiplicative monomial order with 1 minimal. The significance
/// list gives variable indices from most to least significant.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, DegRevLex };

  MonomialOrder(Kind k, std::vector<std::uint32_t> significance);
  static MonomialOrder lex(const VarSetPtr& vars);
  static MonomialOrder degrevlex(const VarSetPtr& vars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& significance() const noexcept { return sig_; }

  /// <0 when a < b, 0 when equal, >0 when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string str() const;

 private:
  Kind kind_;
  std::vector<std::uint32_t> sig_;
};

}  // namespace evoiso
