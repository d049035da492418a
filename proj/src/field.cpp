#include "evoiso/field.hpp"

namespace evoiso {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (!is_prime(p))
    throw field_error("gf(" + std::to_string(p) + "): modulus is not prime");
  if (p >= (std::uint64_t(1) << 31))
    throw field_error("gf(" + std::to_string(p) + "): modulus too large");
  return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 4 && text.rfind("gf(", 0) == 0 && text.back() == ')') {
    const std::string inner = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    for (char c : inner) {
      if (c < '0' || c > '9') throw field_error("bad field spec: " + text);
      p = p * 10 + std::uint64_t(c - '0');
      if (p >= (std::uint64_t(1) << 31)) throw field_error("bad field spec: " + text);
    }
    return gf(p);
  }
  throw field_error("bad field spec: " + text + " (expected gf(p) or q)");
}

std::string Field::str() const {
  return kind_ == Kind::Prime ? "gf(" + std::to_string(p_) + ")" : "q";
}

}  // namespace evoiso
