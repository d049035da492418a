#include "evoiso/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace evoiso {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::int64_t integer() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected integer", i);
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t(1) << 40)) throw parse_error("integer literal too large", i);
      ++i;
    }
    return v;
  }
  std::string ident() {
    skip_ws();
    if (i >= s.size() ||
        !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      throw parse_error("expected identifier", i);
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    return s.substr(start, i - start);
  }
};

Scalar parse_coefficient(Cursor& c, const Field& field, bool negative) {
  const std::int64_t num = c.integer();
  std::int64_t den = 1;
  if (c.accept('/')) den = c.integer();
  if (den == 0) throw parse_error("zero denominator", c.i);
  Scalar v = Scalar::fraction(field, num, den);
  return negative ? -v : v;
}

}  // namespace

std::vector<std::string> collect_identifiers(const std::string& text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isalpha(ch) || text[i] == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name = text.substr(start, i - start);
      if (seen.insert(name).second) out.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text, const Field& field,
                            const VarSetPtr& vars) {
  Cursor c{text};
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    bool negative = false;
    if (first) {
      if (c.done()) throw parse_error("empty polynomial", c.i);
      if (c.accept('-')) negative = true;
      else c.accept('+');
    } else {
      if (c.done()) break;
      if (c.accept('-')) negative = true;
      else if (c.accept('+')) negative = false;
      else throw parse_error("expected + or - between terms", c.i);
    }
    first = false;

    Scalar coeff = Scalar::one(field);
    Monomial mono;
    bool saw_factor = false;
    while (true) {
      const char ch = c.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_coefficient(c, field, false);
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        const std::size_t at = c.i;
        const std::string name = c.ident();
        auto idx = vars->index(name);
        if (!idx) throw parse_error("unknown variable '" + name + "'", at);
        std::uint32_t e = 1;
        if (c.accept('^')) {
          const std::int64_t raw = c.integer();
          if (raw < 0 || raw > 1'000'000) throw parse_error("bad exponent", c.i);
          e = std::uint32_t(raw);
        }
        mono = mono * Monomial::var(*idx, e);
        saw_factor = true;
      } else {
        throw parse_error("expected coefficient or variable", c.i);
      }
      if (!c.accept('*')) break;
    }
    if (!saw_factor) throw parse_error("empty term", c.i);
    if (negative) coeff = -coeff;
    terms.push_back({std::move(mono), coeff});
  }
  return Polynomial::from_terms(field, vars, std::move(terms));
}

Ideal parse_ideal(const std::string& text, const Field& field) {
  std::vector<std::string> names = collect_identifiers(text);
  std::sort(names.begin(), names.end());
  VarSetPtr vars = VarSet::of(std::move(names));

  Ideal ideal{field, vars, {}};
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    ideal.generators.push_back(parse_polynomial(line, field, vars));
  }
  return ideal;
}

}  // namespace evoiso
