#include "evoiso/scalar.hpp"

namespace evoiso {

void Scalar::assign_int(std::int64_t n) {
  if (field_.is_prime_field()) {
    const std::int64_t p = std::int64_t(field_.prime());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    res_ = std::uint64_t(r);
  } else {
    rat_ = n;
  }
}

Scalar Scalar::fraction(const Field& f, std::int64_t n, std::int64_t d) {
  if (d == 0) throw field_error("fraction with zero denominator");
  if (f.is_prime_field()) {
    Scalar den(f, d);
    if (den.is_zero()) throw field_error("fraction denominator vanishes in " + f.str());
    return Scalar(f, n) / den;
  }
  Scalar s;
  s.field_ = f;
  s.rat_ = mpq_class(n, d);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::from_residue(const Field& f, std::uint64_t r) {
  if (!f.is_prime_field()) throw field_error("from_residue: field is not finite");
  Scalar s;
  s.field_ = f;
  s.res_ = r % f.prime();
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  s.field_ = Field::rationals();
  s.rat_ = q;
  s.rat_.canonicalize();
  return s;
}

bool Scalar::is_zero() const noexcept {
  return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw field_error("residue(): field is not finite");
  return res_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw field_error("rational(): field is finite");
  return rat_;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_)
    throw field_error("mixed-field operands: " + a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime_field()) {
    r.res_ = res_ == 0 ? 0 : field_.prime() - res_;
  } else {
    r.rat_ = -rat_;
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r = a;
  if (a.field_.is_prime_field()) {
    r.res_ = (a.res_ + b.res_) % a.field_.prime();
  } else {
    r.rat_ = a.rat_ + b.rat_;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r = a;
  if (a.field_.is_prime_field()) {
    r.res_ = (a.res_ * b.res_) % a.field_.prime();
  } else {
    r.rat_ = a.rat_ * b.rat_;
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  if (b.is_zero()) throw field_error("division by zero");
  return a * b.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw field_error("division by zero");
  Scalar r = *this;
  if (field_.is_prime_field()) {
    r.res_ = mod_inverse(res_, field_.prime());
  } else {
    r.rat_ = 1 / rat_;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_prime_field() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return a.field_.is_prime_field() ? a.res_ < b.res_ : a.rat_ < b.rat_;
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rat_.get_str();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; requires gcd(a,p)=1
  std::int64_t t = 0, nt = 1;
  std::int64_t r = std::int64_t(p), nr = std::int64_t(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw field_error("mod_inverse: not invertible");
  if (t < 0) t += std::int64_t(p);
  return std::uint64_t(t);
}

std::optional<Scalar> square_root(const Scalar& a) {
  const Field& f = a.field();
  if (f.is_prime_field()) {
    const std::uint64_t p = f.prime();
    const std::uint64_t v = a.residue();
    for (std::uint64_t m = 0; m <= p / 2; ++m)
      if ((m * m) % p == v) return Scalar::from_residue(f, m);
    return std::nullopt;
  }
  const mpq_class& q = a.rational();
  if (q < 0) return std::nullopt;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar::from_rational(mpq_class(rn, rd));
}

}  // namespace evoiso
