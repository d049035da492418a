#include "evoiso/families.hpp"

#include <stdexcept>

namespace evoiso {

namespace {

struct domain_error_msg {
  static void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
  }
};

bool is_01(const Scalar& s) { return s.is_zero() || s.is_one(); }

Matrix rows3(const Field& f, const Vec& r1, const Vec& r2, const Vec& r3) {
  Matrix m(f, 3, 3);
  const Vec* rows[3] = {&r1, &r2, &r3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = (*rows[i])[j];
  return m;
}

}  // namespace

EvolutionAlgebra family_A(const Scalar& alpha, const Scalar& beta) {
  domain_error_msg::require(!alpha.is_zero() && !beta.is_zero(),
                            "family A requires alpha, beta nonzero");
  const Field& f = alpha.field();
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  return EvolutionAlgebra(rows3(f, {o, z, z}, {alpha, z, z}, {beta, z, z}));
}

EvolutionAlgebra family_B(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  domain_error_msg::require(!(alpha.is_zero() && beta.is_zero() && gamma.is_zero()),
                            "family B requires (alpha,beta,gamma) != (0,0,0)");
  const Field& f = alpha.field();
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  return EvolutionAlgebra(rows3(f, {o, z, z}, {z, o, z}, {alpha, beta, gamma}));
}

EvolutionAlgebra c_shape(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                         const Scalar& delta, const Scalar& eps) {
  const Field& f = alpha.field();
  const Scalar z = Scalar::zero(f);
  return EvolutionAlgebra(rows3(f, {alpha, beta, z}, {gamma, delta, eps}, {z, z, z}));
}

EvolutionAlgebra d_shape(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                         const Scalar& delta, const Scalar& eps) {
  const Field& f = alpha.field();
  const Scalar z = Scalar::zero(f);
  return EvolutionAlgebra(rows3(f, {alpha, beta, z}, {z, z, z}, {gamma, delta, eps}));
}

EvolutionAlgebra family_C(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                          const Scalar& delta, const Scalar& eps) {
  domain_error_msg::require(is_01(alpha) && is_01(beta) && !(alpha.is_zero() && beta.is_zero()),
                            "family C requires (alpha,beta) in {0,1}^2 \\ {(0,0)}");
  domain_error_msg::require(!(gamma.is_zero() && delta.is_zero() && eps.is_zero()),
                            "family C requires (gamma,delta,eps) != (0,0,0)");
  return c_shape(alpha, beta, gamma, delta, eps);
}

EvolutionAlgebra family_D(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                          const Scalar& delta, const Scalar& eps) {
  domain_error_msg::require(is_01(alpha) && is_01(beta) && !(alpha.is_zero() && beta.is_zero()),
                            "family D requires (alpha,beta) in {0,1}^2 \\ {(0,0)}");
  domain_error_msg::require(!(gamma.is_zero() && delta.is_zero() && eps.is_zero()),
                            "family D requires (gamma,delta,eps) != (0,0,0)");
  return d_shape(alpha, beta, gamma, delta, eps);
}

EvolutionAlgebra trivial_algebra(int n, const Field& field) {
  if (n < 1) throw std::domain_error("trivial algebra needs dimension >= 1");
  return EvolutionAlgebra(Matrix(field, std::size_t(n), std::size_t(n)));
}

EvolutionAlgebra class_representative(int id, const Field& field) {
  // structure tuples of the eight classes, rows as integer triples
  static const int tuples[8][3][3] = {
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},  // (0,0,0)
      {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}},  // (e1,0,0)
      {{1, 0, 0}, {1, 0, 0}, {0, 0, 0}},  // (e1,e1,0)
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},  // (e1,e2,0)
      {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}},  // (e1,e1,e1)
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  // (e1,e2,e3)
      {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}},  // (e1,e2,e1+e2)
      {{1, 0, 0}, {0, 1, 0}, {1, 0, 0}},  // (e1,e2,e1)
  };
  if (id < 1 || id > 8) throw std::domain_error("representative id must be 1..8");
  Matrix m(field, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m.at(i, j) = Scalar(field, tuples[id - 1][i][j]);
  return EvolutionAlgebra(std::move(m));
}

FamilySpec FamilySpec::family_a(const Scalar& alpha, const Scalar& beta) {
  return {Kind::A, {alpha, beta}, 0, 3};
}
FamilySpec FamilySpec::family_b(const Scalar& a, const Scalar& b, const Scalar& g) {
  return {Kind::B, {a, b, g}, 0, 3};
}
FamilySpec FamilySpec::family_c(const Scalar& a, const Scalar& b, const Scalar& g,
                                const Scalar& d, const Scalar& e) {
  return {Kind::C, {a, b, g, d, e}, 0, 3};
}
FamilySpec FamilySpec::family_d(const Scalar& a, const Scalar& b, const Scalar& g,
                                const Scalar& d, const Scalar& e) {
  return {Kind::D, {a, b, g, d, e}, 0, 3};
}
FamilySpec FamilySpec::representative(int id) { return {Kind::Representative, {}, id, 3}; }
FamilySpec FamilySpec::trivial(int n) { return {Kind::Trivial, {}, 0, n}; }

FamilySpec FamilySpec::parse(const std::string& text, const Field& field) {
  if (text.rfind("rep", 0) == 0 && text.size() == 4 && text[3] >= '1' && text[3] <= '8')
    return representative(text[3] - '0');
  if (text.rfind("trivial", 0) == 0) {
    const std::string rest = text.substr(7);
    const int n = rest.empty() ? 3 : std::stoi(rest);
    return trivial(n);
  }
  if (text.size() >= 4 && text[1] == '(' && text.back() == ')') {
    const char kind = text[0];
    std::vector<Scalar> params;
    std::string inner = text.substr(2, text.size() - 3);
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      const std::string tok =
          inner.substr(start, comma == std::string::npos ? comma : comma - start);
      if (tok.empty()) throw std::invalid_argument("bad family parameter in " + text);
      std::size_t slash = tok.find('/');
      if (slash == std::string::npos) {
        params.emplace_back(field, std::stoll(tok));
      } else {
        params.push_back(Scalar::fraction(field, std::stoll(tok.substr(0, slash)),
                                          std::stoll(tok.substr(slash + 1))));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    switch (kind) {
      case 'A':
        if (params.size() == 2) return family_a(params[0], params[1]);
        break;
      case 'B':
        if (params.size() == 3) return family_b(params[0], params[1], params[2]);
        break;
      case 'C':
        if (params.size() == 5)
          return family_c(params[0], params[1], params[2], params[3], params[4]);
        break;
      case 'D':
        if (params.size() == 5)
          return family_d(params[0], params[1], params[2], params[3], params[4]);
        break;
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown builtin algebra: " + text);
}

EvolutionAlgebra make_family(const FamilySpec& spec, const Field& field) {
  auto in_field = [&](const Scalar& s) {
    if (s.field() != field) throw field_error("family parameter from wrong field");
    return s;
  };
  switch (spec.kind) {
    case FamilySpec::Kind::A:
      return family_A(in_field(spec.params.at(0)), in_field(spec.params.at(1)));
    case FamilySpec::Kind::B:
      return family_B(in_field(spec.params.at(0)), in_field(spec.params.at(1)),
                      in_field(spec.params.at(2)));
    case FamilySpec::Kind::C:
      return family_C(in_field(spec.params.at(0)), in_field(spec.params.at(1)),
                      in_field(spec.params.at(2)), in_field(spec.params.at(3)),
                      in_field(spec.params.at(4)));
    case FamilySpec::Kind::D:
      return family_D(in_field(spec.params.at(0)), in_field(spec.params.at(1)),
                      in_field(spec.params.at(2)), in_field(spec.params.at(3)),
                      in_field(spec.params.at(4)));
    case FamilySpec::Kind::Representative:
      return class_representative(spec.rep_id, field);
    case FamilySpec::Kind::Trivial:
      return trivial_algebra(spec.n, field);
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace evoiso
