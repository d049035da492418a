#include "evoiso/evolution_algebra.hpp"

#include <stdexcept>

namespace evoiso {

EvolutionAlgebra::EvolutionAlgebra(Matrix structure) : c_(std::move(structure)) {
  if (!c_.is_square()) throw std::invalid_argument("structure matrix must be square");
}

Vec EvolutionAlgebra::product(const Vec& u, const Vec& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n)
    throw std::invalid_argument("product: dimension mismatch");
  Vec out(n, Scalar::zero(field()));
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar w = u[i] * v[i];
    if (w.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += w * c_.at(i, j);
  }
  return out;
}

std::size_t EvolutionAlgebra::annihilator_codim() const {
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!c_.at(i, j).is_zero()) {
        zero = false;
        break;
      }
    if (!zero) ++nonzero;
  }
  return nonzero;
}

std::string EvolutionAlgebra::tuple_str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ",";
    std::string row;
    for (std::size_t j = 0; j < dim(); ++j) {
      const Scalar& c = c_.at(i, j);
      if (c.is_zero()) continue;
      if (!row.empty()) row += "+";
      if (!c.is_one()) row += c.str();
      row += "e" + std::to_string(j + 1);
    }
    s += row.empty() ? "0" : row;
  }
  return s + ")";
}

namespace {

// h applied to a coordinate vector: v -> v * H (rows of H are basis images).
Vec apply_map(const Vec& v, const Matrix& h) {
  const std::size_t n = h.rows();
  Vec out(n, Scalar::zero(h.field()));
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) out[l] += v[k] * h.at(k, l);
  }
  return out;
}

Vec matrix_row(const Matrix& m, std::size_t i) {
  Vec r;
  r.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
  return r;
}

}  // namespace

bool verify_isotopism(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                      const Matrix& f, const Matrix& g, const Matrix& h) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw std::invalid_argument("verify_isotopism: dimension mismatch");
  if (a.field() != b.field()) throw field_error("verify_isotopism: field mismatch");
  for (const Matrix* m : {&f, &g, &h}) {
    if (m->rows() != n || m->cols() != n)
      throw std::invalid_argument("verify_isotopism: matrix shape mismatch");
    if (m->field() != a.field()) throw field_error("verify_isotopism: field mismatch");
  }
  if (!f.nonsingular() || !g.nonsingular() || !h.nonsingular()) return false;

  const Vec zero(n, Scalar::zero(a.field()));
  // bilinearity makes the basis check sufficient
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = b.product(matrix_row(f, i), matrix_row(g, j));
      const Vec rhs = i == j ? apply_map(matrix_row(a.structure(), i), h) : zero;
      if (lhs != rhs) return false;
    }
  return true;
}

bool verify_strong_isotopism(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                             const Matrix& f, const Matrix& h) {
  return verify_isotopism(a, b, f, f, h);
}

bool verify_isomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                        const Matrix& f) {
  return verify_isotopism(a, b, f, f, f);
}

}  // namespace evoiso
