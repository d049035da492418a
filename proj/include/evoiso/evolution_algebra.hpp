#pragma once

#include <vector>

#include "evoiso/matrix.hpp"

namespace evoiso {

using Vec = std::vector<Scalar>;

/// An n-dimensional evolution algebra, given by its structure matrix C:
/// row i holds the coordinates of e_i*e_i, and distinct basis vectors
/// multiply to zero. Immutable after construction.
class EvolutionAlgebra {
 public:
  explicit EvolutionAlgebra(Matrix structure);

  std::size_t dim() const noexcept { return c_.rows(); }
  const Field& field() const noexcept { return c_.field(); }
  const Matrix& structure() const noexcept { return c_; }

  /// Bilinear product: sum_i u_i v_i (row i of C).
  Vec product(const Vec& u, const Vec& v) const;

  /// dim span{uv} = rank of the structure matrix.
  std::size_t derived_dim() const { return c_.rank(); }
  /// codim Ann = number of nonzero structure rows.
  std::size_t annihilator_codim() const;

  /// "(e1,e2,e1+e2)"-style structure tuple rendering.
  std::string tuple_str() const;

  friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    return !(a == b);
  }

 private:
  Matrix c_;
};

/// f(u)g(v) = h(uv) on all basis pairs, with F, G, H non-singular.
/// Rows of the matrices are the images of the basis vectors.
bool verify_isotopism(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                      const Matrix& f, const Matrix& g, const Matrix& h);
bool verify_strong_isotopism(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                             const Matrix& f, const Matrix& h);
bool verify_isomorphism(const EvolutionAlgebra& a, const EvolutionAlgebra& b,
                        const Matrix& f);

}  // namespace evoiso
