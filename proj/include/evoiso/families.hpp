#pragma once

#include <string>
#include <vector>

#include "evoiso/evolution_algebra.hpp"

namespace evoiso {

/// The named three-dimensional families and the eight class representatives.
/// Parameter domains are enforced at construction.
struct FamilySpec {
  enum class Kind : std::uint8_t { A, B, C, D, Representative, Trivial };

  Kind kind;
  std::vector<Scalar> params;  // family parameters, all in one field
  int rep_id = 0;              // Representative: 1..8
  int n = 3;                   // Trivial: dimension

  static FamilySpec family_a(const Scalar& alpha, const Scalar& beta);
  static FamilySpec family_b(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);
  static FamilySpec family_c(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                             const Scalar& delta, const Scalar& eps);
  static FamilySpec family_d(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                             const Scalar& delta, const Scalar& eps);
  static FamilySpec representative(int id);
  static FamilySpec trivial(int n);

  /// "A(2,3)", "rep7", "trivial3", ... Parameters parsed as integers or
  /// fractions in `field`.
  static FamilySpec parse(const std::string& text, const Field& field);
};

EvolutionAlgebra make_family(const FamilySpec& spec, const Field& field);

// direct builders used throughout tests and the claim sweeps
EvolutionAlgebra family_A(const Scalar& alpha, const Scalar& beta);
EvolutionAlgebra family_B(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);
EvolutionAlgebra family_C(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                          const Scalar& delta, const Scalar& eps);
EvolutionAlgebra family_D(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                          const Scalar& delta, const Scalar& eps);
/// Corollary representatives, id 1..8: (0,0,0), (e1,0,0), (e1,e1,0),
/// (e1,e2,0), (e1,e1,e1), (e1,e2,e3), (e1,e2,e1+e2), (e1,e2,e1).
EvolutionAlgebra class_representative(int id, const Field& field);
EvolutionAlgebra trivial_algebra(int n, const Field& field);

/// C- and D-shaped structure matrices without the {0,1} domain checks;
/// used where sweeps leave the display domains.
EvolutionAlgebra c_shape(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                         const Scalar& delta, const Scalar& eps);
EvolutionAlgebra d_shape(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                         const Scalar& delta, const Scalar& eps);

}  // namespace evoiso
