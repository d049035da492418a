#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evoiso/errors.hpp"
#include "evoiso/polynomial.hpp"

namespace evoiso {

struct GroebnerBudget {
  /// Cap on processed S-pairs; exceeding it raises budget_exceeded instead
  /// of hanging on an intractable instance.
  std::uint64_t max_pair_reductions = 1'000'000;
};

/// Remainder of f under sequential multivariate division by `basis`:
/// f - result lies in the ideal generated by `basis` and no monomial of the
/// result is divisible by any basis leading monomial. Zero basis elements
/// are ignored.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// Leading-term cancelling combination of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// Buchberger completion with the coprime-leading-monomial skip and
/// normal (smallest-lcm-first) pair selection.
std::vector<Polynomial> buchberger(const Ideal& ideal, const MonomialOrder& order,
                                   const GroebnerBudget& budget = {});

/// Monic auto-reduction of a Groebner basis. The output is the unique
/// reduced basis of the ideal for the given order, sorted by ascending
/// leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                     const MonomialOrder& order);

std::vector<Polynomial> reduced_groebner_basis(const Ideal& ideal,
                                               const MonomialOrder& order,
                                               const GroebnerBudget& budget = {});

}  // namespace evoiso
