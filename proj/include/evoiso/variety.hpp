#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "evoiso/errors.hpp"
#include "evoiso/polynomial.hpp"

namespace evoiso {

struct VarietyBudget {
  std::uint32_t max_variables = 32;
};

/// Assignment variable -> value, indexed by the ideal's variable universe.
using Point = std::vector<Scalar>;

/// All common zeros of the ideal's generators over its (finite) field,
/// sorted lexicographically by coordinates for a deterministic listing.
std::vector<Point> variety_points(const Ideal& ideal, const VarietyBudget& budget = {});

/// Streaming core behind variety_points: visits every common zero exactly
/// once (residue coordinates, variable-universe order) without materializing
/// the set. Visiting order is deterministic but unspecified; return false
/// from the visitor to stop. Enumeration backtracks variable by variable and
/// prunes as soon as a fully-assigned generator evaluates to nonzero.
void scan_variety(const Ideal& ideal, const VarietyBudget& budget,
                  const std::function<bool(std::span<const std::uint32_t>)>& visit);

std::uint64_t variety_size(const Ideal& ideal, const VarietyBudget& budget = {});

}  // namespace evoiso
