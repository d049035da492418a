#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "evoiso/errors.hpp"
#include "evoiso/matrix.hpp"

namespace evoiso {

/// |GL(n, p)| = prod_{k<n} (p^n - p^k).
std::uint64_t general_linear_order(int n, std::uint64_t p);

/// Single-consumer stream over all non-singular n x n matrices over F_p,
/// generated row by row (only extensions independent of the chosen prefix
/// are visited). Enumeration order is fixed: ascending row codes.
class GlStream {
 public:
  /// Throws budget_exceeded when |GL(n,p)| > max_count.
  GlStream(int n, const Field& prime_field,
           std::uint64_t max_count = UINT64_C(1) << 62);
  ~GlStream();
  GlStream(GlStream&&) noexcept;
  GlStream& operator=(GlStream&&) noexcept;

  std::optional<Matrix> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace evoiso
