#pragma once

// Fixed-size modular kernels backing the search-heavy code paths
// (GL enumeration, isotopism search, brute-force oracles). Dimensions are
// capped at 4 and moduli are small primes, so everything lives on the stack.

#include <array>
#include <cstdint>

namespace evoiso::detail {

constexpr int kMaxDim = 4;

using Row = std::array<std::uint32_t, kMaxDim>;

struct SmallMat {
  int n = 0;
  std::uint32_t a[kMaxDim][kMaxDim] = {};
};

inline std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}

std::uint32_t invm(std::uint32_t a, std::uint32_t p);

/// Row vector <-> integer code, first coordinate most significant, so code
/// order is lexicographic coordinate order.
inline Row decode_row(std::uint64_t code, int n, std::uint32_t p) {
  Row r{};
  for (int i = n - 1; i >= 0; --i) {
    r[std::size_t(i)] = std::uint32_t(code % p);
    code /= p;
  }
  return r;
}

inline std::uint64_t encode_row(const Row& r, int n, std::uint32_t p) {
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) code = code * p + r[std::size_t(i)];
  return code;
}

/// Incremental row-space tracker in reduced echelon form; used to extend a
/// matrix only by rows independent of those already chosen. Copy to snapshot.
struct RowSpan {
  int n = 0;
  std::uint32_t p = 2;
  int rank = 0;
  Row basis[kMaxDim] = {};   // echelon rows, leading coefficient 1
  int pivot[kMaxDim] = {};   // pivot column of basis[i]

  void init(int dim, std::uint32_t prime) {
    n = dim;
    p = prime;
    rank = 0;
  }

  Row reduce(Row v) const {
    for (int b = 0; b < rank; ++b) {
      const std::uint32_t c = v[std::size_t(pivot[b])];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        v[std::size_t(j)] = subm(v[std::size_t(j)], mulm(c, basis[b][std::size_t(j)], p), p);
    }
    return v;
  }

  /// True (and extends the span) iff v is independent of the current rows.
  bool try_add(const Row& v) {
    Row w = reduce(v);
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (w[std::size_t(j)] != 0) {
        pc = j;
        break;
      }
    if (pc < 0) return false;
    const std::uint32_t inv = invm(w[std::size_t(pc)], p);
    for (int j = 0; j < n; ++j) w[std::size_t(j)] = mulm(w[std::size_t(j)], inv, p);
    // keep basis ordered by pivot column
    int pos = rank;
    while (pos > 0 && pivot[pos - 1] > pc) {
      basis[pos] = basis[pos - 1];
      pivot[pos] = pivot[pos - 1];
      --pos;
    }
    basis[pos] = w;
    pivot[pos] = pc;
    ++rank;
    return true;
  }

  bool contains(const Row& v) const {
    const Row w = reduce(v);
    for (int j = 0; j < n; ++j)
      if (w[std::size_t(j)] != 0) return false;
    return true;
  }
};

/// Determinant-nonzero test for an n x n residue matrix.
bool nonsingular(const SmallMat& m, std::uint32_t p);

/// componentwise product, then multiply by the structure matrix on the right:
/// out_l = sum_k u_k v_k c[k][l].
inline Row hadamard_apply(const Row& u, const Row& v, const SmallMat& c, std::uint32_t p) {
  Row out{};
  for (int k = 0; k < c.n; ++k) {
    const std::uint32_t w = mulm(u[std::size_t(k)], v[std::size_t(k)], p);
    if (w == 0) continue;
    for (int l = 0; l < c.n; ++l)
      out[std::size_t(l)] = addm(out[std::size_t(l)], mulm(w, c.a[k][l], p), p);
  }
  return out;
}

inline bool is_zero_row(const Row& r, int n) {
  for (int i = 0; i < n; ++i)
    if (r[std::size_t(i)] != 0) return false;
  return true;
}

std::uint64_t gl_order(int n, std::uint64_t p);

/// Visits every element of GL(n, p) exactly once, rows extended in ascending
/// row-code order. The visitor returns false to stop early.
template <typename Fn>
bool for_each_gl(int n, std::uint32_t p, Fn&& fn) {
  SmallMat m;
  m.n = n;
  RowSpan spans[kMaxDim + 1];
  spans[0].init(n, p);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;

  // iterative backtracking over row codes
  std::uint64_t code[kMaxDim] = {};
  int depth = 0;
  std::uint64_t next_code = 0;
  while (true) {
    bool advanced = false;
    for (std::uint64_t c = next_code; c < total; ++c) {
      const Row r = decode_row(c, n, p);
      RowSpan s = spans[depth];
      if (!s.try_add(r)) continue;
      code[depth] = c;
      for (int j = 0; j < n; ++j) m.a[depth][j] = r[std::size_t(j)];
      spans[depth + 1] = s;
      ++depth;
      advanced = true;
      break;
    }
    if (advanced) {
      if (depth == n) {
        if (!fn(static_cast<const SmallMat&>(m))) return false;
        --depth;
        next_code = code[depth] + 1;
      } else {
        next_code = 0;
      }
    } else {
      if (depth == 0) return true;
      --depth;
      next_code = code[depth] + 1;
    }
  }
}

}  // namespace evoiso::detail
