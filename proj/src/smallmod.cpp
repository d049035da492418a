#include "evoiso/detail/smallmod.hpp"

namespace evoiso::detail {

std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = p, nr = a % p;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}

bool nonsingular(const SmallMat& m, std::uint32_t p) {
  std::uint32_t a[kMaxDim][kMaxDim];
  const int n = m.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.a[i][j];
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return false;
    if (sel != c)
      for (int j = 0; j < n; ++j) std::swap(a[sel][j], a[c][j]);
    const std::uint32_t inv = invm(a[c][c], p);
    for (int j = 0; j < n; ++j) a[c][j] = mulm(a[c][j], inv, p);
    for (int i = c + 1; i < n; ++i) {
      const std::uint32_t f = a[i][c];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) a[i][j] = subm(a[i][j], mulm(f, a[c][j], p), p);
    }
  }
  return true;
}

std::uint64_t gl_order(int n, std::uint64_t p) {
  std::uint64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  std::uint64_t count = 1, pk = 1;
  for (int k = 0; k < n; ++k) {
    count *= (pn - pk);
    pk *= p;
  }
  return count;
}

}  // namespace evoiso::detail
