#include "evoiso/gl.hpp"

#include "evoiso/detail/smallmod.hpp"

namespace evoiso {

std::uint64_t general_linear_order(int n, std::uint64_t p) {
  return detail::gl_order(n, p);
}

struct GlStream::Impl {
  int n;
  Field field;
  std::uint32_t p;
  std::uint64_t total_rows;
  // backtracking state
  int depth = 0;
  std::uint64_t next_code = 0;
  std::uint64_t code[detail::kMaxDim] = {};
  detail::SmallMat m;
  detail::RowSpan spans[detail::kMaxDim + 1];
  bool done = false;

  Impl(int dim, const Field& f) : n(dim), field(f), p(std::uint32_t(f.prime())) {
    m.n = n;
    spans[0].init(n, p);
    total_rows = 1;
    for (int i = 0; i < n; ++i) total_rows *= p;
  }

  std::optional<Matrix> next() {
    if (done) return std::nullopt;
    while (true) {
      bool advanced = false;
      for (std::uint64_t c = next_code; c < total_rows; ++c) {
        const detail::Row r = detail::decode_row(c, n, p);
        detail::RowSpan s = spans[depth];
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
          Matrix out(field, std::size_t(n), std::size_t(n));
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              out.at(std::size_t(i), std::size_t(j)) = Scalar::from_residue(field, m.a[i][j]);
          --depth;
          next_code = code[depth] + 1;
          return out;
        }
        next_code = 0;
      } else {
        if (depth == 0) {
          done = true;
          return std::nullopt;
        }
        --depth;
        next_code = code[depth] + 1;
      }
    }
  }
};

GlStream::GlStream(int n, const Field& prime_field, std::uint64_t max_count) {
  if (!prime_field.is_prime_field())
    throw field_error("GL enumeration requires a finite field");
  if (n < 1 || n > detail::kMaxDim)
    throw std::invalid_argument("GL enumeration supports 1 <= n <= 4");
  if (general_linear_order(n, prime_field.prime()) > max_count)
    throw budget_exceeded("GL(" + std::to_string(n) + "," +
                          std::to_string(prime_field.prime()) +
                          ") exceeds the enumeration budget");
  impl_ = std::make_unique<Impl>(n, prime_field);
}

GlStream::~GlStream() = default;
GlStream::GlStream(GlStream&&) noexcept = default;
GlStream& GlStream::operator=(GlStream&&) noexcept = default;

std::optional<Matrix> GlStream::next() { return impl_->next(); }

}  // namespace evoiso
