#include "evoiso/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace evoiso {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged rows");
    std::size_t j = 0;
    for (std::int64_t v : row) m.at(i, j++) = Scalar(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

static void check_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw field_error("mixed-field matrices");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-Scalar::one(a.field())); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

namespace {

// In-place Gauss-Jordan on `m`, mirroring every row operation onto `aug`
// when given. Returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, Matrix* aug) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) std::swap(aug->at(sel, j), aug->at(r, j));
    }
    const Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    if (aug)
      for (std::size_t j = 0; j < aug->cols(); ++j) aug->at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar factor = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) aug->at(i, j) -= factor * aug->at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return rref(m, nullptr).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix m = *this;
  Matrix aug = identity(field_, rows_);
  if (rref(m, &aug).size() != rows_) return std::nullopt;
  return aug;
}

LinearSolution solve_linear(const Matrix& A, const Matrix& B) {
  check_same_field(A, B);
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_linear: row mismatch");
  const Field& f = A.field();
  Matrix m = A;
  Matrix rhs = B;
  const std::vector<std::size_t> pivots = rref(m, &rhs);
  const std::size_t r = pivots.size();

  LinearSolution sol{false, Matrix(f, 0, 0), Matrix(f, 0, 0)};
  // consistency: zero rows of the reduced A must have zero rhs
  for (std::size_t i = r; i < m.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      if (!rhs.at(i, j).is_zero()) return sol;

  std::vector<bool> is_pivot(A.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix x0(f, A.cols(), B.cols());
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < B.cols(); ++j) x0.at(pivots[k], j) = rhs.at(k, j);

  Matrix ker(f, A.cols(), A.cols() - r);
  std::size_t kcol = 0;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    ker.at(c, kcol) = Scalar::one(f);
    for (std::size_t k = 0; k < r; ++k) ker.at(pivots[k], kcol) = -m.at(k, c);
    ++kcol;
  }

  sol.consistent = true;
  sol.particular = std::move(x0);
  sol.kernel = std::move(ker);
  return sol;
}

std::uint64_t LinearSolution::count(std::uint64_t p, std::size_t b_cols) const {
  if (!consistent) return 0;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < nullity() * b_cols; ++i) n *= p;
  return n;
}

}  // namespace evoiso
