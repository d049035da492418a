#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evoiso/scalar.hpp"

namespace evoiso {

/// Dense exact matrix over a single field.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n);
  /// Test/fixture helper: entries given as integers, reduced into f.
  static Matrix from_rows(const Field& f,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<const Scalar> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  Matrix transpose() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;

  std::size_t rank() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool nonsingular() const { return is_square() && rank() == rows_; }
  std::optional<Matrix> inverse() const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// All solutions of A*X = B: X = particular + kernel*W for arbitrary W.
/// `kernel` columns are a basis of the nullspace of A. When inconsistent the
/// two matrices are empty placeholders.
struct LinearSolution {
  bool consistent = false;
  Matrix particular;
  Matrix kernel;

  std::size_t nullity() const { return kernel.cols(); }
  /// Number of solutions over F_p (finite fields, B with given column count).
  std::uint64_t count(std::uint64_t p, std::size_t b_cols) const;
};

LinearSolution solve_linear(const Matrix& A, const Matrix& B);

}  // namespace evoiso
