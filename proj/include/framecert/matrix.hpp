#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "framecert/scalar.hpp"

namespace framecert {

class Matrix;

/// Dense column vector. All entries share one field tag; binary operations
/// require matching fields (convert explicitly with to_float / to_exact).
class Vector {
 public:
  Vector() = default;
  Vector(std::size_t dim, Field field);
  static Vector from_doubles(std::vector<double> entries);
  static Vector from_exact(std::vector<Rational> entries);
  static Vector from_eigen(const Eigen::VectorXd& v);

  std::size_t dim() const;
  Field field() const { return std::holds_alternative<std::vector<Rational>>(data_) ? Field::Exact : Field::Float; }

  Scalar at(std::size_t i) const;
  void set(std::size_t i, const Scalar& value);
  const Rational& exact_at(std::size_t i) const;
  /// Mutable entry; callers writing p/q pairs must leave the value canonical
  /// (gmp two-argument constructions are not), or call canonicalize_exact().
  Rational& exact_at(std::size_t i);
  /// Re-canonicalizes every rational entry in place; no-op on float vectors.
  void canonicalize_exact();
  double float_at(std::size_t i) const;
  double& float_at(std::size_t i);
  /// Entry converted to double regardless of field.
  double entry_as_double(std::size_t i) const;

  Eigen::VectorXd to_eigen() const;
  Vector to_float() const;
  /// Exact image; float entries convert losslessly (every double is rational).
  Vector to_exact() const;

  bool operator==(const Vector& other) const;
  bool operator!=(const Vector& other) const { return !(*this == other); }

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector scaled(const Scalar& factor) const;
  static Scalar dot(const Vector& a, const Vector& b);

  /// Field-matched squared euclidean norm.
  Scalar norm_sq() const;
  /// Euclidean norm as double (exact entries converted).
  double norm() const;
  double max_abs() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  friend class Matrix;
  std::variant<std::vector<Rational>, std::vector<double>> data_ =
      std::vector<double>{};
};

/// Dense row-major matrix over one field tag.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);
  static Matrix identity(std::size_t n, Field field);
  static Matrix from_eigen(const Eigen::MatrixXd& m);
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return std::holds_alternative<std::vector<Rational>>(data_) ? Field::Exact : Field::Float; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& value);
  const Rational& exact_at(std::size_t i, std::size_t j) const;
  /// Mutable entry; see Vector::exact_at for the canonical-form requirement.
  Rational& exact_at(std::size_t i, std::size_t j);
  /// Re-canonicalizes every rational entry in place; no-op on float matrices.
  void canonicalize_exact();
  double float_at(std::size_t i, std::size_t j) const;
  double& float_at(std::size_t i, std::size_t j);
  double entry_as_double(std::size_t i, std::size_t j) const;

  Eigen::MatrixXd to_eigen() const;
  Matrix to_float() const;
  Matrix to_exact() const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& x) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& factor) const;

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, const Vector& v);
  Matrix select_columns(const std::vector<std::size_t>& indices) const;
  Matrix select_rows(const std::vector<std::size_t>& indices) const;
  /// Horizontal concatenation [this | other].
  Matrix hstack(const Matrix& other) const;

  double max_abs() const;
  bool is_zero() const;
  bool is_symmetric(double tol) const;

  std::string to_string() const;

 private:
  std::size_t index_of(std::size_t i, std::size_t j) const { return i * cols_ + j; }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<Rational>, std::vector<double>> data_ =
      std::vector<double>{};
};

/// max|a - b| over entries, computed in doubles; fields may differ.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Vector& a, const Vector& b);

}  // namespace framecert
