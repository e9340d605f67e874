#include "framecert/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "framecert/errors.hpp"

namespace framecert {

namespace {

template <typename T>
T abs_of(const T& x) {
  return x < T(0) ? T(-x) : x;
}

void require(bool ok, ErrorCode code, const char* message) {
  if (!ok) fail(code, message);
}

}  // namespace

// ============================================================================
// Vector
// ============================================================================

Vector::Vector(std::size_t dim, Field field) {
  if (field == Field::Exact) {
    data_ = std::vector<Rational>(dim, Rational(0));
  } else {
    data_ = std::vector<double>(dim, 0.0);
  }
}

Vector Vector::from_doubles(std::vector<double> entries) {
  Vector v;
  v.data_ = std::move(entries);
  return v;
}

Vector Vector::from_exact(std::vector<Rational> entries) {
  Vector v;
  v.data_ = std::move(entries);
  return v;
}

Vector Vector::from_eigen(const Eigen::VectorXd& v) {
  std::vector<double> entries(v.data(), v.data() + v.size());
  return from_doubles(std::move(entries));
}

std::size_t Vector::dim() const {
  return field() == Field::Exact ? std::get<std::vector<Rational>>(data_).size()
                                 : std::get<std::vector<double>>(data_).size();
}

Scalar Vector::at(std::size_t i) const {
  return field() == Field::Exact ? Scalar(exact_at(i)) : Scalar(float_at(i));
}

void Vector::set(std::size_t i, const Scalar& value) {
  require(value.field() == field(), ErrorCode::FieldMismatch, "scalar/vector field mismatch");
  if (field() == Field::Exact) {
    exact_at(i) = value.exact();
  } else {
    float_at(i) = value.as_double();
  }
}

const Rational& Vector::exact_at(std::size_t i) const {
  require(field() == Field::Exact, ErrorCode::FieldMismatch, "vector is not exact");
  return std::get<std::vector<Rational>>(data_).at(i);
}

Rational& Vector::exact_at(std::size_t i) {
  require(field() == Field::Exact, ErrorCode::FieldMismatch, "vector is not exact");
  return std::get<std::vector<Rational>>(data_).at(i);
}

void Vector::canonicalize_exact() {
  if (field() != Field::Exact) return;
  for (Rational& r : std::get<std::vector<Rational>>(data_)) r.canonicalize();
}

double Vector::float_at(std::size_t i) const {
  require(field() == Field::Float, ErrorCode::FieldMismatch, "vector is not float");
  return std::get<std::vector<double>>(data_).at(i);
}

double& Vector::float_at(std::size_t i) {
  require(field() == Field::Float, ErrorCode::FieldMismatch, "vector is not float");
  return std::get<std::vector<double>>(data_).at(i);
}

double Vector::entry_as_double(std::size_t i) const {
  return field() == Field::Exact ? exact_at(i).get_d() : float_at(i);
}

Eigen::VectorXd Vector::to_eigen() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < dim(); ++i) out(static_cast<Eigen::Index>(i)) = entry_as_double(i);
  return out;
}

Vector Vector::to_float() const {
  if (field() == Field::Float) return *this;
  std::vector<double> entries(dim());
  for (std::size_t i = 0; i < dim(); ++i) entries[i] = entry_as_double(i);
  return from_doubles(std::move(entries));
}

Vector Vector::to_exact() const {
  if (field() == Field::Exact) return *this;
  std::vector<Rational> entries(dim());
  for (std::size_t i = 0; i < dim(); ++i) entries[i] = rational_from_double(float_at(i));
  return from_exact(std::move(entries));
}

bool Vector::operator==(const Vector& other) const {
  return data_ == other.data_;
}

Vector Vector::operator+(const Vector& other) const {
  require(field() == other.field(), ErrorCode::FieldMismatch, "vector field mismatch");
  require(dim() == other.dim(), ErrorCode::DimensionMismatch, "vector dim mismatch");
  Vector out(dim(), field());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field() == Field::Exact) {
      out.exact_at(i) = exact_at(i) + other.exact_at(i);
    } else {
      out.float_at(i) = float_at(i) + other.float_at(i);
    }
  }
  return out;
}

Vector Vector::operator-(const Vector& other) const {
  require(field() == other.field(), ErrorCode::FieldMismatch, "vector field mismatch");
  require(dim() == other.dim(), ErrorCode::DimensionMismatch, "vector dim mismatch");
  Vector out(dim(), field());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field() == Field::Exact) {
      out.exact_at(i) = exact_at(i) - other.exact_at(i);
    } else {
      out.float_at(i) = float_at(i) - other.float_at(i);
    }
  }
  return out;
}

Vector Vector::scaled(const Scalar& factor) const {
  require(factor.field() == field(), ErrorCode::FieldMismatch, "scale factor field mismatch");
  Vector out(dim(), field());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field() == Field::Exact) {
      out.exact_at(i) = exact_at(i) * factor.exact();
    } else {
      out.float_at(i) = float_at(i) * factor.as_double();
    }
  }
  return out;
}

Scalar Vector::dot(const Vector& a, const Vector& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch, "vector field mismatch");
  require(a.dim() == b.dim(), ErrorCode::DimensionMismatch, "vector dim mismatch");
  if (a.field() == Field::Exact) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a.exact_at(i) * b.exact_at(i);
    return Scalar(acc);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a.float_at(i) * b.float_at(i);
  return Scalar(acc);
}

Scalar Vector::norm_sq() const { return dot(*this, *this); }

double Vector::norm() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    double e = entry_as_double(i);
    acc += e * e;
  }
  return std::sqrt(acc);
}

double Vector::max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) m = std::max(m, std::abs(entry_as_double(i)));
  return m;
}

bool Vector::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field() == Field::Exact ? sgn(exact_at(i)) != 0 : float_at(i) != 0.0) return false;
  }
  return true;
}

std::string Vector::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << at(i).to_string();
  }
  out << "]";
  return out.str();
}

// ============================================================================
// Matrix
// ============================================================================

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field) : rows_(rows), cols_(cols) {
  if (field == Field::Exact) {
    data_ = std::vector<Rational>(rows * cols, Rational(0));
  } else {
    data_ = std::vector<double>(rows * cols, 0.0);
  }
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    if (field == Field::Exact) {
      m.exact_at(i, i) = 1;
    } else {
      m.float_at(i, i) = 1.0;
    }
  }
  return m;
}

Matrix Matrix::from_eigen(const Eigen::MatrixXd& m) {
  Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), Field::Float);
  for (std::size_t i = 0; i < out.rows_; ++i) {
    for (std::size_t j = 0; j < out.cols_; ++j) {
      out.float_at(i, j) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  require(!columns.empty(), ErrorCode::TooFewVectors, "no columns given");
  const std::size_t rows = columns[0].dim();
  const Field f = columns[0].field();
  for (const Vector& c : columns) {
    require(c.dim() == rows, ErrorCode::DimensionMismatch, "column length mismatch");
    require(c.field() == f, ErrorCode::FieldMismatch, "column field mismatch");
  }
  Matrix out(rows, columns.size(), f);
  for (std::size_t j = 0; j < columns.size(); ++j) out.set_column(j, columns[j]);
  return out;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  return field() == Field::Exact ? Scalar(exact_at(i, j)) : Scalar(float_at(i, j));
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  require(value.field() == field(), ErrorCode::FieldMismatch, "scalar/matrix field mismatch");
  if (field() == Field::Exact) {
    exact_at(i, j) = value.exact();
  } else {
    float_at(i, j) = value.as_double();
  }
}

const Rational& Matrix::exact_at(std::size_t i, std::size_t j) const {
  require(field() == Field::Exact, ErrorCode::FieldMismatch, "matrix is not exact");
  require(i < rows_ && j < cols_, ErrorCode::SubsetOutOfRange, "matrix index out of range");
  return std::get<std::vector<Rational>>(data_)[index_of(i, j)];
}

Rational& Matrix::exact_at(std::size_t i, std::size_t j) {
  require(field() == Field::Exact, ErrorCode::FieldMismatch, "matrix is not exact");
  require(i < rows_ && j < cols_, ErrorCode::SubsetOutOfRange, "matrix index out of range");
  return std::get<std::vector<Rational>>(data_)[index_of(i, j)];
}

void Matrix::canonicalize_exact() {
  if (field() != Field::Exact) return;
  for (Rational& r : std::get<std::vector<Rational>>(data_)) r.canonicalize();
}

double Matrix::float_at(std::size_t i, std::size_t j) const {
  require(field() == Field::Float, ErrorCode::FieldMismatch, "matrix is not float");
  require(i < rows_ && j < cols_, ErrorCode::SubsetOutOfRange, "matrix index out of range");
  return std::get<std::vector<double>>(data_)[index_of(i, j)];
}

double& Matrix::float_at(std::size_t i, std::size_t j) {
  require(field() == Field::Float, ErrorCode::FieldMismatch, "matrix is not float");
  require(i < rows_ && j < cols_, ErrorCode::SubsetOutOfRange, "matrix index out of range");
  return std::get<std::vector<double>>(data_)[index_of(i, j)];
}

double Matrix::entry_as_double(std::size_t i, std::size_t j) const {
  return field() == Field::Exact ? exact_at(i, j).get_d() : float_at(i, j);
}

Eigen::MatrixXd Matrix::to_eigen() const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry_as_double(i, j);
    }
  }
  return out;
}

Matrix Matrix::to_float() const {
  if (field() == Field::Float) return *this;
  Matrix out(rows_, cols_, Field::Float);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.float_at(i, j) = entry_as_double(i, j);
  }
  return out;
}

Matrix Matrix::to_exact() const {
  if (field() == Field::Exact) return *this;
  Matrix out(rows_, cols_, Field::Exact);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.exact_at(i, j) = rational_from_double(float_at(i, j));
  }
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(j, i) = exact_at(i, j);
      } else {
        out.float_at(j, i) = float_at(i, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(field() == other.field(), ErrorCode::FieldMismatch, "matrix field mismatch");
  require(cols_ == other.rows_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, other.cols_, field());
  if (field() == Field::Exact) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& aik = exact_at(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          out.exact_at(i, j) += aik * other.exact_at(k, j);
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const double aik = float_at(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          out.float_at(i, j) += aik * other.float_at(k, j);
        }
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& x) const {
  require(field() == x.field(), ErrorCode::FieldMismatch, "matrix/vector field mismatch");
  require(cols_ == x.dim(), ErrorCode::DimensionMismatch, "matrix/vector shape mismatch");
  Vector out(rows_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    if (field() == Field::Exact) {
      Rational acc(0);
      for (std::size_t j = 0; j < cols_; ++j) acc += exact_at(i, j) * x.exact_at(j);
      out.exact_at(i) = acc;
    } else {
      double acc = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) acc += float_at(i, j) * x.float_at(j);
      out.float_at(i) = acc;
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require(field() == other.field(), ErrorCode::FieldMismatch, "matrix field mismatch");
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::DimensionMismatch,
          "matrix shape mismatch");
  Matrix out(rows_, cols_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(i, j) = exact_at(i, j) + other.exact_at(i, j);
      } else {
        out.float_at(i, j) = float_at(i, j) + other.float_at(i, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require(field() == other.field(), ErrorCode::FieldMismatch, "matrix field mismatch");
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::DimensionMismatch,
          "matrix shape mismatch");
  Matrix out(rows_, cols_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(i, j) = exact_at(i, j) - other.exact_at(i, j);
      } else {
        out.float_at(i, j) = float_at(i, j) - other.float_at(i, j);
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  require(factor.field() == field(), ErrorCode::FieldMismatch, "scale factor field mismatch");
  Matrix out(rows_, cols_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(i, j) = exact_at(i, j) * factor.exact();
      } else {
        out.float_at(i, j) = float_at(i, j) * factor.as_double();
      }
    }
  }
  return out;
}

Vector Matrix::column(std::size_t j) const {
  require(j < cols_, ErrorCode::SubsetOutOfRange, "column index out of range");
  Vector out(rows_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    if (field() == Field::Exact) {
      out.exact_at(i) = exact_at(i, j);
    } else {
      out.float_at(i) = float_at(i, j);
    }
  }
  return out;
}

Vector Matrix::row(std::size_t i) const {
  require(i < rows_, ErrorCode::SubsetOutOfRange, "row index out of range");
  Vector out(cols_, field());
  for (std::size_t j = 0; j < cols_; ++j) {
    if (field() == Field::Exact) {
      out.exact_at(j) = exact_at(i, j);
    } else {
      out.float_at(j) = float_at(i, j);
    }
  }
  return out;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  require(v.field() == field(), ErrorCode::FieldMismatch, "column field mismatch");
  require(v.dim() == rows_, ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) {
    if (field() == Field::Exact) {
      exact_at(i, j) = v.exact_at(i);
    } else {
      float_at(i, j) = v.float_at(i);
    }
  }
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& indices) const {
  Matrix out(rows_, indices.size(), field());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    require(indices[j] < cols_, ErrorCode::SubsetOutOfRange, "column index out of range");
    out.set_column(j, column(indices[j]));
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const {
  Matrix out(indices.size(), cols_, field());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] < rows_, ErrorCode::SubsetOutOfRange, "row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(i, j) = exact_at(indices[i], j);
      } else {
        out.float_at(i, j) = float_at(indices[i], j);
      }
    }
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& other) const {
  require(field() == other.field(), ErrorCode::FieldMismatch, "matrix field mismatch");
  require(rows_ == other.rows_, ErrorCode::DimensionMismatch, "row count mismatch");
  Matrix out(rows_, cols_ + other.cols_, field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(i, j) = exact_at(i, j);
      } else {
        out.float_at(i, j) = float_at(i, j);
      }
    }
    for (std::size_t j = 0; j < other.cols_; ++j) {
      if (field() == Field::Exact) {
        out.exact_at(i, cols_ + j) = other.exact_at(i, j);
      } else {
        out.float_at(i, cols_ + j) = other.float_at(i, j);
      }
    }
  }
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m = std::max(m, std::abs(entry_as_double(i, j)));
  }
  return m;
}

bool Matrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field() == Field::Exact ? sgn(exact_at(i, j)) != 0 : float_at(i, j) != 0.0) return false;
    }
  }
  return true;
}

bool Matrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  if (field() == Field::Exact) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (exact_at(i, j) != exact_at(j, i)) return false;
      }
    }
    return true;
  }
  const double scale = std::max(1.0, max_abs());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (std::abs(float_at(i, j) - float_at(j, i)) > tol * scale) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << at(i, j).to_string();
    }
  }
  out << "]";
  return out.str();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a.entry_as_double(i, j) - b.entry_as_double(i, j)));
    }
  }
  return m;
}

double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "vector dim mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a.entry_as_double(i) - b.entry_as_double(i)));
  }
  return m;
}

}  // namespace framecert
