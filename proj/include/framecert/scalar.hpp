#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <variant>

#include "framecert/errors.hpp"

namespace framecert {

/// Arithmetic mode of a value, vector, matrix, or frame.
enum class Field { Exact, Float };

const char* field_name(Field f);
Field field_from_name(const std::string& name);

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "p/q" or "p" (base 10). Raises ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(const std::string& text);

/// Renders in canonical form: "p" when q == 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

/// Exact conversion; every finite double is a rational.
Rational rational_from_double(double x);

/// Total bit length of numerator plus denominator.
std::size_t rational_bits(const Rational& value);

/// One entry of a matrix or vector; a tagged exact-or-float value. Scalars are
/// a boundary type (construction, inspection, serialization); bulk arithmetic
/// runs on whole matrices in a single mode.
class Scalar {
 public:
  Scalar() : value_(0.0) {}
  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(double x) : value_(x) {}
  static Scalar exact_int(long n) { return Scalar(Rational(n)); }

  Field field() const {
    return std::holds_alternative<Rational>(value_) ? Field::Exact : Field::Float;
  }

  const Rational& exact() const {
    if (field() != Field::Exact) fail(ErrorCode::FieldMismatch, "scalar is not exact");
    return std::get<Rational>(value_);
  }

  double as_double() const {
    return field() == Field::Exact ? std::get<Rational>(value_).get_d()
                                   : std::get<double>(value_);
  }

  bool is_zero() const {
    return field() == Field::Exact ? sgn(std::get<Rational>(value_)) == 0
                                   : std::get<double>(value_) == 0.0;
  }

  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

}  // namespace framecert
