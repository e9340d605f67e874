#include "framecert/scalar.hpp"

#include <cctype>
#include <sstream>

namespace framecert {

const char* field_name(Field f) {
  return f == Field::Exact ? "exact" : "float";
}

Field field_from_name(const std::string& name) {
  if (name == "exact") return Field::Exact;
  if (name == "float") return Field::Float;
  fail(ErrorCode::ParseError, "unknown field tag '" + name + "'");
}

Rational parse_rational(const std::string& text) {
  // mpq_set_str accepts whitespace and empty parts too liberally; pre-check
  // the shape so "1/0", "", "1.5" and "2 /3" are all rejected.
  const std::string digits = "0123456789";
  auto valid_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    return s.find_first_not_of(digits, start) == std::string::npos;
  };
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_int(num) || !valid_int(den)) {
    fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
  if (sgn(Rational(mpq_class(q.get_den()))) == 0) {
    fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  q.canonicalize();
  return q;
}

std::size_t rational_bits(const Rational& value) {
  return mpz_sizeinbase(value.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(value.get_den().get_mpz_t(), 2);
}

std::string Scalar::to_string() const {
  if (field() == Field::Exact) return rational_to_string(exact());
  std::ostringstream out;
  out.precision(17);
  out << as_double();
  return out.str();
}

}  // namespace framecert
