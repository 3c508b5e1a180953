#include "celef/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "celef/error.hpp"

namespace celef {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
  auto valid_digits = [](std::string_view t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!valid_digits(num) || !valid_digits(den)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return negative ? Scalar(-q) : q;
}

bool is_zero(const Coords& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

std::string to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::NotClosed: return "NotClosed";
    case ValidationKind::RankDefect: return "RankDefect";
    case ValidationKind::NotVolume: return "NotVolume";
    case ValidationKind::NonUniqueLeeField: return "NonUniqueLeeField";
    case ValidationKind::NonUniqueReeb: return "NonUniqueReeb";
    case ValidationKind::WrongDimension: return "WrongDimension";
    case ValidationKind::NotProjectable: return "NotProjectable";
  }
  return "Unknown";
}

}  // namespace celef
