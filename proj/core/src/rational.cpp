#include "kmw/rational.hpp"

#include "kmw/error.hpp"

#include <cctype>

namespace kmw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotInRootSpan: return "NotInRootSpan";
    case ErrorCode::PositiveLevelRequired: return "PositiveLevelRequired";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::Cache: return "Cache";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(body, text));
  }
  BigInt num = parse_integer(body.substr(0, slash), text);
  BigInt den = parse_integer(body.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::Internal, "integer " + value.get_str() + " exceeds 64 bits");
  }
  return value.get_si();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) {
    throw Error(ErrorCode::Internal, "expected an integer, got " + to_string(value));
  }
  return to_int64(value.get_num());
}

Rational floor_div(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_of(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

}  // namespace kmw
