#include "tropos/rational.hpp"

#include <limits>

#include "tropos/error.hpp"

namespace tropos {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? BigInt(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt floor_of(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::InvalidArgument, "integer " + value.get_str() + " out of 64-bit range");
  }
  return static_cast<std::int64_t>(value.get_si());
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) {
    throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + to_string(value));
  }
  return to_int64(BigInt(value.get_num()));
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
  BigInt num;
  BigInt lhs = a.get_num() * b.get_den();
  BigInt rhs = b.get_num() * a.get_den();
  mpz_gcd(num.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
  Rational g(num, BigInt(a.get_den() * b.get_den()));
  g.canonicalize();
  return g;
}

}  // namespace tropos
