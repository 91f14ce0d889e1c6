#include "upq/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace upq {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

namespace {

bool parse_int(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? BigInt(-v) : v;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt n, d = 1;
  bool ok = slash == std::string_view::npos
                ? parse_int(text, n)
                : parse_int(text.substr(0, slash), n) && parse_int(text.substr(slash + 1), d);
  if (!ok || d == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  return Rational(std::move(n), std::move(d));
}

Int Rational::to_int() const {
  if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
  if (num_ > std::numeric_limits<Int>::max() || num_ < std::numeric_limits<Int>::min())
    throw std::overflow_error("rational " + str() + " does not fit in 64 bits");
  return num_.convert_to<Int>();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational floor(const Rational& r) {
  BigInt q = r.num() / r.den();  // truncates toward zero
  if (r.sign() < 0 && q * r.den() != r.num()) q -= 1;
  return Rational(q);
}

Rational ceil(const Rational& r) { return -floor(-r); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int gcd(Int a, Int b, Int c) { return std::gcd(std::gcd(a, b), c); }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}  // namespace upq
