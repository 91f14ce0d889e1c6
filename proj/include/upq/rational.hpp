#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace upq {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Exact fraction num/den, always in lowest terms with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(Int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  static Rational frac(Int num, Int den) { return Rational(BigInt(num), BigInt(den)); }

  // Accepts "n", "n/d" (d != 0, any sign); throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }
  // Only valid when the value fits; throws std::overflow_error otherwise.
  Int to_int() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den", with "/den" omitted when den == 1.
  std::string str() const;

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rational abs(const Rational& r);
Rational floor(const Rational& r);
Rational ceil(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

Int gcd(Int a, Int b);
Int gcd(Int a, Int b, Int c);

// Floor/ceil division for integers with b != 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

}  // namespace upq
