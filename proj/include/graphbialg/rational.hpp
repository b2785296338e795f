#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphbialg {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Zero is sign 0 with an empty limb vector, so value-initialized entries of
// large matrices cost no allocation.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool fits_longlong() const;
  long long to_longlong() const;

  BigInt& negate();
  BigInt abs() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  BigInt operator-() const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  // Truncated division: quotient rounds toward zero, remainder keeps the
  // sign of the dividend. Throws std::domain_error on division by zero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  static BigInt gcd(const BigInt& a, const BigInt& b);

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limbs

  void trim();
  static int mag_cmp(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mag_add(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  // requires a >= b
  static std::vector<std::uint32_t> mag_sub(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mag_mul(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

// Exact rational number. Always kept in lowest terms with positive
// denominator; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);
  Rational(BigInt n, BigInt d);

  // Accepts "p" or "p/q" with an optional leading '-' on p only.
  // Throws std::invalid_argument on malformed input or q == 0.
  static Rational from_string(std::string_view s);
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  int sign() const { return num_.sign(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;
  Rational inverse() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

 private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

}  // namespace graphbialg
