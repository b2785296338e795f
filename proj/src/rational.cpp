#include "graphbialg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace graphbialg {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  unsigned long long u =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
            : static_cast<unsigned long long>(v);
  while (u != 0) {
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::mag_cmp(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::mag_add(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<std::uint32_t> r(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  std::size_t i = 0;
  for (; i < lo.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(hi[i]) + lo[i] + carry;
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  for (; i < hi.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(hi[i]) + carry;
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[i] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mag_sub(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mag_mul(
    const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i + j]) + ai * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[k]) + carry;
      r[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    mag_ = mag_add(mag_, o.mag_);
    return *this;
  }
  int c = mag_cmp(mag_, o.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = mag_sub(mag_, o.mag_);
  } else {
    mag_ = mag_sub(o.mag_, mag_);
    sign_ = o.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  BigInt neg = o;
  neg.sign_ = -neg.sign_;
  return *this += neg;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mag_mul(a.mag_, b.mag_);
  return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  int c = mag_cmp(a.mag_, b.mag_);
  if (a.sign_ == 0 || c < 0) {
    q = BigInt();
    r = a;
    return;
  }
  BigInt quot, rem;
  if (b.mag_.size() == 1) {
    // single-limb short division
    std::uint64_t d = b.mag_[0];
    quot.mag_.assign(a.mag_.size(), 0);
    std::uint64_t cur = 0;
    for (std::size_t i = a.mag_.size(); i-- > 0;) {
      cur = (cur << 32) | a.mag_[i];
      quot.mag_[i] = static_cast<std::uint32_t>(cur / d);
      cur %= d;
    }
    if (cur != 0) rem.mag_.push_back(static_cast<std::uint32_t>(cur));
  } else {
    // bitwise long division; operand sizes here stay modest
    std::size_t bits = a.mag_.size() * 32;
    quot.mag_.assign(a.mag_.size(), 0);
    std::vector<std::uint32_t> cur;
    for (std::size_t i = bits; i-- > 0;) {
      // cur = cur*2 + bit i of |a|
      std::uint32_t carry = 0;
      for (auto& limb : cur) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
      }
      if (carry) cur.push_back(carry);
      if ((a.mag_[i / 32] >> (i % 32)) & 1u) {
        if (cur.empty())
          cur.push_back(1);
        else
          cur[0] |= 1u;
      }
      if (!cur.empty() && mag_cmp(cur, b.mag_) >= 0) {
        cur = mag_sub(cur, b.mag_);
        quot.mag_[i / 32] |= 1u << (i % 32);
      }
    }
    rem.mag_ = std::move(cur);
  }
  quot.sign_ = 1;
  quot.trim();
  rem.sign_ = rem.mag_.empty() ? 0 : 1;
  rem.trim();
  quot.sign_ = quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
  rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
  q = std::move(quot);
  r = std::move(rem);
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(r);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::negate() {
  sign_ = -sign_;
  return *this;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::mag_cmp(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  // binary gcd on magnitudes
  std::vector<std::uint32_t> x = a.mag_, y = b.mag_;
  auto is_zero = [](const std::vector<std::uint32_t>& v) { return v.empty(); };
  auto shr1 = [](std::vector<std::uint32_t>& v) {
    std::uint32_t carry = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
      std::uint32_t next = v[i] & 1u;
      v[i] = (v[i] >> 1) | (carry << 31);
      carry = next;
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto is_even = [](const std::vector<std::uint32_t>& v) {
    return v.empty() || (v[0] & 1u) == 0;
  };
  if (is_zero(x)) return b.abs();
  if (is_zero(y)) return a.abs();
  unsigned shift = 0;
  while (is_even(x) && is_even(y)) {
    shr1(x);
    shr1(y);
    ++shift;
  }
  while (is_even(x)) shr1(x);
  while (!is_zero(y)) {
    while (is_even(y)) shr1(y);
    if (mag_cmp(x, y) > 0) std::swap(x, y);
    y = mag_sub(y, x);
  }
  BigInt g;
  g.mag_ = std::move(x);
  g.sign_ = 1;
  for (unsigned i = 0; i < shift; ++i) {
    std::uint32_t carry = 0;
    for (auto& limb : g.mag_) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) g.mag_.push_back(carry);
  }
  g.trim();
  return g;
}

bool BigInt::fits_longlong() const {
  if (mag_.size() > 2) return false;
  unsigned long long u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0)
    return u <= static_cast<unsigned long long>(
                    std::numeric_limits<long long>::max());
  return u <= static_cast<unsigned long long>(
                  std::numeric_limits<long long>::max()) +
                  1ull;
}

long long BigInt::to_longlong() const {
  if (!fits_longlong()) throw std::overflow_error("BigInt: value too large");
  unsigned long long u = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (sign_ >= 0) return static_cast<long long>(u);
  return -static_cast<long long>(u - 1) - 1;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  std::uint64_t acc = 0;
  int acc_len = 0;
  auto flush = [&](int len) {
    long long p = 1;
    for (int k = 0; k < len; ++k) p *= 10;
    r *= BigInt(p);
    r += BigInt(static_cast<long long>(acc));
    acc = 0;
    acc_len = 0;
  };
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("BigInt: invalid digit");
    acc = acc * 10 + static_cast<std::uint64_t>(s[i] - '0');
    if (++acc_len == 9) flush(9);
  }
  if (acc_len > 0) flush(acc_len);
  if (neg) r.negate();
  return r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    // short division by 10^9
    std::uint64_t cur = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      cur = (cur << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      cur %= 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + cur % 10));
      cur /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// ---------------------------------------------------------------------------

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.sign() < 0) {
    num_.negate();
    den_.negate();
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ /= g;
    den_ /= g;
  }
}

bool Rational::is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero() || o.is_zero()) return *this = Rational();
  // cross-reduce before multiplying to keep intermediates small
  BigInt g1 = BigInt::gcd(num_, o.den_);
  BigInt g2 = BigInt::gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  if (den_.sign() < 0) {
    num_.negate();
    den_.negate();
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return *this *= o.inverse();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_.negate();
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.sign() < 0) {
    r.num_.negate();
    r.den_.negate();
  }
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num() * b.den() < b.num() * a.den();
}

Rational Rational::from_string(std::string_view s) {
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = s.find('/');
  auto check_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) throw std::invalid_argument("Rational: missing digits");
    std::size_t i = 0;
    if (allow_sign && t[0] == '-') i = 1;
    if (i == t.size()) throw std::invalid_argument("Rational: missing digits");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("Rational: invalid character");
  };
  if (slash == std::string_view::npos) {
    check_int(s, true);
    return Rational(BigInt::from_string(s), BigInt(1));
  }
  std::string_view p = s.substr(0, slash);
  std::string_view q = s.substr(slash + 1);
  check_int(p, true);
  check_int(q, false);
  BigInt den = BigInt::from_string(q);
  if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  return Rational(BigInt::from_string(p), std::move(den));
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace graphbialg
