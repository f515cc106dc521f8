#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxeter {

// Signed arbitrary-precision integer, base 2^32 magnitude. Supports exactly
// what exact polynomial arithmetic needs: add, subtract, multiply, compare,
// and decimal printing.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v) {  // NOLINT: implicit by design
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    auto mag = static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v);
    if (v < 0) mag += 1;  // avoids INT64_MIN overflow
    mag_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  friend BigInt operator-(BigInt a) {
    a.sign_ = -a.sign_;
    return a;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      const int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt{};
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + (-b);
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = r.mag_[i + j] +
                            std::uint64_t{a.mag_[i]} * b.mag_[j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      std::size_t k = i + b.mag_.size();
      while (carry) {
        std::uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    const int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt pow(const BigInt& base, unsigned e) {
    BigInt r{1}, b = base;
    while (e) {
      if (e & 1u) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  // Throws if the value does not fit; callers use this for desk-scale stats.
  std::int64_t to_int64() const {
    if (mag_.size() > 2) throw std::overflow_error("BigInt::to_int64");
    std::uint64_t m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= std::uint64_t{mag_[1]} << 32;
    if (sign_ >= 0) {
      if (m > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("BigInt::to_int64");
      return static_cast<std::int64_t>(m);
    }
    if (m > static_cast<std::uint64_t>(INT64_MAX) + 1)
      throw std::overflow_error("BigInt::to_int64");
    return -static_cast<std::int64_t>(m - 1) - 1;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> mag = mag_;
    std::string digits;
    while (!mag.empty()) {
      // short division by 10^9
      std::uint64_t rem = 0;
      for (std::size_t i = mag.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | mag[i];
        mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!mag.empty() && mag.back() == 0) mag.pop_back();
      std::string chunk = std::to_string(rem);
      if (!mag.empty())
        chunk = std::string(9 - chunk.size(), '0') + chunk;
      digits = chunk + digits;
    }
    return (sign_ < 0 ? "-" : "") + digits;
  }

 private:
  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = r[i] + carry + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (!carry && i >= small.size()) break;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a,
      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      borrow = 0;
      if (cur < 0) {
        cur += std::int64_t{1} << 32;
        borrow = 1;
      }
      r[i] = static_cast<std::uint32_t>(cur);
      if (!borrow && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  int sign_ = 0;
  std::vector<std::uint32_t> mag_;
};

// Exact rational over int64; reduced, positive denominator. Desk-scale values
// only (averages and irregularity ratios).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational&) const = default;

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace coxeter
