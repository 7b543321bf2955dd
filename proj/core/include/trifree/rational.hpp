#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace trifree {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serialized as "num/den" ("num" alone for integers).
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rat(long num, long den);
  explicit Rat(const BigInt& integer) : value_(integer) {}
  explicit Rat(mpq_class value);

  /// Accepts "n", "-n", "n/d"; throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Rat parse(std::string_view text);

  std::string str() const;
  double to_double() const { return value_.get_d(); }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  const mpq_class& raw() const { return value_; }

  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& other);

  Rat operator-() const;

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class value_;
};

Rat abs(const Rat& r);
Rat midpoint(const Rat& a, const Rat& b);

}  // namespace trifree
