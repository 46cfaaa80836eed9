#ifndef IW_RATIONAL_HPP
#define IW_RATIONAL_HPP

#include <compare>
#include <memory>
#include <string>
#include <string_view>

#include "iw/bigint.hpp"

namespace iw {

/*
 * Exact rational number, always reduced, denominator > 0, zero is 0/1.
 *
 * Values that fit stay in a pair of int64 and never touch the heap; results
 * that overflow are promoted to a BigInt pair and demoted back when they
 * shrink.  All arithmetic is exact; there is no floating point anywhere.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {}
  Rational(long long n, long long d);
  Rational(const BigInt& n, const BigInt& d);

  Rational(const Rational& o);
  Rational& operator=(const Rational& o);
  Rational(Rational&&) = default;
  Rational& operator=(Rational&&) = default;

  // "p", "-p", "p/q"
  static Rational from_string(std::string_view s);

  bool is_zero() const { return big_ ? big_->num.is_zero() : n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  int sign() const;
  bool is_integer() const;

  BigInt numerator() const;
  BigInt denominator() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // b != 0
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // exponent >= 0; pow(0) == 1 including for zero base (the 0^0 == 1 convention)
  Rational pow(long e) const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  struct BigPair {
    BigInt num, den;  // reduced, den > 0
  };

  long long n_ = 0, d_ = 1;        // reduced, d_ > 0; authoritative iff !big_
  std::unique_ptr<BigPair> big_;   // authoritative once set

  static Rational from_i128(__int128 n, __int128 d);
  static Rational from_big(BigInt n, BigInt d);
  BigPair as_big() const;
};

}  // namespace iw

#endif
