#ifndef IW_BIGINT_HPP
#define IW_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iw {

/*
 * Arbitrary-precision signed integer, sign-magnitude with 64-bit limbs
 * (little endian).  Zero is the empty magnitude with neg == false.
 *
 * Only what the rational layer needs: ring arithmetic, truncated divmod,
 * gcd, decimal I/O.  Division runs schoolbook long division on 32-bit
 * half-limbs; everything here stays far from the performance-critical
 * path, which is served by the int64 fast lane in Rational.
 */
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);  // throws std::invalid_argument

  bool is_zero() const { return mag_.empty(); }
  int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }
  bool is_negative() const { return neg_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated toward zero, so (a/b)*b + a%b == a and a%b has the sign of a.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // >= 0

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  bool fits_int64() const;
  long long to_int64() const;  // requires fits_int64()

  std::string to_string() const;

 private:
  bool neg_ = false;
  std::vector<std::uint64_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  static void divmod_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                         std::vector<std::uint64_t>& q, std::vector<std::uint64_t>& r);
};

}  // namespace iw

#endif
