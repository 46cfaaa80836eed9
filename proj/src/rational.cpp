#include "iw/rational.hpp"

#include <limits>
#include <stdexcept>

namespace iw {

namespace {
using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

int ctz128(u128 v) {
  const auto lo = static_cast<unsigned long long>(v);
  if (lo) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<unsigned long long>(v >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  for (;;) {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
    if (b == 0) break;
  }
  return a << shift;
}

constexpr i128 kI64Max = std::numeric_limits<long long>::max();

BigInt big_from_u128(u128 v, bool neg) {
  const BigInt two32(1ll << 32);
  BigInt out;
  for (int k = 3; k >= 0; --k) {
    out = out * two32 + BigInt(static_cast<long long>((v >> (32 * k)) & 0xffffffffull));
  }
  return neg ? -out : out;
}
}  // namespace

Rational::Rational(long long n, long long d) { *this = from_i128(n, d); }

Rational::Rational(const BigInt& n, const BigInt& d) { *this = from_big(n, d); }

Rational::Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
  if (o.big_) big_ = std::make_unique<BigPair>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  n_ = o.n_;
  d_ = o.d_;
  big_ = o.big_ ? std::make_unique<BigPair>(*o.big_) : nullptr;
  return *this;
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  if (d == 1 && n >= -kI64Max && n <= kI64Max) {
    Rational out;
    out.n_ = static_cast<long long>(n);
    out.d_ = 1;
    return out;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  bool neg = n < 0;
  u128 un = abs128(n) / g;
  u128 ud = static_cast<u128>(d) / g;
  Rational out;
  if (un <= static_cast<u128>(kI64Max) && ud <= static_cast<u128>(kI64Max)) {
    out.n_ = neg ? -static_cast<long long>(un) : static_cast<long long>(un);
    out.d_ = static_cast<long long>(ud);
  } else {
    out.big_ = std::make_unique<BigPair>(BigPair{big_from_u128(un, neg), big_from_u128(ud, false)});
  }
  return out;
}

Rational Rational::from_big(BigInt n, BigInt d) {
  if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (d.is_negative()) {
    n = -n;
    d = -d;
  }
  if (n.is_zero()) return Rational();
  BigInt g = BigInt::gcd(n, d);
  n = n / g;
  d = d / g;
  Rational out;
  if (n.fits_int64() && d.fits_int64()) {
    out.n_ = n.to_int64();
    out.d_ = d.to_int64();
  } else {
    out.big_ = std::make_unique<BigPair>(BigPair{std::move(n), std::move(d)});
  }
  return out;
}

Rational::BigPair Rational::as_big() const {
  if (big_) return *big_;
  return BigPair{BigInt(n_), BigInt(d_)};
}

int Rational::sign() const {
  if (big_) return big_->num.sign();
  return n_ < 0 ? -1 : n_ > 0 ? 1 : 0;
}

bool Rational::is_integer() const { return big_ ? false : d_ == 1; }

BigInt Rational::numerator() const { return big_ ? big_->num : BigInt(n_); }

BigInt Rational::denominator() const { return big_ ? big_->den : BigInt(d_); }

Rational Rational::operator-() const {
  if (!big_) {
    Rational out;
    out.n_ = -n_;
    out.d_ = d_;
    return out;
  }
  return from_big(-big_->num, big_->den);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      long long n;
      if (!__builtin_add_overflow(a.n_, b.n_, &n)) {
        Rational out;
        out.n_ = n;
        return out;
      }
    }
    i128 n = static_cast<i128>(a.n_) * b.d_ + static_cast<i128>(b.n_) * a.d_;
    i128 d = static_cast<i128>(a.d_) * b.d_;
    return Rational::from_i128(n, d);
  }
  auto x = a.as_big(), y = b.as_big();
  return Rational::from_big(x.num * y.den + y.num * x.den, x.den * y.den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      long long n;
      if (!__builtin_mul_overflow(a.n_, b.n_, &n)) {
        Rational out;
        out.n_ = n;
        return out;
      }
    }
    i128 n = static_cast<i128>(a.n_) * b.n_;
    i128 d = static_cast<i128>(a.d_) * b.d_;
    return Rational::from_i128(n, d);
  }
  auto x = a.as_big(), y = b.as_big();
  return Rational::from_big(x.num * y.num, x.den * y.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    i128 n = static_cast<i128>(a.n_) * b.d_;
    i128 d = static_cast<i128>(a.d_) * b.n_;
    return Rational::from_i128(n, d);
  }
  auto x = a.as_big(), y = b.as_big();
  return Rational::from_big(x.num * y.den, x.den * y.num);
}

Rational Rational::pow(long e) const {
  if (e < 0) throw std::domain_error("Rational: negative exponent");
  Rational base = *this, out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  auto x = a.as_big(), y = b.as_big();
  return x.num == y.num && x.den == y.den;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.n_) * b.d_;
    i128 rhs = static_cast<i128>(b.n_) * a.d_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }
  auto x = a.as_big(), y = b.as_big();
  return x.num * y.den <=> y.num * x.den;
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_big(BigInt::from_string(s), BigInt(1));
  BigInt n = BigInt::from_string(s.substr(0, slash));
  BigInt d = BigInt::from_string(s.substr(slash + 1));
  if (d.sign() <= 0) throw std::invalid_argument("Rational: denominator must be positive");
  return from_big(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
  if (big_) {
    std::string out = big_->num.to_string();
    if (!(big_->den == BigInt(1))) out += "/" + big_->den.to_string();
    return out;
  }
  std::string out = std::to_string(n_);
  if (d_ != 1) out += "/" + std::to_string(d_);
  return out;
}

}  // namespace iw
