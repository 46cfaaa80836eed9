#include "iw/bigint.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>

namespace iw {

namespace {
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using Mag = std::vector<u64>;

// magnitude <-> base-2^32 half limbs, little endian
std::vector<u32> to_half(const Mag& a) {
  std::vector<u32> h;
  h.reserve(a.size() * 2);
  for (u64 w : a) {
    h.push_back(static_cast<u32>(w));
    h.push_back(static_cast<u32>(w >> 32));
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

Mag from_half(const std::vector<u32>& h) {
  Mag a((h.size() + 1) / 2, 0);
  for (std::size_t k = 0; k < h.size(); ++k) {
    a[k / 2] |= static_cast<u64>(h[k]) << (32 * (k % 2));
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  neg_ = v < 0;
  // careful with LLONG_MIN
  u64 m = neg_ ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
  mag_.push_back(m);
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag out;
  out.reserve(hi.size() + 1);
  unsigned __int128 carry = 0;
  for (std::size_t k = 0; k < hi.size(); ++k) {
    unsigned __int128 s = carry + hi[k];
    if (k < lo.size()) s += lo[k];
    out.push_back(static_cast<u64>(s));
    carry = s >> 64;
  }
  if (carry) out.push_back(static_cast<u64>(carry));
  return out;
}

Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    unsigned __int128 lhs = a[k];
    unsigned __int128 rhs = (k < b.size() ? b[k] : 0) + static_cast<unsigned __int128>(borrow);
    if (lhs >= rhs) {
      out.push_back(static_cast<u64>(lhs - rhs));
      borrow = 0;
    } else {
      out.push_back(static_cast<u64>((static_cast<unsigned __int128>(1) << 64) + lhs - rhs));
      borrow = 1;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      unsigned __int128 cur =
          static_cast<unsigned __int128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<u64>(cur);
      carry = cur >> 64;
    }
    std::size_t k = i + b.size();
    while (carry) {
      unsigned __int128 cur = carry + out[k];
      out[k] = static_cast<u64>(cur);
      carry = cur >> 64;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

void BigInt::divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  std::vector<u32> u = to_half(a), v = to_half(b);
  if (v.size() == 1) {
    // short division
    std::vector<u32> qr(u.size());
    u64 rem = 0;
    for (std::size_t k = u.size(); k-- > 0;) {
      u64 cur = (rem << 32) | u[k];
      qr[k] = static_cast<u32>(cur / v[0]);
      rem = cur % v[0];
    }
    q = from_half(qr);
    r = rem ? Mag{rem} : Mag{};
    return;
  }
  // Knuth algorithm D on 32-bit digits with 64-bit intermediates.
  int shift = 0;
  while (((v.back() << shift) & 0x80000000u) == 0) ++shift;
  auto shl = [&](const std::vector<u32>& x) {
    std::vector<u32> y(x.size() + 1, 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
      y[k] |= x[k] << shift;
      if (shift) y[k + 1] = x[k] >> (32 - shift);
    }
    while (!y.empty() && y.back() == 0) y.pop_back();
    return y;
  };
  std::vector<u32> un = shl(u), vn = shl(v);
  const std::size_t n = vn.size(), m = un.size() - n + 1;
  un.resize(un.size() + 1, 0);
  std::vector<u32> qd(m, 0);
  for (std::size_t j = m; j-- > 0;) {
    u64 top = (static_cast<u64>(un[j + n]) << 32) | un[j + n - 1];
    u64 qhat = top / vn[n - 1];
    u64 rhat = top % vn[n - 1];
    while (qhat >= (1ull << 32) ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= (1ull << 32)) break;
    }
    // multiply-subtract, possibly one add-back
    std::int64_t borrow = 0;
    u64 carry = 0;
    for (std::size_t k = 0; k < n; ++k) {
      u64 p = qhat * vn[k] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(un[j + k]) -
                       static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += 1ll << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[j + k] = static_cast<u32>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) - static_cast<std::int64_t>(carry) - borrow;
    if (t < 0) {
      t += 1ll << 32;
      // add back
      --qhat;
      u64 c2 = 0;
      for (std::size_t k = 0; k < n; ++k) {
        u64 s = static_cast<u64>(un[j + k]) + vn[k] + c2;
        un[j + k] = static_cast<u32>(s);
        c2 = s >> 32;
      }
      t += static_cast<std::int64_t>(c2);
    }
    un[j + n] = static_cast<u32>(t);
    qd[j] = static_cast<u32>(qhat);
  }
  // remainder = un >> shift, first n digits
  std::vector<u32> rd(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    rd[k] = un[k] >> shift;
    if (shift && k + 1 < un.size()) rd[k] |= un[k + 1] << (32 - shift);
  }
  while (!rd.empty() && rd.back() == 0) rd.pop_back();
  q = from_half(qd);
  r = from_half(rd);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.mag_.empty()) out.neg_ = !out.neg_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.neg_ = false;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.neg_ == b.neg_) {
    out.neg_ = a.neg_;
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return out;
    if (c > 0) {
      out.neg_ = a.neg_;
      out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      out.neg_ = b.neg_;
      out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  out.neg_ = !out.mag_.empty() && (a.neg_ != b.neg_);
  return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  Mag qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
  r.neg_ = !r.mag_.empty() && a.neg_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.neg_ == b.neg_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (a.neg_) c = -c;
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 1) return false;
  if (mag_.empty()) return true;
  if (neg_) return mag_[0] <= 0x8000000000000000ull;
  return mag_[0] <= 0x7fffffffffffffffull;
}

long long BigInt::to_int64() const {
  if (mag_.empty()) return 0;
  return neg_ ? static_cast<long long>(~mag_[0] + 1) : static_cast<long long>(mag_[0]);
}

BigInt BigInt::from_string(std::string_view s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) throw std::invalid_argument("BigInt: empty literal");
  BigInt out;
  const BigInt ten(10);
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("BigInt: bad digit");
    out = out * ten + BigInt(s[pos] - '0');
  }
  if (!out.mag_.empty()) out.neg_ = neg;
  return out;
}

std::string BigInt::to_string() const {
  if (mag_.empty()) return "0";
  std::string out;
  BigInt x = abs();
  const BigInt chunk(1000000000ll);
  std::vector<long long> parts;
  while (!x.is_zero()) {
    BigInt q, r;
    divmod(x, chunk, q, r);
    parts.push_back(r.mag_.empty() ? 0 : static_cast<long long>(r.mag_[0]));
    x = std::move(q);
  }
  out = std::to_string(parts.back());
  for (std::size_t k = parts.size() - 1; k-- > 0;) {
    std::string piece = std::to_string(parts[k]);
    out += std::string(9 - piece.size(), '0') + piece;
  }
  return neg_ ? "-" + out : out;
}

}  // namespace iw
