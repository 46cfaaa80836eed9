#include <doctest.h>

#include <random>

#include "iw/bigint.hpp"
#include "iw/rational.hpp"

using iw::BigInt;
using iw::Rational;

TEST_CASE("bigint small arithmetic matches int64") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> dist(-1000000000ll, 1000000000ll);
  for (int k = 0; k < 2000; ++k) {
    long long a = dist(rng), b = dist(rng);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      BigInt q, r;
      BigInt::divmod(BigInt(a), BigInt(b), q, r);
      CHECK(q == BigInt(a / b));
      CHECK(r == BigInt(a % b));
    }
    CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
  }
}

TEST_CASE("bigint divmod identity on wide operands") {
  std::mt19937_64 rng(99);
  auto random_big = [&](int limbs) {
    BigInt x(0);
    const BigInt base(1ll << 62);
    for (int k = 0; k < limbs; ++k) {
      x = x * base + BigInt(static_cast<long long>(rng() & 0x3fffffffffffffffull));
    }
    return rng() & 1 ? -x : x;
  };
  for (int k = 0; k < 400; ++k) {
    BigInt a = random_big(1 + static_cast<int>(rng() % 5));
    BigInt b = random_big(1 + static_cast<int>(rng() % 3));
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    BigInt g = BigInt::gcd(a, b);
    if (!a.is_zero()) {
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
    }
  }
}

TEST_CASE("bigint decimal round trip") {
  const char* samples[] = {"0",
                           "-1",
                           "12345678901234567890123456789012345678901234567890",
                           "-340282366920938463463374607431768211456"};
  for (const char* s : samples) {
    CHECK(BigInt::from_string(s).to_string() == s);
  }
  CHECK(BigInt::from_string("0007").to_string() == "7");
}

TEST_CASE("rational reduction and field axioms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational::from_string("-6/4") == Rational(-3, 2));

  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long long> dist(-60, 60);
  auto rnd = [&]() {
    long long d = 0;
    while (d == 0) d = dist(rng);
    return Rational(dist(rng), d);
  };
  for (int k = 0; k < 3000; ++k) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("rational promotes past int64 and demotes back") {
  Rational big = Rational(1ll << 62) * Rational(1ll << 62);  // 2^124
  CHECK(big.to_string() == (BigInt(1ll << 62) * BigInt(1ll << 62)).to_string());
  Rational back = big / Rational(1ll << 62) / Rational(1ll << 62);
  CHECK(back == Rational(1));
  Rational tiny = Rational(1, 3) + Rational(1, 6);
  CHECK(tiny == Rational(1, 2));
  // huge numerator against huge denominator reduces exactly
  Rational q = big / (big * Rational(7));
  CHECK(q == Rational(1, 7));
}

TEST_CASE("rational pow with the 0^0 = 1 convention") {
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
}
