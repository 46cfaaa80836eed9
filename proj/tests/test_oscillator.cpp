#include <doctest.h>

#include <random>

#include "iw/oscillator.hpp"

using namespace iw;

namespace {
Params mk(int n, int r, Rational g2) {
  std::vector<Rational> lam;
  for (int i = 1; i <= n; ++i) lam.emplace_back(2 * i + 1, 2);  // generic-ish
  return Params(n, r, std::move(g2), std::move(lam));
}
}  // namespace

TEST_CASE("B matrix worked examples") {
  // n=2, r=1, gamma2=0 -> [[0,0],[0,-3]]
  BMatrix B = build_b_matrix(mk(2, 1, Rational(0)));
  CHECK(B.at(1, 1) == Rational(0));
  CHECK(B.at(1, 2) == Rational(0));
  CHECK(B.at(2, 1) == Rational(0));
  CHECK(B.at(2, 2) == Rational(-3));

  // n=1, r=1 -> [[2 g]]
  Rational g(7, 3);
  B = build_b_matrix(mk(1, 1, g));
  CHECK(B.at(1, 1) == Rational(2) * g);

  // n=2, r=1 -> [[2g, -g], [-g, 2g-3]]
  B = build_b_matrix(mk(2, 1, g));
  CHECK(B.at(1, 1) == Rational(2) * g);
  CHECK(B.at(1, 2) == -g);
  CHECK(B.at(2, 1) == -g);
  CHECK(B.at(2, 2) == Rational(2) * g - Rational(3));
}

TEST_CASE("determinant closed form vs elimination") {
  auto [c0, e0] = det_b(mk(2, 1, Rational(0)));
  CHECK(c0 == Rational(0));
  CHECK(e0 == Rational(0));

  Rational g(5, 2);
  auto [c1, e1] = det_b(mk(1, 0, g));
  CHECK(c1 == Rational(2) * (g - Rational(1)));
  CHECK(e1 == c1);

  auto [c2, e2] = det_b(mk(2, 1, Rational(5)));
  CHECK(c2 == Rational(45));
  CHECK(e2 == Rational(45));

  // sweep: all n <= 5, 0 <= r <= n, assorted rational gamma2 including the
  // two degeneracy points; closed == eliminated and eliminated == 0 iff
  // gamma2 in {0, r+1}
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 12);
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      std::vector<Rational> gs = {Rational(0), Rational(r + 1)};
      for (int k = 0; k < 20; ++k) gs.emplace_back(num(rng), den(rng));
      for (const auto& g2 : gs) {
        auto [closed, elim] = det_b(mk(n, r, g2));
        CHECK(closed == elim);
        // gamma2 = 0 only degenerates the gamma2^r factor when r >= 1, and
        // gamma2 = r+1 only the (gamma2-r-1)^{n-r} factor when r < n
        const bool degenerate =
            (g2.is_zero() && r >= 1) || (g2 == Rational(r + 1) && r < n);
        CHECK(elim.is_zero() == degenerate);
      }
    }
  }
}

TEST_CASE("oscillator action worked examples") {
  const FockPoly vac = FockPoly::vacuum();

  Params p21 = mk(2, 1, Rational(9, 4));
  CHECK(apply_oscillator(OscLabel::a(1, 1, 0), vac, p21).is_zero());
  CHECK(apply_oscillator(OscLabel::a(1, 2, 5), vac, p21) ==
        FockPoly::variable(VarId::x(1, 2, 5)));

  Rational g(7, 5);
  Params p11 = mk(1, 1, g);
  FockPoly y12 = FockPoly::variable(VarId::y(1, 2));
  FockPoly got = apply_oscillator(OscLabel::b(1, 2), y12, p11);
  FockPoly want = vac;
  want.scale(Rational(4) * g);  // 2 * B_11 = 2 * 2g
  CHECK(got == want);

  // b[i,0] acts by lambda_i
  got = apply_oscillator(OscLabel::b(1, 0), y12, p11);
  want = y12;
  want.scale(p11.lambda[0]);
  CHECK(got == want);
}

TEST_CASE("normal word worked examples") {
  const FockPoly vac = FockPoly::vacuum();
  Params p11 = mk(1, 1, Rational(9, 4));
  BMatrix B11 = build_b_matrix(p11);
  NormalWord aa{{WordFactor{OscKind::A, 1, 1}, WordFactor{OscKind::AStar, 1, 1}}};

  FockPoly x = FockPoly::variable(VarId::x(1, 1, -1));
  FockPoly got = apply_normal_word(aa, 0, x, p11, B11);
  FockPoly want = x;
  want.negate();
  CHECK(got == want);

  got = apply_normal_word(aa, -1, vac, p11, B11);
  Monomial m;
  m.mul_var(VarId::x(1, 1, -1));
  m.mul_var(VarId::x(1, 1, 0));
  CHECK(got == FockPoly::term(m, Rational(1)));

  Params p21 = mk(2, 1, Rational(9, 4));
  BMatrix B21 = build_b_matrix(p21);
  NormalWord a22{{WordFactor{OscKind::A, 2, 2}, WordFactor{OscKind::AStar, 2, 2}}};
  CHECK(apply_normal_word(a22, -1, vac, p21, B21).is_zero());
}

TEST_CASE("widening the active range never changes a word's value") {
  Params p = mk(2, 1, Rational(9, 4));
  BMatrix B = build_b_matrix(p);
  std::vector<NormalWord> words = {
      NormalWord{{WordFactor{OscKind::A, 1, 1}}},
      NormalWord{{WordFactor{OscKind::A, 1, 2}, WordFactor{OscKind::AStar, 2, 2}}},
      NormalWord{{WordFactor{OscKind::AStar, 1, 1}, WordFactor{OscKind::A, 1, 1},
                  WordFactor{OscKind::AStar, 1, 1}}},
      NormalWord{{WordFactor{OscKind::AStar, 2, 2}, WordFactor{OscKind::B, 2, 0}}},
      NormalWord{{WordFactor{OscKind::B, 1, 0}}},
  };
  FockPoly v = parse_poly("x[1,1,-2]*x[2,2,1]-3*y[2,2]*x[1,2,0]+y[1,1]^2", p);
  for (const auto& w : words) {
    for (long mode = -3; mode <= 3; ++mode) {
      FockPoly base = apply_normal_word(w, mode, v, p, B, EvalOpts{0});
      CHECK(base == apply_normal_word(w, mode, v, p, B, EvalOpts{5}));
    }
  }
}

TEST_CASE("ccr samples") {
  const FockPoly vac = FockPoly::vacuum();
  Params p11 = mk(1, 1, Rational(7, 2));
  BMatrix B11 = build_b_matrix(p11);

  // [a[1,1,2], a*[1,1,-2]] = 1 on the vacuum
  FockPoly lhs =
      apply_oscillator(OscLabel::a(1, 1, 2),
                       apply_oscillator(OscLabel::a_star(1, 1, -2), vac, p11, B11), p11, B11) -
      apply_oscillator(OscLabel::a_star(1, 1, -2),
                       apply_oscillator(OscLabel::a(1, 1, 2), vac, p11, B11), p11, B11);
  CHECK(lhs == vac);

  // [b[1,1], b[1,-1]] = B_11 = 2 gamma2
  lhs = apply_oscillator(OscLabel::b(1, 1),
                         apply_oscillator(OscLabel::b(1, -1), vac, p11, B11), p11, B11) -
        apply_oscillator(OscLabel::b(1, -1),
                         apply_oscillator(OscLabel::b(1, 1), vac, p11, B11), p11, B11);
  FockPoly want = vac;
  want.scale(Rational(2) * p11.gamma2);
  CHECK(lhs == want);

  // delta_ik delta_jl kills mixed pairs
  Params p21 = mk(2, 1, Rational(9, 4));
  BMatrix B21 = build_b_matrix(p21);
  FockPoly v = parse_poly("x[1,2,-2]*y[1,1]", p21);
  lhs = apply_oscillator(OscLabel::a(1, 1, 2),
                         apply_oscillator(OscLabel::a_star(1, 2, -2), v, p21, B21), p21, B21) -
        apply_oscillator(OscLabel::a_star(1, 2, -2),
                         apply_oscillator(OscLabel::a(1, 1, 2), v, p21, B21), p21, B21);
  CHECK(lhs.is_zero());
}

TEST_CASE("ccr_check sweeps clean at small scale") {
  std::vector<FockPoly> grid = {FockPoly::vacuum()};
  Params p = mk(2, 1, Rational(9, 4));
  for (int i = 1; i <= 2; ++i) {
    for (int j = i; j <= 2; ++j) {
      for (int m = -2; m <= 2; ++m) grid.push_back(FockPoly::variable(VarId::x(i, j, m)));
    }
  }
  grid.push_back(FockPoly::variable(VarId::y(1, 1)));
  grid.push_back(FockPoly::variable(VarId::y(2, 2)));
  Report rep = ccr_check(p, 2, grid);
  CHECK(rep.failed() == 0);
  CHECK(rep.passed() > 0);
}
