#include <doctest.h>

#include <chrono>

#include "iw/currents.hpp"

using namespace iw;

namespace {
Params mk(int n, int r, Rational g2, std::vector<Rational> lam = {}) {
  if (lam.empty()) {
    for (int i = 1; i <= n; ++i) lam.emplace_back(2 * i + 1, 2);
  }
  return Params(n, r, std::move(g2), std::move(lam));
}
}  // namespace

TEST_CASE("current plans transcribe the defining formulas") {
  Params p = mk(2, 1, Rational(9, 4));
  Engine eng(p);

  const CurrentPlan& f1 = eng.plan(CurrentKind::F, 1);
  REQUIRE(f1.terms.size() == 2);
  CHECK(f1.terms[0].word.factors.size() == 1);
  CHECK(f1.terms[1].word.factors.size() == 2);

  const CurrentPlan& h2 = eng.plan(CurrentKind::H, 2);
  // 2:a[2,2]a*[2,2]:, :a[1,2]a*[1,2]:, -:a[1,1]a*[1,1]:, b[2]
  REQUIRE(h2.terms.size() == 4);
  CHECK(h2.terms[0].coeff == Rational(2));
  CHECK(h2.terms[1].coeff == Rational(1));
  CHECK(h2.terms[2].coeff == Rational(-1));
  CHECK(h2.terms[3].word.factors[0].kind == OscKind::B);

  // the da*[i,i] coefficient is -(delta_{i>r}(r+1) + delta_{i<=r}(i+1) - gamma2)
  const CurrentPlan& e1 = eng.plan(CurrentKind::E, 1);
  const PlanTerm& deriv1 = e1.terms.back();
  CHECK(deriv1.z_deriv);
  CHECK(deriv1.coeff == -(Rational(2) - p.gamma2));
  const CurrentPlan& e2 = eng.plan(CurrentKind::E, 2);
  const PlanTerm& deriv2 = e2.terms.back();
  CHECK(deriv2.coeff == -(Rational(2) - p.gamma2));  // i=2 > r=1 -> r+1 = 2
}

TEST_CASE("current action worked examples") {
  const FockPoly vac = FockPoly::vacuum();

  Params p21 = mk(2, 1, Rational(9, 4));
  Engine eng21(p21);

  CHECK(eng21.apply(CurrentLabel::f(1, -1), vac) == FockPoly::variable(VarId::x(1, 1, -1)));
  for (long m = -3; m <= 3; ++m) {
    CHECK(eng21.apply(CurrentLabel::f(2, m), vac) == FockPoly::variable(VarId::x(2, 2, m)));
  }

  // H[2,-1] vacuum = y[2,1] - x[1,1,-1]x[1,1,0]
  FockPoly got = eng21.apply(CurrentLabel::h(2, -1), vac);
  FockPoly want = parse_poly("y[2,1]-x[1,1,-1]*x[1,1,0]", p21);
  CHECK(got == want);

  Params p11 = mk(1, 1, Rational(9, 4), {Rational(3)});
  Engine eng11(p11);
  FockPoly x = FockPoly::variable(VarId::x(1, 1, -1));
  got = eng11.apply(CurrentLabel::h(1, 0), x);
  want = x;
  want.scale(p11.lambda[0] - Rational(2));
  CHECK(got == want);
}

TEST_CASE("vacuum eigenvalues") {
  {
    Params p = mk(1, 1, Rational(4), {Rational(3)});
    auto [h, c] = Engine(p).vacuum_eigenvalues();
    CHECK(h == std::vector<Rational>{Rational(3)});
    CHECK(c == Rational(2));
  }
  {
    Params p = mk(2, 0, Rational(0), {Rational(0), Rational(0)});
    auto [h, c] = Engine(p).vacuum_eigenvalues();
    CHECK(h == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(c == Rational(-1));
  }
  {
    Params p = mk(2, 2, Rational(3), {Rational(1), Rational(1)});
    auto [h, c] = Engine(p).vacuum_eigenvalues();
    CHECK(c == Rational(0));
  }
}

TEST_CASE("central element scales everything by the level") {
  Params p = mk(2, 1, Rational(9, 4));
  Engine eng(p);
  FockPoly v = parse_poly("x[1,2,-2]*y[2,1]-3/2*x[1,1,0]", p);
  FockPoly got = eng.apply(CurrentLabel::c(), v);
  FockPoly want = v;
  want.scale(p.level());
  CHECK(got == want);
}

TEST_CASE("currents are weight homogeneous") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= n; ++r) {
      Params p = mk(n, r, Rational(9, 4));
      Engine eng(p);
      std::vector<Monomial> monos;
      monos.emplace_back();
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          for (int m = -2; m <= 2; ++m) {
            Monomial mm;
            mm.mul_var(VarId::x(i, j, m));
            monos.push_back(mm);
            Monomial m2 = mm;
            m2.mul_var(VarId::y(((i + j) % n) + 1, 1 + (m + 2) % 2));
            monos.push_back(m2);
          }
        }
      }
      for (const auto& mono : monos) {
        Weight base = weight_of(mono, p);
        for (int i = 1; i <= n; ++i) {
          for (long m = -2; m <= 2; ++m) {
            for (CurrentKind kind : {CurrentKind::E, CurrentKind::F, CurrentKind::H}) {
              CurrentLabel label{kind, i, m};
              FockPoly out = eng.apply(label, FockPoly::term(mono, Rational(1)));
              Weight expect = base + current_weight(label, p);
              for (const auto& t : out.terms()) {
                CHECK(weight_of(t.mono, p) == expect);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("H[i,0] acts on homogeneous monomials by lambda_i + (offset|alpha_i)") {
  Params p = mk(3, 2, Rational(9, 4));
  Engine eng(p);
  std::vector<Monomial> monos;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      for (int m = -2; m <= 2; ++m) {
        Monomial mm;
        mm.mul_var(VarId::x(i, j, m));
        monos.push_back(mm);
        Monomial m2 = mm;
        m2.mul_var(VarId::x(1, 1, -1));
        monos.push_back(m2);
      }
    }
  }
  for (const auto& mono : monos) {
    Weight w = weight_of(mono, p);
    for (int i = 1; i <= 3; ++i) {
      Rational eig = p.lambda[static_cast<std::size_t>(i) - 1];
      for (int k = 1; k <= 3; ++k) {
        eig += Rational(w.root_offset[static_cast<std::size_t>(k) - 1] * cartan(i, k));
      }
      FockPoly want = FockPoly::term(mono, eig);
      CHECK(eng.apply(CurrentLabel::h(i, 0), FockPoly::term(mono, Rational(1))) == want);
    }
  }
}

TEST_CASE("application microbenchmark" * doctest::skip(true)) {
  Params p = mk(3, 1, Rational(9, 4));
  Engine eng(p);
  FockPoly v = parse_poly("x[1,2,-2]*x[2,3,1]*y[2,1]", p);
  auto t0 = std::chrono::steady_clock::now();
  int reps = 20000;
  FockPoly acc;
  for (int k = 0; k < reps; ++k) {
    acc = eng.apply(CurrentLabel::e(2, (k % 5) - 2), v);
  }
  auto t1 = std::chrono::steady_clock::now();
  double us = std::chrono::duration<double, std::micro>(t1 - t0).count() / reps;
  MESSAGE("E-current application: " << us << " us");
  CHECK(!acc.is_zero());
}
