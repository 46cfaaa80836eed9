#include <doctest.h>

#include "iw/relations.hpp"

using namespace iw;

namespace {
Params mk(int n, int r, Rational g2, std::vector<Rational> lam = {}) {
  if (lam.empty()) {
    for (int i = 1; i <= n; ++i) lam.emplace_back(2 * i + 1, 2);
  }
  return Params(n, r, std::move(g2), std::move(lam));
}
}  // namespace

TEST_CASE("bracket expectation worked examples") {
  // [E[1,1], F[1,-1]] on the vacuum = (lambda_1 + c) vacuum
  Params p = mk(1, 1, Rational(4), {Rational(3)});
  Engine eng(p);
  const FockPoly vac = FockPoly::vacuum();
  auto ex = expected_bracket(CurrentLabel::e(1, 1), CurrentLabel::f(1, -1), p);
  REQUIRE(ex.has_value());
  Report rep = check_commutator(eng, CurrentLabel::e(1, 1), CurrentLabel::f(1, -1), *ex,
                                {Monomial()});
  CHECK(rep.all_ok());
  FockPoly lhs = eng.apply(CurrentLabel::e(1, 1), eng.apply(CurrentLabel::f(1, -1), vac));
  lhs -= eng.apply(CurrentLabel::f(1, -1), eng.apply(CurrentLabel::e(1, 1), vac));
  FockPoly want = vac;
  want.scale(Rational(5));  // lambda_1 + level = 3 + 2
  CHECK(lhs == want);

  // [H[1,2], H[1,-2]] vacuum = 2*2*c vacuum
  lhs = eng.apply(CurrentLabel::h(1, 2), eng.apply(CurrentLabel::h(1, -2), vac));
  lhs -= eng.apply(CurrentLabel::h(1, -2), eng.apply(CurrentLabel::h(1, 2), vac));
  want = vac;
  want.scale(Rational(4) * p.level());
  CHECK(lhs == want);
}

TEST_CASE("adjacent same-kind pairs fall to the Engel relation") {
  Params p = mk(3, 1, Rational(9, 4));
  CHECK(!expected_bracket(CurrentLabel::e(1, 0), CurrentLabel::e(2, 0), p).has_value());
  CHECK(expected_bracket(CurrentLabel::e(1, 0), CurrentLabel::e(3, 0), p).has_value());
  CHECK_THROWS_AS((void)check_serre_engel(Engine(p), CurrentKind::F, 1, 1, 0, 0, 0, {Monomial()}),
                  std::invalid_argument);
}

TEST_CASE("serre-engel worked examples") {
  Params p = mk(2, 1, Rational(9, 4));
  Engine eng(p);
  std::vector<Monomial> vecs = {Monomial()};
  Monomial m;
  m.mul_var(VarId::x(1, 1, -1));
  vecs.push_back(m);
  CHECK(check_serre_engel(eng, CurrentKind::F, 1, 2, 0, 0, 0, vecs).all_ok());
  CHECK(check_serre_engel(eng, CurrentKind::E, 2, 1, 1, -1, 0, vecs).all_ok());
}

TEST_CASE("f-root bracket worked examples") {
  // n=2, (i,j)=(2,1), M=-1 on the vacuum gives x[1,2,-1]
  Params p = mk(2, 1, Rational(9, 4));
  Engine eng(p);
  const FockPoly vac = FockPoly::vacuum();
  FockPoly got = nested_bracket_apply(eng, {CurrentLabel::f(2, 0), CurrentLabel::f(1, -1)}, vac);
  CHECK(got == FockPoly::variable(VarId::x(1, 2, -1)));
  CHECK(check_f_root_bracket(eng, 2, 1, -1, 2, monomial_grid(p, 1, 2)).all_ok());

  // n=3, (i,j)=(2,1), M=0: vacuum image is x[1,2,0] when r < 2
  Params p31 = mk(3, 1, Rational(9, 4));
  Engine eng31(p31);
  got = nested_bracket_apply(eng31, {CurrentLabel::f(2, 0), CurrentLabel::f(1, 0)}, vac);
  CHECK(got == FockPoly::variable(VarId::x(1, 2, 0)));
  Params p32 = mk(3, 2, Rational(9, 4));
  Engine eng32(p32);
  got = nested_bracket_apply(eng32, {CurrentLabel::f(2, 0), CurrentLabel::f(1, 0)}, vac);
  CHECK(got.is_zero());

  // iterated bracket across the full chain, n=3
  CHECK(check_f_root_bracket(eng31, 3, 1, 1, 1, monomial_grid(p31, 1, 1)).all_ok());
}

TEST_CASE("highest weight suite at small scale") {
  for (int n = 1; n <= 2; ++n) {
    for (int r = 0; r <= n; ++r) {
      Params p = mk(n, r, Rational(9, 4));
      Engine eng(p);
      Report rep = check_highest_weight(eng, 3);
      INFO("n=", n, " r=", r);
      CHECK(rep.all_ok());
    }
  }
}

TEST_CASE("vacuum kills the flipped side, not the spec'd-literal side") {
  // E[1,0] does not annihilate the vacuum when lambda_1 != 0, F[1,0] does
  Params p = mk(1, 1, Rational(4), {Rational(3)});
  Engine eng(p);
  const FockPoly vac = FockPoly::vacuum();
  FockPoly e0 = eng.apply(CurrentLabel::e(1, 0), vac);
  FockPoly want = FockPoly::variable(VarId::x(1, 1, 0));
  want.scale(Rational(-3));
  CHECK(e0 == want);
  CHECK(eng.apply(CurrentLabel::f(1, 0), vac).is_zero());
}

TEST_CASE("full suite on the rank-one module") {
  Params p = mk(1, 1, Rational(4), {Rational(3)});
  SuiteConfig cfg;
  cfg.mode_window = 3;
  cfg.degree_bound = 2;
  cfg.ccr_window = 2;
  Report rep = run_suite(p, cfg);
  CHECK(rep.failed() == 0);
  CHECK(rep.passed() > 100);
}

TEST_CASE("full suite on the imaginary case") {
  Params p = mk(2, 0, Rational(1), {Rational(0), Rational(0)});
  SuiteConfig cfg;
  cfg.mode_window = 2;
  cfg.degree_bound = 2;
  cfg.var_mode_bound = 2;
  cfg.engel_mode_window = 2;
  Report rep = run_suite(p, cfg);
  CHECK(rep.failed() == 0);
}

TEST_CASE("full suite at a degenerate parameter") {
  Params p = mk(2, 1, Rational(2));  // gamma2 = r+1: degenerate B
  SuiteConfig cfg;
  cfg.mode_window = 2;
  cfg.degree_bound = 2;
  cfg.var_mode_bound = 2;
  cfg.engel_mode_window = 2;
  Report rep = run_suite(p, cfg);
  CHECK(rep.failed() == 0);
}
