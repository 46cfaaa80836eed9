#include <doctest.h>

#include "iw/sl2.hpp"

using namespace iw;
using namespace iw::sl2;

namespace {
FMonomial fm(std::initializer_list<long> modes) {
  FMonomial m;
  for (long s : modes) m.insert(s);
  return m;
}
}  // namespace

TEST_CASE("V(0) generator action worked examples") {
  // e_1 f_0 |0> = h_1 |0> = 0
  CHECK(v0_apply(Gen::E, 1, VPoly::basis(fm({0}))).is_zero());

  // h_2 f_1 |0> = -2 f_3 |0>
  VPoly got = v0_apply(Gen::H, 2, VPoly::basis(fm({1})));
  VPoly want = VPoly::term(fm({3}), Rational(-2));
  CHECK(got == want);

  // e_1 f_0 f_{-1} |0> = -2 f_0 |0>
  got = v0_apply(Gen::E, 1, VPoly::basis(fm({0, -1})));
  want = VPoly::term(fm({0}), Rational(-2));
  CHECK(got == want);

  // f insertion keeps the canonical sorted form
  got = v0_apply(Gen::F, -2, VPoly::basis(fm({1})));
  CHECK(got == VPoly::basis(fm({-2, 1})));
}

TEST_CASE("wilson vectors") {
  CHECK(wilson_vector(1, {5}) == VPoly::basis(fm({5})));

  VPoly v = wilson_vector(2, {0, 2});
  VPoly want = VPoly::basis(fm({0, 3}));
  want -= VPoly::basis(fm({1, 2}));
  CHECK(v == want);

  CHECK(wilson_vector(2, {0, 0}).is_zero());
  CHECK_THROWS_AS((void)wilson_vector(0, {}), std::invalid_argument);
}

TEST_CASE("wilson antisymmetry and degenerate vanishing") {
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      VPoly lhs = wilson_vector(2, {a, b});
      VPoly rhs = wilson_vector(2, {b, a});
      rhs.scale(Rational(-1));
      CHECK(lhs == rhs);
      if (a == b) CHECK(lhs.is_zero());
    }
  }
  // one triple swap
  VPoly lhs = wilson_vector(3, {1, 0, -2});
  VPoly rhs = wilson_vector(3, {0, 1, -2});
  rhs.scale(Rational(-1));
  CHECK(lhs == rhs);
  CHECK(wilson_vector(3, {1, 1, 0}).is_zero());
}

TEST_CASE("wilson vectors are e-singular but not h-singular") {
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      VPoly v = wilson_vector(2, {a, b});
      if (v.is_zero()) continue;
      SingularityResult res = singularity_check(v, 6);
      CHECK(res.e_annihilated);
    }
  }
  // the specific witness: h_1 v_2((0,2)) = -2 f_0 f_4 + 2 f_2 f_2
  VPoly v = wilson_vector(2, {0, 2});
  SingularityResult res = singularity_check(v, 4);
  CHECK(res.e_annihilated);
  CHECK(!res.h_annihilated);
  VPoly h1 = v0_apply(Gen::H, 1, v);
  VPoly want = VPoly::term(fm({0, 4}), Rational(-2));
  want += VPoly::term(fm({2, 2}), Rational(2));
  CHECK(h1 == want);

  // f_0|0> is e-singular; h_j f_0|0> = -2 f_j|0> never vanishes, so the
  // h-side is reported separately and fails by design
  SingularityResult f0 = singularity_check(VPoly::basis(fm({0})), 4);
  CHECK(f0.e_annihilated);
  CHECK(!f0.h_annihilated);
}

TEST_CASE("graded kernels and the wilson span") {
  // r=1: every graded piece is e-singular
  for (long N = -2; N <= 2; ++N) {
    auto ker = singular_space_kernel(1, N, 3);
    CHECK(ker.size() == 1);
    CHECK(ker[0] == VPoly::basis(fm({N})));
  }

  // r=2, N=3, window 4: contains v_2((0,2)) and is contained in the wilson span
  auto ker = singular_space_kernel(2, 3, 4);
  CHECK(!ker.empty());
  CHECK(in_span(wilson_vector(2, {0, 2}), ker));
  std::vector<VPoly> wilsons;
  for (long a = -5; a <= 5; ++a) {
    VPoly w = wilson_vector(2, {a, 3 - 1 - a});
    if (!w.is_zero()) wilsons.push_back(w);
  }
  for (const auto& k : ker) CHECK(in_span(k, wilsons));

  // boundary-unsafe windows yield no spurious vectors for r=2 across grades
  for (long N = -3; N <= 3; ++N) {
    for (int W = 2; W <= 4; ++W) {
      std::vector<VPoly> wil;
      for (long a = -2 * W; a <= 2 * W; ++a) {
        VPoly w = wilson_vector(2, {a, N - 1 - a});
        if (!w.is_zero()) wil.push_back(w);
      }
      for (const auto& k : singular_space_kernel(2, N, W)) CHECK(in_span(k, wil));
    }
  }
}

TEST_CASE("first free field worked examples") {
  Realization ff = Realization::first();
  // lowering modes multiply: the space is free over them
  FockPoly x3 = FockPoly::variable(VarId::x(1, 1, 3));
  FockPoly f3x3 = sl2_apply(ff, Gen::F, 3, x3);
  Monomial sq;
  sq.mul_var(VarId::x(1, 1, 3), 2);
  CHECK(f3x3 == FockPoly::term(sq, Rational(1)));

  FockPoly v = FockPoly::variable(VarId::x(1, 1, 1));
  v.mul_var(VarId::x(1, 1, -1));
  FockPoly got = sl2_apply(ff, Gen::E, 0, v);
  FockPoly want = FockPoly::variable(VarId::x(1, 1, 0));
  want.scale(Rational(-2));
  CHECK(got == want);
}

TEST_CASE("first free field matches the quotient model") {
  // dictionary: f_{s_1}...f_{s_k}|0> <-> x_{s_1}...x_{s_k}
  Realization ff = Realization::first();
  auto to_poly = [](const VPoly& v) {
    FockPoly out;
    for (const auto& [m, c] : v.terms()) {
      Monomial mono;
      for (long s : m.modes) mono.mul_var(VarId::x(1, 1, static_cast<int>(s)));
      out.add_term(mono, c);
    }
    return out;
  };
  std::vector<FMonomial> basis;
  for (long a = -2; a <= 2; ++a) {
    FMonomial m1;
    m1.insert(a);
    basis.push_back(m1);
    for (long b = a; b <= 2; ++b) {
      FMonomial m2 = m1;
      m2.insert(b);
      basis.push_back(m2);
      for (long c = b; c <= 2; ++c) {
        FMonomial m3 = m2;
        m3.insert(c);
        basis.push_back(m3);
      }
    }
  }
  for (const auto& b : basis) {
    for (long mode = -3; mode <= 3; ++mode) {
      for (Gen g : {Gen::E, Gen::H, Gen::F}) {
        CHECK(to_poly(v0_apply(g, mode, VPoly::basis(b))) ==
              sl2_apply(ff, g, mode, to_poly(VPoly::basis(b))));
      }
    }
  }
}

TEST_CASE("jakobsen-kac vacuum eigenvalue is -lambda_0") {
  Realization jk = Realization::jakobsen_kac({{0, Rational(5)}});
  FockPoly got = sl2_apply(jk, Gen::H, 0, FockPoly::vacuum());
  FockPoly want = FockPoly::vacuum();
  want.scale(Rational(-5));
  CHECK(got == want);
}

TEST_CASE("bernard-felder worked examples") {
  Rational K(2), J(1);
  Realization bf = Realization::bernard_felder(K, J);
  const FockPoly vac = FockPoly::vacuum();
  CHECK(sl2_apply(bf, Gen::E, 1, vac).is_zero());
  FockPoly h0 = sl2_apply(bf, Gen::H, 0, vac);
  FockPoly want = vac;
  want.scale(J);
  CHECK(h0 == want);
  // [e_n, f_{-n}] vacuum = (J + nK) vacuum
  for (long n = -2; n <= 2; ++n) {
    FockPoly lhs = sl2_apply(bf, Gen::E, n, sl2_apply(bf, Gen::F, -n, vac));
    lhs -= sl2_apply(bf, Gen::F, -n, sl2_apply(bf, Gen::E, n, vac));
    want = vac;
    want.scale(J + Rational(n) * K);
    CHECK(lhs == want);
  }
}

TEST_CASE("relation suites for all four realizations") {
  auto xgrid = sl2_monomial_grid(2, 2, false);
  auto xygrid = sl2_monomial_grid(2, 2, true);
  CHECK(sl2_relation_check(Realization::first(), 2, xgrid).all_ok());
  CHECK(sl2_relation_check(
            Realization::jakobsen_kac({{0, Rational(5)}, {1, Rational(-1, 2)}, {-2, Rational(3)}}),
            2, xgrid)
            .all_ok());
  CHECK(sl2_relation_check(Realization::bernard_felder(Rational(2), Rational(1)), 2, xygrid)
            .all_ok());
  CHECK(sl2_relation_check(Realization::second(Rational(7, 3)), 2, xygrid).all_ok());
  // degenerate central values as well
  CHECK(sl2_relation_check(Realization::second(Rational(-2)), 2, xygrid).all_ok());
  CHECK(sl2_relation_check(Realization::bernard_felder(Rational(0), Rational(1)), 2, xygrid)
            .all_ok());
}

TEST_CASE("second free field agrees with the rank-one engine") {
  auto grid = sl2_monomial_grid(2, 2, true);
  CHECK(second_vs_engine_check(Rational(7, 3), 2, grid).all_ok());
  CHECK(second_vs_engine_check(Rational(-2), 2, grid).all_ok());  // level zero
}

TEST_CASE("slack does not change realization values") {
  auto grid = sl2_monomial_grid(2, 2, true);
  Realization real = Realization::second(Rational(5, 2));
  for (const auto& mono : grid) {
    FockPoly v = FockPoly::term(mono, Rational(1));
    for (long m = -2; m <= 2; ++m) {
      for (Gen g : {Gen::E, Gen::H, Gen::F}) {
        CHECK(sl2_apply(real, g, m, v, Sl2EvalOpts{0}) ==
              sl2_apply(real, g, m, v, Sl2EvalOpts{5}));
      }
    }
  }
}
