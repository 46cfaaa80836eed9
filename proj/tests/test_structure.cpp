#include <doctest.h>

#include "iw/structure.hpp"

using namespace iw;

namespace {
Params mk(int n, int r, Rational g2 = Rational(9, 4), std::vector<Rational> lam = {}) {
  if (lam.empty()) {
    for (int i = 1; i <= n; ++i) lam.emplace_back(2 * i + 1, 2);
  }
  return Params(n, r, std::move(g2), std::move(lam));
}

Weight w_of(const Params& p, std::vector<int> offs, long d) {
  Weight w(p.n);
  w.root_offset = std::move(offs);
  w.delta_deg = d;
  return w;
}
}  // namespace

TEST_CASE("complement census worked examples") {
  {
    Params p = mk(1, 0);
    WeightCensus c = complement_census(p, 1);
    WeightCensus want;
    want[w_of(p, {-1}, -1)] = 1;
    want[w_of(p, {-1}, 0)] = 1;
    want[w_of(p, {-1}, 1)] = 1;
    want[w_of(p, {0}, -1)] = 1;
    CHECK(c == want);
  }
  {
    // r = 1 puts the +alpha direction at modes <= 0 and -alpha strictly below
    Params p = mk(1, 1);
    WeightCensus c = complement_census(p, 1);
    WeightCensus want;
    want[w_of(p, {1}, 0)] = 1;
    want[w_of(p, {1}, -1)] = 1;
    want[w_of(p, {-1}, -1)] = 1;
    want[w_of(p, {0}, -1)] = 1;
    CHECK(c == want);
  }
  {
    Params p = mk(2, 2);
    WeightCensus c = complement_census(p, 0);
    WeightCensus want;
    want[w_of(p, {1, 0}, 0)] = 1;
    want[w_of(p, {0, 1}, 0)] = 1;
    want[w_of(p, {1, 1}, 0)] = 1;
    CHECK(c == want);
  }
}

TEST_CASE("generator bijection for all small shapes") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 0; r <= n; ++r) {
      Params p = mk(n, r);
      for (int window = 0; window <= 4; ++window) {
        INFO("n=", n, " r=", r, " window=", window);
        CHECK(complement_census(p, window) == fock_variable_census(p, window));
      }
    }
  }
}

TEST_CASE("monomial census is multiplicity-correct") {
  Params p = mk(1, 0);
  WeightCensus gens;
  gens[w_of(p, {-1}, 0)] = 2;  // two generators of equal weight
  WeightCensus mono = monomial_census(gens, 2, 5);
  CHECK(mono[w_of(p, {0}, 0)] == 1);
  CHECK(mono[w_of(p, {-1}, 0)] == 2);
  CHECK(mono[w_of(p, {-2}, 0)] == 3);  // multichoose(2,2)
}

TEST_CASE("character compare passes on the spec'd shapes") {
  CHECK(character_compare(mk(1, 0), 3, 3).all_ok());
  CHECK(character_compare(mk(2, 1), 3, 3).all_ok());
  CHECK(character_compare(mk(3, 2), 2, 2).all_ok());
}

TEST_CASE("generation witness worked examples") {
  Params p = mk(2, 1);
  Engine eng(p);

  // x[2,2,5]: a single F application
  Monomial t1;
  t1.mul_var(VarId::x(2, 2, 5));
  WitnessProgram prog = generation_witness(eng, t1);
  REQUIRE(prog.steps.size() == 1);
  CHECK(prog.steps[0].kind == WitnessStep::Kind::ApplyCurrent);
  CHECK(prog.steps[0].label.kind == CurrentKind::F);
  CHECK(execute_witness(eng, prog) == FockPoly::term(t1, Rational(1)));

  // y[2,1]: H[2,-1] plus one subtraction inside C_1[x]
  Monomial t2;
  t2.mul_var(VarId::y(2, 1));
  prog = generation_witness(eng, t2);
  REQUIRE(prog.steps.size() == 2);
  CHECK(prog.steps[0].kind == WitnessStep::Kind::ApplyCurrent);
  CHECK(prog.steps[1].kind == WitnessStep::Kind::Subtract);
  CHECK(prog.steps[1].subtrahend ==
        parse_poly("-x[1,1,-1]*x[1,1,0]", p));
  CHECK(execute_witness(eng, prog) == FockPoly::term(t2, Rational(1)));

  // x[1,2,-1]: the iterated bracket
  Monomial t3;
  t3.mul_var(VarId::x(1, 2, -1));
  prog = generation_witness(eng, t3);
  REQUIRE(prog.steps.size() == 1);
  CHECK(prog.steps[0].kind == WitnessStep::Kind::ApplyFBracket);
  CHECK(execute_witness(eng, prog) == FockPoly::term(t3, Rational(1)));
}

TEST_CASE("generation check on the spec'd triples") {
  CHECK(generation_check(mk(2, 1), 2, 1).all_ok());
  CHECK(generation_check(mk(2, 0), 2, 2).all_ok());
  CHECK(generation_check(mk(3, 1), 1, 1).all_ok());
}

TEST_CASE("submodule probe") {
  Params p = mk(2, 1);

  // the vacuum lies in W_a already; with no word applications the probe
  // returns it verbatim
  ProbeResult r0 = submodule_probe(FockPoly::vacuum(), p, 1, 2, 0);
  CHECK(r0.found);
  CHECK(r0.vector == FockPoly::vacuum());

  ProbeResult r1 = submodule_probe(FockPoly::vacuum(), p, 1, 2, 1);
  CHECK(r1.found);
  for (const auto& t : r1.vector.terms()) CHECK(is_wa_monomial(t.mono, p));

  // outside W_a: either inconclusive or a genuine W_a vector
  ProbeResult r2 = submodule_probe(FockPoly::variable(VarId::x(2, 2, 0)), p, 1, 3, 2);
  if (r2.found) {
    CHECK(!r2.vector.is_zero());
    for (const auto& t : r2.vector.terms()) CHECK(is_wa_monomial(t.mono, p));
  } else {
    CHECK(r2.report.inconclusive() == 1);
  }

  CHECK_THROWS_AS((void)submodule_probe(FockPoly(), p, 1, 2, 1), std::invalid_argument);
}
