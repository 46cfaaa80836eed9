#include "iw/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "iw/util.hpp"

namespace iw {

namespace {

std::string poly_witness(const FockPoly& p) {
  std::string s = format_poly(p);
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

}  // namespace

std::optional<BracketExpectation> expected_bracket(const CurrentLabel& x, const CurrentLabel& y,
                                                   const Params& p) {
  BracketExpectation out;
  const long m = x.m, q = y.m;
  auto ck = [&](CurrentKind a, CurrentKind b) {
    return x.kind == a && y.kind == b;
  };
  if (x.kind == CurrentKind::C || y.kind == CurrentKind::C) return out;  // central
  if (ck(CurrentKind::H, CurrentKind::H)) {
    if (m + q == 0) out.central = Rational(m) * Rational(cartan(x.i, y.i));
    return out;
  }
  if (ck(CurrentKind::H, CurrentKind::E)) {
    out.currents.emplace_back(CurrentLabel::e(y.i, m + q), Rational(cartan(x.i, y.i)));
    return out;
  }
  if (ck(CurrentKind::H, CurrentKind::F)) {
    out.currents.emplace_back(CurrentLabel::f(y.i, m + q), Rational(-cartan(x.i, y.i)));
    return out;
  }
  if (ck(CurrentKind::E, CurrentKind::F)) {
    if (x.i == y.i) {
      out.currents.emplace_back(CurrentLabel::h(x.i, m + q), Rational(1));
      if (m + q == 0) out.central = Rational(m);
    }
    return out;
  }
  if ((ck(CurrentKind::E, CurrentKind::E) || ck(CurrentKind::F, CurrentKind::F))) {
    if (cartan(x.i, y.i) == -1) return std::nullopt;  // governed by the Engel relation
    return out;                                       // zero bracket
  }
  // remaining kinds by antisymmetry of the table above
  auto flipped = expected_bracket(y, x, p);
  if (!flipped) return std::nullopt;
  BracketExpectation neg;
  for (auto& [lab, c] : flipped->currents) neg.currents.emplace_back(lab, -c);
  neg.central = -flipped->central;
  return neg;
}

std::vector<Monomial> monomial_grid(const Params& p, int max_degree, int mode_bound) {
  std::vector<VarId> vars;
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i; j <= p.n; ++j) {
      for (int m = -mode_bound; m <= mode_bound; ++m) vars.push_back(VarId::x(i, j, m));
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    for (int m = 1; m <= mode_bound; ++m) vars.push_back(VarId::y(i, m));
  }
  std::vector<Monomial> grid;
  Monomial cur;
  // multisets of variables, smallest start index first
  auto rec = [&](auto&& self, std::size_t start, int degree_left) -> void {
    grid.push_back(cur);
    if (degree_left == 0) return;
    for (std::size_t k = start; k < vars.size(); ++k) {
      cur.mul_var(vars[k]);
      self(self, k, degree_left - 1);
      cur.div_var_once(vars[k]);
    }
  };
  rec(rec, 0, max_degree);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

// lazy per-vector cache of current applications
class LabelCache {
 public:
  LabelCache(const Engine& eng, const FockPoly& v, int mode_range, const EvalOpts& opts)
      : eng_(eng), v_(v), range_(mode_range), opts_(opts) {
    const std::size_t slots =
        3u * static_cast<std::size_t>(eng.params().n) * (2u * mode_range + 1u);
    polys_.resize(slots);
    ready_.assign(slots, 0);
  }

  const FockPoly& get(const CurrentLabel& label) {
    const std::size_t idx = index(label);
    if (!ready_[idx]) {
      polys_[idx] = eng_.apply(label, v_, opts_);
      ready_[idx] = 1;
    }
    return polys_[idx];
  }

 private:
  std::size_t index(const CurrentLabel& label) const {
    std::size_t kind = label.kind == CurrentKind::E ? 0 : label.kind == CurrentKind::F ? 1 : 2;
    std::size_t row = kind * static_cast<std::size_t>(eng_.params().n) +
                      static_cast<std::size_t>(label.i - 1);
    return row * (2u * range_ + 1u) + static_cast<std::size_t>(label.m + range_);
  }

  const Engine& eng_;
  const FockPoly& v_;
  int range_;
  EvalOpts opts_;
  std::vector<FockPoly> polys_;
  std::vector<char> ready_;
};

struct PairSpec {
  CurrentLabel x, y;
  BracketExpectation expect;
  std::string id;
};

struct Failure {
  std::size_t case_idx;
  std::size_t vec_idx;
  std::string witness;
};

// vector-major batched commutator runner; case order is the pair order
std::vector<CheckCase> run_pair_block(const Engine& eng, const std::vector<PairSpec>& pairs,
                                      const std::vector<Monomial>& grid, const EvalOpts& opts) {
  const int range = 2 * [&] {
    long w = 0;
    for (const auto& ps : pairs) w = std::max({w, std::labs(ps.x.m), std::labs(ps.y.m)});
    return static_cast<int>(w);
  }();
  std::vector<std::vector<Failure>> per_vec(grid.size());
  parallel_for(grid.size(), [&](std::size_t vi) {
    const FockPoly v = FockPoly::term(grid[vi], Rational(1));
    LabelCache cache(eng, v, range, opts);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const PairSpec& ps = pairs[k];
      FockPoly lhs = eng.apply(ps.x, cache.get(ps.y), opts);
      lhs -= eng.apply(ps.y, cache.get(ps.x), opts);
      FockPoly rhs;
      for (const auto& [label, coeff] : ps.expect.currents) {
        FockPoly piece = cache.get(label);
        piece.scale(coeff);
        rhs += piece;
      }
      if (!ps.expect.central.is_zero()) {
        FockPoly piece = v;
        piece.scale(ps.expect.central * eng.level());
        rhs += piece;
      }
      if (lhs != rhs) {
        lhs -= rhs;
        per_vec[vi].push_back(Failure{k, vi, "v=" + grid[vi].to_string() +
                                                 " lhs-rhs=" + poly_witness(lhs)});
      }
    }
  });
  std::vector<CheckCase> cases(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    cases[k] = CheckCase{pairs[k].id, CaseStatus::Pass, ""};
  }
  for (const auto& fs : per_vec) {
    for (const auto& f : fs) {
      if (cases[f.case_idx].status == CaseStatus::Pass) {
        cases[f.case_idx].status = CaseStatus::Fail;
        cases[f.case_idx].witness = f.witness;
      }
    }
  }
  return cases;
}

std::string pair_id(const char* rel, const CurrentLabel& x, const CurrentLabel& y) {
  return std::string(rel) + "[" + x.to_string() + "," + y.to_string() + "]";
}

}  // namespace

Report check_commutator(const Engine& eng, const CurrentLabel& x, const CurrentLabel& y,
                        const BracketExpectation& expect, const std::vector<Monomial>& test_set,
                        const EvalOpts& opts) {
  Report rep;
  rep.suite = "commutator";
  rep.params = eng.params();
  rep.cases = run_pair_block(eng, {PairSpec{x, y, expect, pair_id("", x, y)}}, test_set, opts);
  return rep;
}

FockPoly nested_bracket_apply(const Engine& eng, const std::vector<CurrentLabel>& chain,
                              const FockPoly& v, const EvalOpts& opts) {
  if (chain.empty()) throw std::invalid_argument("nested_bracket_apply: empty chain");
  if (chain.size() == 1) return eng.apply(chain[0], v, opts);
  std::vector<CurrentLabel> rest(chain.begin() + 1, chain.end());
  FockPoly out = nested_bracket_apply(eng, rest, eng.apply(chain[0], v, opts), opts);
  out.negate();
  out += eng.apply(chain[0], nested_bracket_apply(eng, rest, v, opts), opts);
  return out;
}

namespace {
CheckCase engel_case(const Engine& eng, CurrentKind kind, int i, int j, long m1, long m2, long p,
                     const std::vector<Monomial>& test_set, const EvalOpts& opts) {
  const std::vector<CurrentLabel> chain = {
      CurrentLabel{kind, i, m1}, CurrentLabel{kind, i, m2}, CurrentLabel{kind, j, p}};
  std::string id = "R6[" + chain[0].to_string() + ",[" + chain[1].to_string() + "," +
                   chain[2].to_string() + "]]";
  CheckCase c{std::move(id), CaseStatus::Pass, ""};
  for (std::size_t vi = 0; vi < test_set.size(); ++vi) {
    FockPoly v = FockPoly::term(test_set[vi], Rational(1));
    FockPoly got = nested_bracket_apply(eng, chain, v, opts);
    if (!got.is_zero()) {
      c.status = CaseStatus::Fail;
      c.witness = "v=" + test_set[vi].to_string() + " got=" + poly_witness(got);
      break;
    }
  }
  return c;
}
}  // namespace

Report check_serre_engel(const Engine& eng, CurrentKind kind, int i, int j, long m1, long m2,
                         long p, const std::vector<Monomial>& test_set, const EvalOpts& opts) {
  if (cartan(i, j) != -1)
    throw std::invalid_argument("check_serre_engel: (alpha_i|alpha_j) must be -1");
  if (kind != CurrentKind::E && kind != CurrentKind::F)
    throw std::invalid_argument("check_serre_engel: kind must be E or F");
  Report rep;
  rep.suite = "serre-engel";
  rep.params = eng.params();
  rep.cases.push_back(engel_case(eng, kind, i, j, m1, m2, p, test_set, opts));
  return rep;
}

Report check_f_root_bracket(const Engine& eng, int i, int j, long total_mode, int split_window,
                            const std::vector<Monomial>& test_set, const EvalOpts& opts) {
  const Params& p = eng.params();
  if (!(1 <= j && j < i && i <= p.n))
    throw std::invalid_argument("check_f_root_bracket: need 1 <= j < i <= n");

  // closed-form side: a[j,i] + sum_{q=i+1..n} a[j,q] a*[i+1,q] at the total mode
  std::vector<NormalWord> rhs_words;
  rhs_words.push_back(NormalWord{{WordFactor{OscKind::A, j, i}}});
  for (int q = i + 1; q <= p.n; ++q) {
    rhs_words.push_back(
        NormalWord{{WordFactor{OscKind::A, j, q}, WordFactor{OscKind::AStar, i + 1, q}}});
  }
  auto rhs_apply = [&](const FockPoly& v) {
    FockPoly out;
    for (const auto& w : rhs_words) out += apply_normal_word(w, total_mode, v, p, eng.bmatrix(), opts);
    return out;
  };

  // every splitting of the total mode across the chain F_i, F_{i-1}, ..., F_j
  const int len = i - j + 1;
  std::vector<std::vector<long>> splittings;
  std::vector<long> modes(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int pos, long remaining) -> void {
    if (pos + 1 == len) {
      if (std::labs(remaining) <= split_window) {
        modes[static_cast<std::size_t>(pos)] = remaining;
        splittings.push_back(modes);
      }
      return;
    }
    for (long m = -split_window; m <= split_window; ++m) {
      modes[static_cast<std::size_t>(pos)] = m;
      self(self, pos + 1, remaining - m);
    }
  };
  rec(rec, 0, total_mode);

  Report rep;
  rep.suite = "f-root-bracket";
  rep.params = p;
  std::vector<CheckCase> cases(splittings.size());
  parallel_for(splittings.size(), [&](std::size_t si) {
    const auto& ms = splittings[si];
    std::vector<CurrentLabel> chain;
    std::string id = "rootvec[i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                     ",M=" + std::to_string(total_mode) + ",modes=";
    for (int k = 0; k < len; ++k) {
      chain.push_back(CurrentLabel::f(i - k, ms[static_cast<std::size_t>(k)]));
      if (k) id += ",";
      id += std::to_string(ms[static_cast<std::size_t>(k)]);
    }
    id += "]";
    CheckCase c{id, CaseStatus::Pass, ""};
    for (const auto& mono : test_set) {
      FockPoly v = FockPoly::term(mono, Rational(1));
      FockPoly lhs = nested_bracket_apply(eng, chain, v, opts);
      FockPoly rhs = rhs_apply(v);
      if (lhs != rhs) {
        lhs -= rhs;
        c.status = CaseStatus::Fail;
        c.witness = "v=" + mono.to_string() + " lhs-rhs=" + poly_witness(lhs);
        break;
      }
    }
    cases[si] = std::move(c);
  });
  rep.cases = std::move(cases);
  return rep;
}

Report check_highest_weight(const Engine& eng, int mode_window, const EvalOpts& opts) {
  const Params& p = eng.params();
  const FockPoly vac = FockPoly::vacuum();
  Report rep;
  rep.suite = "highest-weight";
  rep.params = p;

  struct Item {
    std::vector<CurrentLabel> chain;  // nested bracket; length 1 = plain label
    std::string id;
  };
  std::vector<Item> items;
  for (int i = 1; i <= p.r; ++i) {
    for (long m = 0; m <= mode_window; ++m)
      items.push_back({{CurrentLabel::f(i, m)}, "vacuum-kill " + CurrentLabel::f(i, m).to_string()});
    for (long m = 1; m <= mode_window; ++m)
      items.push_back({{CurrentLabel::e(i, m)}, "vacuum-kill " + CurrentLabel::e(i, m).to_string()});
  }
  for (int i = p.r + 1; i <= p.n; ++i) {
    for (long m = -mode_window; m <= mode_window; ++m)
      items.push_back({{CurrentLabel::e(i, m)}, "vacuum-kill " + CurrentLabel::e(i, m).to_string()});
  }
  for (int i = 1; i <= p.n; ++i) {
    for (long m = 1; m <= mode_window; ++m)
      items.push_back({{CurrentLabel::h(i, m)}, "vacuum-kill " + CurrentLabel::h(i, m).to_string()});
  }
  // non-simple positive roots reaching past r, via nested E-brackets
  for (int i = 1; i + 1 <= p.n; ++i) {
    if (i + 1 <= p.r) continue;
    for (long m1 = -mode_window; m1 <= mode_window; ++m1) {
      for (long m2 = -mode_window; m2 <= mode_window; ++m2) {
        Item it;
        it.chain = {CurrentLabel::e(i, m1), CurrentLabel::e(i + 1, m2)};
        it.id = "vacuum-kill [" + it.chain[0].to_string() + "," + it.chain[1].to_string() + "]";
        items.push_back(std::move(it));
      }
    }
  }
  for (int i = 1; i + 2 <= p.n; ++i) {
    if (i + 2 <= p.r) continue;
    for (long m1 = -mode_window; m1 <= mode_window; ++m1) {
      for (long m2 = -mode_window; m2 <= mode_window; ++m2) {
        for (long m3 = -mode_window; m3 <= mode_window; ++m3) {
          Item it;
          it.chain = {CurrentLabel::e(i, m1), CurrentLabel::e(i + 1, m2),
                      CurrentLabel::e(i + 2, m3)};
          it.id = "vacuum-kill [" + it.chain[0].to_string() + ",[" + it.chain[1].to_string() +
                  "," + it.chain[2].to_string() + "]]";
          items.push_back(std::move(it));
        }
      }
    }
  }

  std::vector<CheckCase> cases(items.size());
  parallel_for(items.size(), [&](std::size_t k) {
    FockPoly got = nested_bracket_apply(eng, items[k].chain, vac, opts);
    CheckCase c{items[k].id, CaseStatus::Pass, ""};
    if (!got.is_zero()) {
      c.status = CaseStatus::Fail;
      c.witness = "got=" + poly_witness(got);
    }
    cases[k] = std::move(c);
  });
  rep.cases = std::move(cases);

  for (int i = 1; i <= p.n; ++i) {
    FockPoly got = eng.apply(CurrentLabel::h(i, 0), vac, opts);
    FockPoly want = vac;
    want.scale(p.lambda[static_cast<std::size_t>(i) - 1]);
    rep.add("vacuum-eigenvalue H[" + std::to_string(i) + ",0] = lambda_" + std::to_string(i),
            got == want, got == want ? "" : "got=" + poly_witness(got));
  }
  FockPoly gotc = eng.apply(CurrentLabel::c(), vac, opts);
  FockPoly wantc = vac;
  wantc.scale(eng.level());
  rep.add("vacuum-eigenvalue c = gamma2-(r+1)", gotc == wantc,
          gotc == wantc ? "" : "got=" + poly_witness(gotc));
  return rep;
}

Report run_suite(const Params& p, const SuiteConfig& cfg) {
  Engine eng(p);
  Report rep;
  rep.suite = "relations";
  rep.params = p;

  if (cfg.ccr_window > 0) {
    std::vector<FockPoly> polys;
    for (const auto& m : monomial_grid(p, cfg.degree_bound, cfg.var_mode_bound))
      polys.push_back(FockPoly::term(m, Rational(1)));
    rep.append(ccr_check(p, cfg.ccr_window, polys));
  }

  const std::vector<Monomial> grid = monomial_grid(p, cfg.degree_bound, cfg.var_mode_bound);
  const int W = cfg.mode_window;

  // R1-R5 as one batched block
  std::vector<PairSpec> pairs;
  auto add_pair = [&](const char* rel, const CurrentLabel& x, const CurrentLabel& y) {
    auto expect = expected_bracket(x, y, p);
    if (!expect) return;
    pairs.push_back(PairSpec{x, y, std::move(*expect), pair_id(rel, x, y)});
  };
  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= p.n; ++j) {
      for (long m = -W; m <= W; ++m) {
        for (long q = -W; q <= W; ++q) {
          if (i < j || (i == j && m < q)) add_pair("R1", CurrentLabel::h(i, m), CurrentLabel::h(j, q));
          add_pair("R2", CurrentLabel::h(i, m), CurrentLabel::e(j, q));
          add_pair("R3", CurrentLabel::h(i, m), CurrentLabel::f(j, q));
          add_pair("R4", CurrentLabel::e(i, m), CurrentLabel::f(j, q));
          if (cartan(i, j) != -1 && (i < j || (i == j && m < q))) {
            add_pair("R5", CurrentLabel::e(i, m), CurrentLabel::e(j, q));
            add_pair("R5", CurrentLabel::f(i, m), CurrentLabel::f(j, q));
          }
        }
      }
    }
  }
  {
    auto cases = run_pair_block(eng, pairs, grid, cfg.eval);
    rep.cases.insert(rep.cases.end(), cases.begin(), cases.end());
  }

  // R6 Engel blocks
  const std::vector<Monomial> engel_grid =
      monomial_grid(p, cfg.engel_degree, cfg.var_mode_bound);
  const std::vector<Monomial> engel_dense_grid =
      monomial_grid(p, cfg.degree_bound, cfg.engel_dense_var_modes);
  {
    struct EngelSpec {
      CurrentKind kind;
      int i, j;
      long m1, m2, q;
      bool dense;
    };
    std::vector<EngelSpec> specs;
    for (int i = 1; i <= p.n; ++i) {
      for (int j = 1; j <= p.n; ++j) {
        if (cartan(i, j) != -1) continue;
        for (CurrentKind kind : {CurrentKind::E, CurrentKind::F}) {
          for (long m1 = -cfg.engel_mode_window; m1 <= cfg.engel_mode_window; ++m1) {
            for (long m2 = -cfg.engel_mode_window; m2 <= cfg.engel_mode_window; ++m2) {
              for (long q = -cfg.engel_mode_window; q <= cfg.engel_mode_window; ++q) {
                const bool dense = std::labs(m1) <= cfg.engel_dense_mode_cap &&
                                   std::labs(m2) <= cfg.engel_dense_mode_cap &&
                                   std::labs(q) <= cfg.engel_dense_mode_cap;
                specs.push_back(EngelSpec{kind, i, j, m1, m2, q, dense});
              }
            }
          }
        }
      }
    }
    std::vector<CheckCase> cases(specs.size());
    parallel_for(specs.size(), [&](std::size_t k) {
      const EngelSpec& sp = specs[k];
      cases[k] = engel_case(eng, sp.kind, sp.i, sp.j, sp.m1, sp.m2, sp.q,
                            sp.dense ? engel_dense_grid : engel_grid, cfg.eval);
    });
    rep.cases.insert(rep.cases.end(), cases.begin(), cases.end());
  }

  // iterated-F root vectors
  const std::vector<Monomial> root_grid =
      monomial_grid(p, cfg.degree_bound, cfg.root_bracket_window);
  for (int i = 2; i <= p.n; ++i) {
    for (int j = 1; j < i; ++j) {
      for (long M = -cfg.root_bracket_total; M <= cfg.root_bracket_total; ++M) {
        rep.append(check_f_root_bracket(eng, i, j, M, cfg.root_bracket_window, root_grid,
                                        cfg.eval));
      }
    }
  }

  rep.append(check_highest_weight(eng, cfg.highest_weight_window, cfg.eval));

  if (cfg.weight_homogeneity) {
    std::vector<CurrentLabel> labels;
    for (int i = 1; i <= p.n; ++i) {
      for (long m = -W; m <= W; ++m) {
        labels.push_back(CurrentLabel::e(i, m));
        labels.push_back(CurrentLabel::f(i, m));
        labels.push_back(CurrentLabel::h(i, m));
      }
    }
    std::vector<CheckCase> cases(labels.size());
    parallel_for(labels.size(), [&](std::size_t k) {
      CheckCase c{"weight-homogeneous " + labels[k].to_string(), CaseStatus::Pass, ""};
      for (const auto& mono : grid) {
        const Weight expect = weight_of(mono, p) + current_weight(labels[k], p);
        FockPoly out = eng.apply(labels[k], FockPoly::term(mono, Rational(1)), cfg.eval);
        for (const auto& t : out.terms()) {
          if (weight_of(t.mono, p) != expect) {
            c.status = CaseStatus::Fail;
            c.witness = "v=" + mono.to_string() + " term=" + t.mono.to_string();
            break;
          }
        }
        if (c.status == CaseStatus::Fail) break;
      }
      cases[k] = std::move(c);
    });
    rep.cases.insert(rep.cases.end(), cases.begin(), cases.end());
  }

  {
    auto [h, c] = eng.vacuum_eigenvalues();
    rep.add("vacuum-eigenvalues consistent", h == p.lambda && c == p.level());
  }
  return rep;
}

}  // namespace iw
