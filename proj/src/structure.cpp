#include "iw/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "iw/relations.hpp"
#include "iw/util.hpp"

namespace iw {

std::string census_to_string(const WeightCensus& c) {
  std::string out;
  for (const auto& [w, k] : c) {
    if (!out.empty()) out += " ";
    out += w.to_string() + ":" + std::to_string(k);
  }
  return out.empty() ? "(empty)" : out;
}

namespace {
Weight root_span_weight(const Params& p, int i, int j, int dir, long m) {
  Weight w(p.n);
  for (int k = i; k <= j; ++k) w.root_offset[static_cast<std::size_t>(k) - 1] = dir;
  w.delta_deg = m;
  return w;
}
}  // namespace

WeightCensus complement_census(const Params& p, int mode_window) {
  p.validate();
  WeightCensus out;
  const int W = mode_window;
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i; j <= p.n; ++j) {
      if (j > p.r) {
        for (long m = -W; m <= W; ++m) ++out[root_span_weight(p, i, j, -1, m)];
      } else {
        for (long m = -W; m <= 0; ++m) ++out[root_span_weight(p, i, j, +1, m)];
        for (long m = -W; m < 0; ++m) ++out[root_span_weight(p, i, j, -1, m)];
      }
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    for (long m = -W; m < 0; ++m) ++out[root_span_weight(p, 1, 0, +1, m)];  // Cartan: zero offset
  }
  return out;
}

WeightCensus fock_variable_census(const Params& p, int mode_window) {
  p.validate();
  WeightCensus out;
  const int W = mode_window;
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i; j <= p.n; ++j) {
      for (int m = -W; m <= W; ++m) ++out[weight_of_var(VarId::x(i, j, m), p)];
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    for (int m = 1; m <= W; ++m) ++out[weight_of_var(VarId::y(i, m), p)];
  }
  return out;
}

WeightCensus monomial_census(const WeightCensus& generators, int max_factors, int delta_bound) {
  std::vector<std::pair<Weight, long long>> gens(generators.begin(), generators.end());
  WeightCensus out;
  if (gens.empty()) return out;
  const int n = static_cast<int>(gens[0].first.root_offset.size());
  // states keyed by (factors used, accumulated weight)
  std::map<std::pair<int, Weight>, long long> acc;
  acc[{0, Weight(n)}] = 1;
  for (const auto& [w, count] : gens) {
    std::map<std::pair<int, Weight>, long long> next;
    for (const auto& [state, ways] : acc) {
      long long choose = 1;  // multichoose(count, k) = C(count+k-1, k)
      Weight shifted = state.second;
      for (int k = 0; state.first + k <= max_factors; ++k) {
        if (k > 0) {
          choose = choose * (count + k - 1) / k;
          shifted += w;
        }
        next[{state.first + k, shifted}] += ways * choose;
      }
    }
    acc = std::move(next);
  }
  for (const auto& [state, ways] : acc) {
    if (std::labs(state.second.delta_deg) <= delta_bound) out[state.second] += ways;
  }
  return out;
}

Report character_compare(const Params& p, int mode_window, int delta_bound) {
  Report rep;
  rep.suite = "character-compare";
  rep.params = p;
  WeightCensus lhs = complement_census(p, mode_window);
  WeightCensus rhs = fock_variable_census(p, mode_window);
  rep.add("generator-census equality (window " + std::to_string(mode_window) + ")", lhs == rhs,
          lhs == rhs ? "" : "complement=" + census_to_string(lhs) +
                                " fock=" + census_to_string(rhs));
  WeightCensus ml = monomial_census(lhs, delta_bound, delta_bound);
  WeightCensus mr = monomial_census(rhs, delta_bound, delta_bound);
  rep.add("monomial-census equality (degree <= " + std::to_string(delta_bound) + ")", ml == mr);
  return rep;
}

}  // namespace iw

namespace iw {

std::string WitnessStep::to_string() const {
  switch (kind) {
    case Kind::ApplyCurrent:
      return "apply " + label.to_string();
    case Kind::ApplyFBracket: {
      std::string s = "apply [";
      for (int k = top; k >= bottom; --k) {
        if (k != top) s += ",";
        s += "F" + std::to_string(k);
      }
      return s + "]_" + std::to_string(mode);
    }
    case Kind::Subtract:
      return "subtract " + format_poly(subtrahend);
  }
  return "?";
}

namespace {

std::vector<CurrentLabel> bracket_chain(int top, int bottom, long mode) {
  std::vector<CurrentLabel> chain;
  for (int k = top; k >= bottom; --k) chain.push_back(CurrentLabel::f(k, k == top ? mode : 0));
  return chain;
}

FockPoly apply_step(const Engine& eng, const WitnessStep& step, const FockPoly& state) {
  switch (step.kind) {
    case WitnessStep::Kind::ApplyCurrent:
      return eng.apply(step.label, state);
    case WitnessStep::Kind::ApplyFBracket:
      return nested_bracket_apply(eng, bracket_chain(step.top, step.bottom, step.mode), state);
    case WitnessStep::Kind::Subtract: {
      FockPoly out = state;
      out -= step.subtrahend;
      return out;
    }
  }
  throw std::logic_error("apply_step: bad kind");
}

}  // namespace

FockPoly execute_witness(const Engine& eng, const WitnessProgram& prog) {
  FockPoly state = prog.seed;
  for (const auto& step : prog.steps) state = apply_step(eng, step, state);
  return state;
}

bool is_wa_monomial(const Monomial& m, const Params& p) {
  for (const auto& f : m.factors()) {
    if (f.var.kind == VarKind::X && f.var.j > p.r) return false;
    if (f.var.kind == VarKind::Y && f.var.i > p.r) return false;
  }
  return true;
}

WitnessProgram generation_witness(const Engine& eng, const Monomial& target) {
  const Params& p = eng.params();
  for (const auto& f : target.factors()) f.var.check_bounds(p);

  WitnessProgram prog;
  prog.target = target;

  // seed: the W_a part of the target
  Monomial seed;
  std::vector<std::pair<VarId, int>> y_high;                 // y[i,m], i > r
  std::vector<std::vector<std::pair<VarId, int>>> x_cols(p.n + 1);  // x[.,c,.], c > r
  for (const auto& f : target.factors()) {
    if (f.var.kind == VarKind::Y) {
      if (f.var.i <= p.r) {
        seed.mul_var(f.var, f.exp);
      } else {
        y_high.emplace_back(f.var, f.exp);
      }
    } else {
      if (f.var.j <= p.r) {
        seed.mul_var(f.var, f.exp);
      } else {
        x_cols[f.var.j].emplace_back(f.var, f.exp);
      }
    }
  }
  prog.seed = FockPoly::term(seed, Rational(1));
  FockPoly state = prog.seed;

  auto push_apply = [&](const WitnessStep& step) {
    FockPoly next = apply_step(eng, step, state);
    prog.steps.push_back(step);
    state = std::move(next);
  };

  // y-variables beyond r: H[i,-m] is y[i,m]-multiplication plus a correction
  // supported on C_r[x] (zero for i > r+1), which gets subtracted explicitly
  for (const auto& [var, exp] : y_high) {
    for (int k = 0; k < exp; ++k) {
      FockPoly before = state;
      WitnessStep h;
      h.kind = WitnessStep::Kind::ApplyCurrent;
      h.label = CurrentLabel::h(var.i, -static_cast<long>(var.m));
      push_apply(h);
      FockPoly wanted = before;
      wanted.mul_var(var);
      FockPoly correction = state;
      correction -= wanted;
      if (!correction.is_zero()) {
        for (const auto& t : correction.terms()) {
          for (const auto& f : t.mono.factors()) {
            if (f.var.kind == VarKind::X && f.var.j > p.r)
              throw std::logic_error("generation_witness: correction escapes C_r[x]");
          }
        }
        WitnessStep sub;
        sub.kind = WitnessStep::Kind::Subtract;
        sub.subtrahend = correction;
        push_apply(sub);
      }
    }
  }

  // x-columns beyond r, in increasing column order: the diagonal variable is
  // multiplication by F[c,m] on C_{c-1}[x]-states, off-diagonal rows come
  // from the iterated bracket [F_c, ..., F_i]
  for (int c = p.r + 1; c <= p.n; ++c) {
    std::sort(x_cols[c].begin(), x_cols[c].end());
    for (const auto& [var, exp] : x_cols[c]) {
      for (int k = 0; k < exp; ++k) {
        FockPoly wanted = state;
        wanted.mul_var(var);
        if (var.i == var.j) {
          WitnessStep st;
          st.kind = WitnessStep::Kind::ApplyCurrent;
          st.label = CurrentLabel::f(c, var.m);
          push_apply(st);
        } else {
          WitnessStep st;
          st.kind = WitnessStep::Kind::ApplyFBracket;
          st.top = c;
          st.bottom = var.i;
          st.mode = var.m;
          push_apply(st);
        }
        if (state != wanted)
          throw std::logic_error("generation_witness: step was not pure multiplication");
      }
    }
  }

  if (state != FockPoly::term(target, Rational(1)))
    throw std::logic_error("generation_witness: program does not reproduce the target");
  return prog;
}

WitnessProgram generation_witness(const Monomial& target, const Params& p) {
  Engine eng(p);
  return generation_witness(eng, target);
}

Report generation_check(const Params& p, int mode_window, int degree_bound) {
  Engine eng(p);
  const std::vector<Monomial> targets = monomial_grid(p, degree_bound, mode_window);
  Report rep;
  rep.suite = "generation";
  rep.params = p;
  std::vector<CheckCase> cases(targets.size());
  parallel_for(targets.size(), [&](std::size_t k) {
    CheckCase c{"generate " + targets[k].to_string(), CaseStatus::Pass, ""};
    try {
      WitnessProgram prog = generation_witness(eng, targets[k]);
      FockPoly replay = execute_witness(eng, prog);
      if (replay != FockPoly::term(targets[k], Rational(1))) {
        c.status = CaseStatus::Fail;
        c.witness = "replay mismatch";
      } else {
        c.witness = std::to_string(prog.steps.size()) + " steps";
      }
    } catch (const std::exception& e) {
      c.status = CaseStatus::Fail;
      c.witness = e.what();
    }
    cases[k] = std::move(c);
  });
  rep.cases = std::move(cases);
  return rep;
}

namespace {

// exact reduced row basis over monomial coordinates; W_a columns sort last so
// rows with a W_a pivot are supported entirely inside W_a
struct WaBasis {
  using ColKey = std::pair<bool, Monomial>;  // (is_wa, monomial)
  using Row = std::map<ColKey, Rational>;
  std::map<ColKey, Row> rows;  // keyed by pivot column

  static Row to_row(const FockPoly& v, const Params& p) {
    Row r;
    for (const auto& t : v.terms()) r[{is_wa_monomial(t.mono, p), t.mono}] = t.coeff;
    return r;
  }

  static void axpy(Row& dst, const Rational& c, const Row& src) {
    for (const auto& [col, val] : src) {
      auto it = dst.find(col);
      if (it == dst.end()) {
        dst[col] = c * val;
      } else {
        it->second += c * val;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  }

  // returns the new pivot column if the row enlarged the span
  bool insert(Row row) {
    for (;;) {
      if (row.empty()) return false;
      auto lead = row.begin()->first;
      auto it = rows.find(lead);
      if (it == rows.end()) break;
      Rational c = -row.begin()->second;  // pivot rows are monic
      axpy(row, c, it->second);
    }
    auto lead = row.begin()->first;
    Rational inv = Rational(1) / row.begin()->second;
    for (auto& [col, val] : row) val *= inv;
    for (auto& [piv, other] : rows) {
      auto hit = other.find(lead);
      if (hit != other.end()) {
        Rational c = -hit->second;
        axpy(other, c, row);
      }
    }
    rows.emplace(lead, std::move(row));
    return true;
  }
};

}  // namespace

ProbeResult submodule_probe(const FockPoly& v, const Params& p, int mode_window, int grade_bound,
                            int length_bound) {
  if (v.is_zero()) throw std::invalid_argument("submodule_probe: zero vector");
  Engine eng(p);

  std::vector<CurrentLabel> labels;
  for (int i = 1; i <= p.n; ++i) {
    for (long m = -mode_window; m <= mode_window; ++m) {
      labels.push_back(CurrentLabel::e(i, m));
      labels.push_back(CurrentLabel::f(i, m));
      labels.push_back(CurrentLabel::h(i, m));
    }
  }

  auto within_grade = [&](const FockPoly& w) {
    for (const auto& t : w.terms()) {
      if (std::labs(weight_of(t.mono, p).delta_deg) > grade_bound) return false;
    }
    return true;
  };

  ProbeResult result;
  result.report.suite = "submodule-probe";
  result.report.params = p;

  WaBasis basis;
  std::vector<FockPoly> frontier = {v};
  std::size_t images = 0;
  if (within_grade(v)) basis.insert(WaBasis::to_row(v, p));
  for (int len = 1; len <= length_bound; ++len) {
    std::vector<FockPoly> next;
    for (const auto& w : frontier) {
      for (const auto& label : labels) {
        FockPoly img = eng.apply(label, w);
        if (img.is_zero()) continue;
        next.push_back(std::move(img));
      }
    }
    for (const auto& w : next) {
      if (within_grade(w)) {
        basis.insert(WaBasis::to_row(w, p));
        ++images;
      }
    }
    frontier = std::move(next);
  }

  for (const auto& [pivot, row] : basis.rows) {
    if (!pivot.first) continue;  // pivot outside W_a
    FockPoly found;
    for (const auto& [col, val] : row) {
      if (!col.first) throw std::logic_error("submodule_probe: W_a pivot row leaks outside W_a");
      found.add_term(col.second, val);
    }
    if (found.is_zero()) throw std::logic_error("submodule_probe: empty intersection row");
    result.found = true;
    result.vector = std::move(found);
    result.report.add("probe (images=" + std::to_string(images) + ")", true,
                      "found=" + format_poly(result.vector));
    return result;
  }
  result.report.add_inconclusive("probe (images=" + std::to_string(images) + ")",
                                 "no W_a intersection at this truncation");
  return result;
}

}  // namespace iw
