#include "iw/currents.hpp"

#include <stdexcept>

namespace iw {

std::string CurrentLabel::to_string() const {
  switch (kind) {
    case CurrentKind::C:
      return "c";
    case CurrentKind::E:
      return "E[" + std::to_string(i) + "," + std::to_string(m) + "]";
    case CurrentKind::F:
      return "F[" + std::to_string(i) + "," + std::to_string(m) + "]";
    case CurrentKind::H:
      return "H[" + std::to_string(i) + "," + std::to_string(m) + "]";
  }
  return "?";
}

Weight current_weight(const CurrentLabel& label, const Params& p) {
  Weight w(p.n);
  if (label.kind == CurrentKind::C) return w;
  w.delta_deg = label.m;
  if (label.kind == CurrentKind::E) w.root_offset[static_cast<std::size_t>(label.i) - 1] = 1;
  if (label.kind == CurrentKind::F) w.root_offset[static_cast<std::size_t>(label.i) - 1] = -1;
  return w;
}

namespace {

WordFactor fa(int i, int j) { return WordFactor{OscKind::A, i, j}; }
WordFactor fs(int i, int j) { return WordFactor{OscKind::AStar, i, j}; }
WordFactor fb(int i) { return WordFactor{OscKind::B, i, 0}; }

CurrentPlan make_f_plan(int i, const Params& p) {
  CurrentPlan plan;
  plan.terms.push_back(PlanTerm{NormalWord{{fa(i, i)}}, Rational(1), false});
  for (int j = i + 1; j <= p.n; ++j) {
    plan.terms.push_back(PlanTerm{NormalWord{{fa(i, j), fs(i + 1, j)}}, Rational(1), false});
  }
  return plan;
}

CurrentPlan make_h_plan(int i, const Params& p) {
  CurrentPlan plan;
  plan.terms.push_back(PlanTerm{NormalWord{{fa(i, i), fs(i, i)}}, Rational(2), false});
  for (int j = 1; j < i; ++j) {
    plan.terms.push_back(PlanTerm{NormalWord{{fa(j, i), fs(j, i)}}, Rational(1), false});
    plan.terms.push_back(PlanTerm{NormalWord{{fa(j, i - 1), fs(j, i - 1)}}, Rational(-1), false});
  }
  for (int j = i + 1; j <= p.n; ++j) {
    plan.terms.push_back(PlanTerm{NormalWord{{fa(i, j), fs(i, j)}}, Rational(1), false});
    plan.terms.push_back(PlanTerm{NormalWord{{fa(i + 1, j), fs(i + 1, j)}}, Rational(-1), false});
  }
  plan.terms.push_back(PlanTerm{NormalWord{{fb(i)}}, Rational(1), false});
  return plan;
}

CurrentPlan make_e_plan(int i, const Params& p) {
  CurrentPlan plan;
  for (int k = 1; k < i; ++k) {
    plan.terms.push_back(
        PlanTerm{NormalWord{{fs(i, i), fa(k, i - 1), fs(k, i - 1)}}, Rational(1), false});
  }
  for (int k = 1; k <= i; ++k) {
    plan.terms.push_back(
        PlanTerm{NormalWord{{fs(i, i), fa(k, i), fs(k, i)}}, Rational(-1), false});
  }
  for (int k = i + 1; k <= p.n; ++k) {
    plan.terms.push_back(PlanTerm{NormalWord{{fa(i + 1, k), fs(i, k)}}, Rational(1), false});
  }
  for (int k = 1; k < i; ++k) {
    plan.terms.push_back(PlanTerm{NormalWord{{fa(k, i - 1), fs(k, i)}}, Rational(-1), false});
  }
  plan.terms.push_back(PlanTerm{NormalWord{{fs(i, i), fb(i)}}, Rational(-1), false});
  const Rational c_i = Rational(i > p.r ? p.r + 1 : i + 1) - p.gamma2;
  plan.terms.push_back(PlanTerm{NormalWord{{fs(i, i)}}, -c_i, true});
  return plan;
}

}  // namespace

Engine::Engine(Params p) : p_(std::move(p)), B_(build_b_matrix(p_)) {
  plans_e_.reserve(static_cast<std::size_t>(p_.n));
  plans_f_.reserve(static_cast<std::size_t>(p_.n));
  plans_h_.reserve(static_cast<std::size_t>(p_.n));
  for (int i = 1; i <= p_.n; ++i) {
    plans_e_.push_back(make_e_plan(i, p_));
    plans_f_.push_back(make_f_plan(i, p_));
    plans_h_.push_back(make_h_plan(i, p_));
  }
}

const CurrentPlan& Engine::plan(CurrentKind kind, int i) const {
  if (i < 1 || i > p_.n) throw std::out_of_range("current index out of bounds");
  switch (kind) {
    case CurrentKind::E:
      return plans_e_[static_cast<std::size_t>(i) - 1];
    case CurrentKind::F:
      return plans_f_[static_cast<std::size_t>(i) - 1];
    case CurrentKind::H:
      return plans_h_[static_cast<std::size_t>(i) - 1];
    case CurrentKind::C:
      break;
  }
  throw std::invalid_argument("central element has no word plan");
}

FockPoly Engine::apply(const CurrentLabel& label, const FockPoly& v, const EvalOpts& opts) const {
  if (label.kind == CurrentKind::C) {
    FockPoly out = v;
    out.scale(level());
    return out;
  }
  const CurrentPlan& pl = plan(label.kind, label.i);
  FockPoly out;
  for (const auto& term : pl.terms) {
    if (term.z_deriv) {
      // d_z a*(z) = sum_m (-m) a*_m z^{-m-1}
      Rational c = term.coeff * Rational(-label.m);
      if (c.is_zero()) continue;
      const WordFactor& f = term.word.factors[0];
      FockPoly piece =
          apply_oscillator(OscLabel{f.kind, f.i, f.j, label.m}, v, p_, B_);
      piece.scale(c);
      out += piece;
      continue;
    }
    accumulate_normal_word(term.word, label.m, v, p_, B_, term.coeff, out, opts);
  }
  return out;
}

FockPoly Engine::apply_osc(const OscLabel& op, const FockPoly& v) const {
  return apply_oscillator(op, v, p_, B_);
}

std::pair<std::vector<Rational>, Rational> Engine::vacuum_eigenvalues() const {
  const FockPoly vac = FockPoly::vacuum();
  for (int i = 1; i <= p_.n; ++i) {
    FockPoly hv = apply(CurrentLabel::h(i, 0), vac);
    FockPoly want = vac;
    want.scale(p_.lambda[static_cast<std::size_t>(i) - 1]);
    if (hv != want)
      throw std::logic_error("vacuum_eigenvalues: H[" + std::to_string(i) +
                             ",0] does not act by lambda on the vacuum");
  }
  FockPoly cv = apply(CurrentLabel::c(), vac);
  FockPoly want = vac;
  want.scale(level());
  if (cv != want) throw std::logic_error("vacuum_eigenvalues: c does not act by the level");
  return {p_.lambda, level()};
}

}  // namespace iw
