#include "iw/oscillator.hpp"

#include <algorithm>
#include <stdexcept>

#include "iw/util.hpp"

namespace iw {

void OscLabel::check_bounds(const Params& p) const {
  if (kind == OscKind::B) {
    if (i < 1 || i > p.n) throw std::out_of_range("b label index out of bounds");
  } else {
    if (i < 1 || i > j || j > p.n) throw std::out_of_range("oscillator label out of bounds");
  }
}

std::string OscLabel::to_string() const {
  std::string head = kind == OscKind::A ? "a" : kind == OscKind::AStar ? "a*" : "b";
  if (kind == OscKind::B) return head + "[" + std::to_string(i) + "," + std::to_string(m) + "]";
  return head + "[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + "]";
}

OpClass classify(OscKind kind, int j, long m, int r) {
  switch (kind) {
    case OscKind::A:
      return (j <= r && m >= 0) ? OpClass::Annihilation : OpClass::Creation;
    case OscKind::AStar:
      return (j <= r && m <= 0) ? OpClass::Creation : OpClass::Annihilation;
    case OscKind::B:
      if (m == 0) return OpClass::Scalar;
      return m > 0 ? OpClass::Annihilation : OpClass::Creation;
  }
  throw std::logic_error("classify: bad kind");
}

int cartan(int i, int j) {
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

BMatrix build_b_matrix(const Params& p) {
  p.validate();
  const int n = p.n, r = p.r;
  BMatrix entrywise;
  entrywise.n = n;
  entrywise.entries.assign(static_cast<std::size_t>(n) * n, Rational());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational factor = p.gamma2;
      if (i > r && j > r) factor -= Rational(r + 1);
      if (i == r + 1 && j == r + 1) factor += Rational(r, 2);
      entrywise.at(i, j) = Rational(cartan(i, j)) * factor;
    }
  }

  BMatrix matrix_form;
  matrix_form.n = n;
  matrix_form.entries.assign(static_cast<std::size_t>(n) * n, Rational());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational e = p.gamma2 * Rational(cartan(i, j));
      if (i > r && j > r) e -= Rational(r + 1) * Rational(cartan(i - r, j - r));
      if (i == r + 1 && j == r + 1) e += Rational(r);
      matrix_form.at(i, j) = e;
    }
  }

  if (entrywise.entries != matrix_form.entries)
    throw std::logic_error("build_b_matrix: entrywise and matrix-form definitions disagree");
  return entrywise;
}

namespace {

// det of a rational matrix: scale to integers, fraction-free Bareiss, unscale
Rational bareiss_det(const BMatrix& M) {
  const int n = M.n;
  if (n == 0) return Rational(1);
  BigInt den_lcm(1);
  for (const auto& e : M.entries) {
    BigInt d = e.denominator();
    den_lcm = den_lcm / BigInt::gcd(den_lcm, d) * d;
  }
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& e = M.entries[static_cast<std::size_t>(i) * n + j];
      a[static_cast<std::size_t>(i) * n + j] = e.numerator() * (den_lcm / e.denominator());
    }
  }
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  int sign = 1;
  BigInt prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!at(i, k).is_zero()) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return Rational();
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = BigInt(0);
    }
    prev = at(k, k);
  }
  BigInt det_scaled = at(n - 1, n - 1);
  if (sign < 0) det_scaled = -det_scaled;
  Rational scale = Rational(den_lcm, BigInt(1)).pow(n);
  return Rational(det_scaled, BigInt(1)) / scale;
}

}  // namespace

std::pair<Rational, Rational> det_b(const Params& p) {
  Rational closed = Rational(p.n + 1) * p.gamma2.pow(p.r) * p.level().pow(p.n - p.r);
  Rational eliminated = bareiss_det(build_b_matrix(p));
  return {closed, eliminated};
}

namespace {

// concrete action of one classified mode operator, in place
void apply_mode_inplace(OscKind kind, int i, int j, long m, FockPoly& v, const Params& p,
                        const BMatrix& B) {
  switch (kind) {
    case OscKind::A: {
      VarId var = VarId::x(i, j, static_cast<int>(m));
      if (j <= p.r && m >= 0) {
        v.d_var(var);
      } else {
        v.mul_var(var);
      }
      return;
    }
    case OscKind::AStar: {
      VarId var = VarId::x(i, j, static_cast<int>(-m));
      if (j <= p.r && m <= 0) {
        v.mul_var(var);
      } else {
        v.d_var(var);
        v.negate();
      }
      return;
    }
    case OscKind::B: {
      if (m == 0) {
        v.scale(p.lambda[static_cast<std::size_t>(i) - 1]);
        return;
      }
      if (m < 0) {
        v.mul_var(VarId::y(i, static_cast<int>(-m)));
        return;
      }
      FockPoly out;
      for (int k = 1; k <= p.n; ++k) {
        const Rational& w = B.at(i, k);
        if (w.is_zero()) continue;
        FockPoly piece = v;
        piece.d_var(VarId::y(k, static_cast<int>(m)));
        piece.scale(Rational(m) * w);
        out += piece;
      }
      v = std::move(out);
      return;
    }
  }
  throw std::logic_error("apply_mode: bad kind");
}

FockPoly apply_mode(OscKind kind, int i, int j, long m, const FockPoly& v, const Params& p,
                    const BMatrix& B) {
  FockPoly out = v;
  apply_mode_inplace(kind, i, j, m, out, p, B);
  return out;
}

constexpr long kInf = 1000000000000000ll;

struct Cand {
  std::vector<long> pts;  // sorted, deduplicated
  bool ray = false;       // interval (-inf, ray_hi]
  long ray_hi = 0;
  bool all = false;       // all of Z (pure creation multiplication)

  long sup() const {
    if (all) return kInf;
    long s = -kInf;
    if (ray) s = ray_hi;
    if (!pts.empty()) s = std::max(s, pts.back());
    return s;
  }
  bool contains(long v) const {
    if (all) return true;
    if (ray && v <= ray_hi) return true;
    return std::binary_search(pts.begin(), pts.end(), v);
  }
};

void candidates_into(const WordFactor& f, const Monomial& mono, const Params& p, int slack,
                     Cand& c) {
  c.pts.clear();
  c.ray = false;
  c.ray_hi = 0;
  c.all = false;
  switch (f.kind) {
    case OscKind::A:
      if (f.j > p.r) {
        c.all = true;
        return;
      }
      for (const auto& fac : mono.factors()) {
        if (fac.var.kind == VarKind::X && fac.var.i == f.i && fac.var.j == f.j && fac.var.m >= 0)
          c.pts.push_back(fac.var.m);
      }
      c.ray = true;
      c.ray_hi = -1;
      break;
    case OscKind::AStar:
      for (const auto& fac : mono.factors()) {
        if (fac.var.kind == VarKind::X && fac.var.i == f.i && fac.var.j == f.j) {
          if (f.j > p.r || fac.var.m < 0) c.pts.push_back(-static_cast<long>(fac.var.m));
        }
      }
      if (f.j <= p.r) {
        c.ray = true;
        c.ray_hi = 0;
      }
      break;
    case OscKind::B:
      for (const auto& fac : mono.factors()) {
        if (fac.var.kind == VarKind::Y) c.pts.push_back(fac.var.m);
      }
      c.pts.push_back(0);  // the scalar mode b[i,0]
      c.ray = true;
      c.ray_hi = -1;
      break;
  }
  std::sort(c.pts.begin(), c.pts.end());
  c.pts.erase(std::unique(c.pts.begin(), c.pts.end()), c.pts.end());
  if (slack > 0 && !c.all) {
    if (!c.pts.empty()) {
      long lo = c.pts.front() - slack, hi = c.pts.back() + slack;
      c.pts.clear();
      for (long v = lo; v <= hi; ++v) c.pts.push_back(v);
    }
    if (c.ray) c.ray_hi += slack;
  }
}

// single-term action; false when the term dies (derivative of an absent
// variable or a vanishing scalar).  B modes > 0 are multi-term and are not
// handled here.
bool apply_mode_term(OscKind kind, int i, int j, long m, Monomial& mono, Rational& coeff,
                     const Params& p) {
  switch (kind) {
    case OscKind::A: {
      VarId var = VarId::x(i, j, static_cast<int>(m));
      if (j <= p.r && m >= 0) {
        int e = mono.exponent(var);
        if (e == 0) return false;
        coeff *= Rational(e);
        mono.div_var_once(var);
      } else {
        mono.mul_var(var);
      }
      return true;
    }
    case OscKind::AStar: {
      VarId var = VarId::x(i, j, static_cast<int>(-m));
      if (j <= p.r && m <= 0) {
        mono.mul_var(var);
      } else {
        int e = mono.exponent(var);
        if (e == 0) return false;
        coeff *= Rational(-e);
        mono.div_var_once(var);
      }
      return true;
    }
    case OscKind::B: {
      if (m == 0) {
        coeff *= p.lambda[static_cast<std::size_t>(i) - 1];
        return !coeff.is_zero();
      }
      if (m < 0) {
        mono.mul_var(VarId::y(i, static_cast<int>(-m)));
        return true;
      }
      throw std::logic_error("apply_mode_term: positive b mode is multi-term");
    }
  }
  throw std::logic_error("apply_mode_term: bad kind");
}

struct WordEval {
  const std::vector<WordFactor>& factors;
  const Params& p;
  const BMatrix& B;
  std::vector<Cand> cands;
  std::vector<int> order;  // factor visit order, unbounded factor last
  std::vector<long> modes;
  const Monomial* mono = nullptr;
  const Rational* coeff = nullptr;
  const Rational* scale = nullptr;
  FockPoly* out = nullptr;

  void emit() {
    // annihilation and scalar parts act first (they only shrink support),
    // multiplications afterwards; this is the normal-ordered composite
    bool multi_term = false;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (factors[k].kind == OscKind::B && modes[k] > 0) multi_term = true;
    }
    if (!multi_term) {
      Monomial m = *mono;
      Rational c = *coeff * *scale;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        if (classify(f.kind, f.j, modes[k], p.r) != OpClass::Creation) {
          if (!apply_mode_term(f.kind, f.i, f.j, modes[k], m, c, p)) return;
        }
      }
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        if (classify(f.kind, f.j, modes[k], p.r) == OpClass::Creation) {
          apply_mode_term(f.kind, f.i, f.j, modes[k], m, c, p);
        }
      }
      out->add_term(m, c);
      return;
    }
    FockPoly v = FockPoly::term(*mono, *coeff * *scale);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& f = factors[k];
      if (classify(f.kind, f.j, modes[k], p.r) != OpClass::Creation) {
        apply_mode_inplace(f.kind, f.i, f.j, modes[k], v, p, B);
        if (v.is_zero()) return;
      }
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& f = factors[k];
      if (classify(f.kind, f.j, modes[k], p.r) == OpClass::Creation) {
        apply_mode_inplace(f.kind, f.i, f.j, modes[k], v, p, B);
      }
    }
    for (auto& t : v.terms()) out->add_term(t.mono, t.coeff);
  }

  void run(std::size_t pos, long remaining) {
    const int idx = order[pos];
    const Cand& c = cands[static_cast<std::size_t>(idx)];
    if (pos + 1 == order.size()) {
      if (c.contains(remaining)) {
        modes[static_cast<std::size_t>(idx)] = remaining;
        emit();
      }
      return;
    }
    long rest_sup = 0;
    bool rest_bounded = true;
    for (std::size_t s = pos + 1; s < order.size(); ++s) {
      long sp = cands[static_cast<std::size_t>(order[s])].sup();
      if (sp >= kInf) rest_bounded = false;
      rest_sup += sp;
    }
    const long lo = rest_bounded ? remaining - rest_sup : -kInf;
    const long hi = c.sup();
    if (c.all || (c.ray && lo <= -kInf))
      throw std::logic_error("apply_normal_word: active range unbounded");
    const long ray_top = c.ray ? std::min(c.ray_hi, hi) : lo - 1;
    for (long v = lo; v <= ray_top; ++v) {
      modes[static_cast<std::size_t>(idx)] = v;
      run(pos + 1, remaining - v);
    }
    for (long v : c.pts) {
      if (v <= ray_top) continue;  // already covered by the ray
      if (v < lo || v > hi) continue;
      modes[static_cast<std::size_t>(idx)] = v;
      run(pos + 1, remaining - v);
    }
  }
};

}  // namespace

void accumulate_normal_word(const NormalWord& w, long target_mode, const FockPoly& v,
                            const Params& p, const BMatrix& B, const Rational& scale,
                            FockPoly& out, const EvalOpts& opts) {
  const std::size_t k = w.factors.size();
  if (k == 0) throw std::invalid_argument("apply_normal_word: empty word");
  long n_ab = 0;
  for (const auto& f : w.factors) n_ab += f.kind != OscKind::AStar;
  const long target_sum = target_mode + 1 - n_ab;

  // the unbounded factor (pure-creation multiplication) is a property of the
  // word alone; everything else is enumerated first and it gets forced
  int unbounded = -1;
  for (std::size_t s = 0; s < k; ++s) {
    if (w.factors[s].kind == OscKind::A && w.factors[s].j > p.r) {
      if (unbounded >= 0)
        throw std::logic_error("apply_normal_word: two unbounded factors in one word");
      unbounded = static_cast<int>(s);
    }
  }
  WordEval ev{w.factors, p, B, std::vector<Cand>(k), {}, std::vector<long>(k, 0),
              nullptr,    nullptr, &scale, &out};
  for (std::size_t s = 0; s < k; ++s) {
    if (static_cast<int>(s) != unbounded) ev.order.push_back(static_cast<int>(s));
  }
  if (unbounded >= 0) ev.order.push_back(unbounded);

  for (const auto& t : v.terms()) {
    for (std::size_t s = 0; s < k; ++s) {
      candidates_into(w.factors[s], t.mono, p, opts.slack, ev.cands[s]);
    }
    ev.mono = &t.mono;
    ev.coeff = &t.coeff;
    ev.run(0, target_sum);
  }
}

FockPoly apply_normal_word(const NormalWord& w, long target_mode, const FockPoly& v,
                           const Params& p, const BMatrix& B, const EvalOpts& opts) {
  FockPoly out;
  accumulate_normal_word(w, target_mode, v, p, B, Rational(1), out, opts);
  return out;
}

FockPoly apply_oscillator(const OscLabel& op, const FockPoly& v, const Params& p,
                          const BMatrix& B) {
  op.check_bounds(p);
  return apply_mode(op.kind, op.i, op.j, op.m, v, p, B);
}

FockPoly apply_oscillator(const OscLabel& op, const FockPoly& v, const Params& p) {
  return apply_oscillator(op, v, p, build_b_matrix(p));
}

Report ccr_check(const Params& p, int mode_window, const std::vector<FockPoly>& test_set) {
  const BMatrix B = build_b_matrix(p);
  std::vector<OscLabel> labels;
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i; j <= p.n; ++j) {
      for (long m = -mode_window; m <= mode_window; ++m) {
        labels.push_back(OscLabel::a(i, j, m));
        labels.push_back(OscLabel::a_star(i, j, m));
      }
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    for (long m = -mode_window; m <= mode_window; ++m) labels.push_back(OscLabel::b(i, m));
  }

  // expected commutator is always a scalar multiple of the identity
  auto expected = [&](const OscLabel& x, const OscLabel& y) -> Rational {
    if (x.kind == OscKind::A && y.kind == OscKind::AStar) {
      if (x.i == y.i && x.j == y.j && x.m + y.m == 0) return Rational(1);
      return Rational();
    }
    if (x.kind == OscKind::AStar && y.kind == OscKind::A) {
      if (x.i == y.i && x.j == y.j && x.m + y.m == 0) return Rational(-1);
      return Rational();
    }
    if (x.kind == OscKind::B && y.kind == OscKind::B) {
      if (x.m + y.m == 0) return Rational(x.m) * B.at(x.i, y.i);
      return Rational();
    }
    return Rational();
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) pairs.emplace_back(a, b);
  }

  std::vector<CheckCase> cases(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const OscLabel& x = labels[pairs[k].first];
    const OscLabel& y = labels[pairs[k].second];
    CheckCase c;
    c.id = "[" + x.to_string() + "," + y.to_string() + "]";
    c.status = CaseStatus::Pass;
    const Rational want = expected(x, y);
    for (const auto& v : test_set) {
      FockPoly lhs = apply_oscillator(x, apply_oscillator(y, v, p, B), p, B) -
                     apply_oscillator(y, apply_oscillator(x, v, p, B), p, B);
      FockPoly rhs = v;
      rhs.scale(want);
      if (lhs != rhs) {
        c.status = CaseStatus::Fail;
        c.witness = "v=" + format_poly(v) + " got=" + format_poly(lhs) +
                    " want=" + format_poly(rhs);
        break;
      }
    }
    cases[k] = std::move(c);
  });

  Report rep;
  rep.suite = "oscillator-ccr";
  rep.params = p;
  rep.cases = std::move(cases);
  return rep;
}

}  // namespace iw
