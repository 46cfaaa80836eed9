#include "iw/sl2.hpp"

#include <algorithm>
#include <stdexcept>

#include "iw/currents.hpp"
#include "iw/util.hpp"

namespace iw::sl2 {

void FMonomial::insert(long s) {
  modes.insert(std::upper_bound(modes.begin(), modes.end(), s), s);
}

std::string FMonomial::to_string() const {
  if (modes.empty()) return "1";
  std::string out;
  for (long s : modes) {
    if (!out.empty()) out += "*";
    out += "f[" + std::to_string(s) + "]";
  }
  return out;
}

VPoly VPoly::term(FMonomial m, Rational c) {
  VPoly out;
  if (!c.is_zero()) out.terms_.emplace_back(std::move(m), std::move(c));
  return out;
}

void VPoly::add_term(const FMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const auto& t, const FMonomial& mm) { return t.first < mm; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
    return;
  }
  terms_.insert(it, {m, c});
}

VPoly& VPoly::operator+=(const VPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void VPoly::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [m, cc] : terms_) cc *= c;
}

std::string VPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (m.modes.empty()) {
      out += a.to_string();
    } else if (a.is_one()) {
      out += m.to_string();
    } else {
      out += a.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

VPoly v0_apply(Gen g, long mode, const VPoly& v) {
  VPoly out;
  for (const auto& [mono, coeff] : v.terms()) {
    switch (g) {
      case Gen::F: {
        FMonomial m = mono;
        m.insert(mode);
        out.add_term(m, coeff);
        break;
      }
      case Gen::H: {
        // [h_j, f_s] = -2 f_{j+s}; h_j |0> = 0
        for (std::size_t a = 0; a < mono.modes.size(); ++a) {
          FMonomial m;
          m.modes.reserve(mono.modes.size());
          for (std::size_t b = 0; b < mono.modes.size(); ++b) {
            if (b != a) m.modes.push_back(mono.modes[b]);
          }
          std::sort(m.modes.begin(), m.modes.end());
          FMonomial shifted = m;
          shifted.insert(mono.modes[a] + mode);
          out.add_term(shifted, coeff * Rational(-2));
        }
        break;
      }
      case Gen::E: {
        // commuting e_j through two lowering factors leaves, for every
        // unordered pair {a,b}, the term -2 f_{s_a+s_b+j} on the rest;
        // c acts by zero so the central shift drops out
        for (std::size_t a = 0; a < mono.modes.size(); ++a) {
          for (std::size_t b = a + 1; b < mono.modes.size(); ++b) {
            FMonomial m;
            m.modes.reserve(mono.modes.size() - 1);
            for (std::size_t t = 0; t < mono.modes.size(); ++t) {
              if (t != a && t != b) m.modes.push_back(mono.modes[t]);
            }
            std::sort(m.modes.begin(), m.modes.end());
            FMonomial shifted = m;
            shifted.insert(mono.modes[a] + mono.modes[b] + mode);
            out.add_term(shifted, coeff * Rational(-2));
          }
        }
        break;
      }
    }
  }
  return out;
}

VPoly wilson_vector(int r, const std::vector<long>& s) {
  if (r < 1) throw std::invalid_argument("wilson_vector: r must be positive");
  if (static_cast<int>(s.size()) != r)
    throw std::invalid_argument("wilson_vector: need exactly r shifts");
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) perm[static_cast<std::size_t>(k)] = k;
  VPoly out;
  do {
    int inversions = 0;
    for (int a = 0; a < r; ++a) {
      for (int b = a + 1; b < r; ++b) inversions += perm[a] > perm[b];
    }
    FMonomial m;
    for (int k = 0; k < r; ++k) m.insert(s[static_cast<std::size_t>(k)] + perm[k]);
    out.add_term(m, Rational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SingularityResult singularity_check(const VPoly& v, int mode_window) {
  if (v.is_zero()) throw std::invalid_argument("singularity_check: zero vector");
  SingularityResult out;
  for (long i = -mode_window; i <= mode_window; ++i) {
    VPoly img = v0_apply(Gen::E, i, v);
    if (!img.is_zero()) {
      out.e_annihilated = false;
      out.e_witness = "e[" + std::to_string(i) + "]v=" + img.to_string();
      break;
    }
  }
  for (long j = 1; j <= mode_window; ++j) {
    VPoly img = v0_apply(Gen::H, j, v);
    if (!img.is_zero()) {
      out.h_annihilated = false;
      out.h_witness = "h[" + std::to_string(j) + "]v=" + img.to_string();
      break;
    }
  }
  return out;
}

namespace {

void graded_basis_rec(int count, long total, long window, long min_mode, FMonomial& cur,
                      std::vector<FMonomial>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (long t = min_mode; t <= window; ++t) {
    // remaining modes are >= t, so the reachable total is bounded
    long lo = total - (count - 1) * window - t;
    long hi = total - (count - 1) * t - t;
    if (lo > 0 || hi < 0) {
      if (total - t < (count - 1) * t) break;  // monotone: larger t only worse
      continue;
    }
    cur.modes.push_back(t);
    graded_basis_rec(count - 1, total - t, window, t, cur, out);
    cur.modes.pop_back();
  }
}

}  // namespace

std::vector<VPoly> singular_space_kernel(int count, long total_shift, int mode_window) {
  std::vector<FMonomial> basis;
  FMonomial scratch;
  graded_basis_rec(count, total_shift, mode_window, -mode_window, scratch, basis);
  std::vector<VPoly> kernel;
  if (basis.empty()) return kernel;

  // boundary-safe constraint rows
  std::map<FMonomial, std::size_t> row_index;
  std::vector<std::vector<Rational>> rows;
  for (long i = -mode_window; i <= mode_window; ++i) {
    std::vector<VPoly> images;
    bool safe = true;
    for (const auto& b : basis) {
      VPoly img = v0_apply(Gen::E, i, VPoly::basis(b));
      for (const auto& [m, c] : img.terms()) {
        for (long mode : m.modes) {
          if (mode < -mode_window || mode > mode_window) safe = false;
        }
      }
      images.push_back(std::move(img));
    }
    if (!safe) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (const auto& [m, c] : images[k].terms()) {
        auto [it, fresh] = row_index.try_emplace(m, rows.size());
        if (fresh) rows.emplace_back(basis.size(), Rational(0));
        rows[it->second][k] += c;
      }
    }
  }

  // null space by Gaussian elimination
  const std::size_t ncols = basis.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank_row = 0;
  for (std::size_t col = 0; col < ncols && rank_row < rows.size(); ++col) {
    std::size_t piv = rank_row;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank_row], rows[piv]);
    Rational inv = Rational(1) / rows[rank_row][col];
    for (auto& x : rows[rank_row]) x *= inv;
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == rank_row || rows[r2][col].is_zero()) continue;
      Rational c = rows[r2][col];
      for (std::size_t cc = 0; cc < ncols; ++cc) rows[r2][cc] -= c * rows[rank_row][cc];
    }
    pivot_col.push_back(col);
    ++rank_row;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    VPoly vec = VPoly::basis(basis[free_col]);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      const Rational& coef = rows[k][free_col];
      if (!coef.is_zero()) vec.add_term(basis[pivot_col[k]], -coef);
    }
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

bool in_span(const VPoly& v, const std::vector<VPoly>& basis) {
  // incremental reduction against an echelonized copy of the basis
  std::map<FMonomial, VPoly> echelon;
  auto reduce = [&](VPoly w) {
    while (!w.is_zero()) {
      const auto& lead = w.terms().front();
      auto it = echelon.find(lead.first);
      if (it == echelon.end()) return w;
      VPoly sub = it->second;
      sub.scale(lead.second);
      w -= sub;
    }
    return w;
  };
  for (const auto& b : basis) {
    VPoly red = reduce(b);
    if (red.is_zero()) continue;
    Rational inv = Rational(1) / red.terms().front().second;
    red.scale(inv);
    echelon.emplace(red.terms().front().first, std::move(red));
  }
  return reduce(v).is_zero();
}

// ---- realizations ----------------------------------------------------------

Realization Realization::first() { return Realization{RealizationKind::FirstFreeField, {}, {}, {}}; }

Realization Realization::jakobsen_kac(std::map<long, Rational> lam) {
  return Realization{RealizationKind::JakobsenKac, {}, {}, std::move(lam)};
}

Realization Realization::bernard_felder(Rational K, Rational J) {
  return Realization{RealizationKind::BernardFelder, std::move(K), std::move(J), {}};
}

Realization Realization::second(Rational K) {
  return Realization{RealizationKind::SecondFreeField, std::move(K), {}, {}};
}

Rational central_value(const Realization& real) {
  switch (real.kind) {
    case RealizationKind::FirstFreeField:
    case RealizationKind::JakobsenKac:
      return Rational(0);
    case RealizationKind::BernardFelder:
    case RealizationKind::SecondFreeField:
      return real.K;
  }
  return Rational(0);
}

namespace {

VarId xv(long m) { return VarId::x(1, 1, static_cast<int>(m)); }
VarId yv(long m) { return VarId::y(1, static_cast<int>(m)); }

std::vector<long> x_modes(const Monomial& m) {
  std::vector<long> out;
  for (const auto& f : m.factors()) {
    if (f.var.kind == VarKind::X) out.push_back(f.var.m);
  }
  return out;
}

std::vector<long> y_modes(const Monomial& m) {
  std::vector<long> out;
  for (const auto& f : m.factors()) {
    if (f.var.kind == VarKind::Y) out.push_back(f.var.m);
  }
  return out;
}

Rational lambda_at(const Realization& real, long m) {
  auto it = real.lambda_seq.find(m);
  return it == real.lambda_seq.end() ? Rational(0) : it->second;
}

// first/Jakobsen-Kac generators.  The lowering modes act freely by
// multiplication (the space is a free module over them, with the f-monomial
// basis matching the quotient model); raising modes carry all derivatives,
// so every infinite sum is support-bounded.
void ff_apply_term(const Realization& real, Gen g, long n, const Monomial& mono,
                   const Rational& coeff, FockPoly& out) {
  const bool jk = real.kind == RealizationKind::JakobsenKac;
  const FockPoly v = FockPoly::term(mono, coeff);
  switch (g) {
    case Gen::F: {
      FockPoly piece = v;
      piece.mul_var(xv(n));
      out += piece;
      return;
    }
    case Gen::H: {
      if (jk) {
        FockPoly piece = v;
        piece.scale(-lambda_at(real, n));
        out += piece;
      }
      for (long m : x_modes(mono)) {
        FockPoly piece = v;
        piece.d_var(xv(m));
        piece.mul_var(xv(n + m));
        piece.scale(Rational(-2));
        out += piece;
      }
      return;
    }
    case Gen::E: {
      const std::vector<long> modes = x_modes(mono);
      for (long m : modes) {
        for (long k : modes) {
          FockPoly piece = v;
          piece.d_var(xv(k));
          piece.d_var(xv(m));
          if (piece.is_zero()) continue;
          piece.mul_var(xv(n + m + k));
          piece.negate();
          out += piece;
        }
        if (jk) {
          FockPoly piece = v;
          piece.d_var(xv(m));
          piece.scale(-lambda_at(real, n + m));
          out += piece;
        }
      }
      return;
    }
  }
}

void bf_apply_term(const Realization& real, Gen g, long n, const Monomial& mono,
                   const Rational& coeff, FockPoly& out) {
  const FockPoly v = FockPoly::term(mono, coeff);
  const Rational& K = real.K;
  const Rational& J = real.J;
  switch (g) {
    case Gen::F: {
      FockPoly piece = v;
      piece.mul_var(xv(n));
      out += piece;
      return;
    }
    case Gen::H: {
      for (long m : x_modes(mono)) {
        FockPoly piece = v;
        piece.d_var(xv(m));
        piece.mul_var(xv(m + n));
        piece.scale(Rational(-2));
        out += piece;
      }
      if (n < 0) {
        FockPoly piece = v;
        piece.mul_var(yv(-n));
        out += piece;
      } else if (n > 0) {
        FockPoly piece = v;
        piece.d_var(yv(n));
        piece.scale(Rational(2 * n) * K);
        out += piece;
      } else {
        FockPoly piece = v;
        piece.scale(J);
        out += piece;
      }
      return;
    }
    case Gen::E: {
      const std::vector<long> xm = x_modes(mono);
      for (long k : xm) {
        for (long m : xm) {
          FockPoly piece = v;
          piece.d_var(xv(m));
          piece.d_var(xv(k));
          if (piece.is_zero()) continue;
          piece.mul_var(xv(k + m + n));
          piece.negate();
          out += piece;
        }
      }
      for (long mu : xm) {
        const long k = -n - mu;  // y_k d/dx_{-k-n} hits x_mu
        if (k <= 0) continue;
        FockPoly piece = v;
        piece.d_var(xv(mu));
        piece.mul_var(yv(k));
        out += piece;
      }
      for (long m : y_modes(mono)) {
        FockPoly piece = v;
        piece.d_var(yv(m));
        piece.d_var(xv(m - n));
        if (piece.is_zero()) continue;
        piece.scale(Rational(2 * m) * K);
        out += piece;
      }
      {
        FockPoly piece = v;
        piece.d_var(xv(-n));
        piece.scale(K * Rational(n) + J);
        out += piece;
      }
      return;
    }
  }
}

// second free field: mode operators with the normal-ordered word shapes
struct SecondOps {
  Rational K;

  // a_q: multiplication below zero, derivative from zero up
  static void apply_a(long q, FockPoly& v) {
    if (q < 0) {
      v.mul_var(xv(q));
    } else {
      v.d_var(xv(q));
    }
  }
  // a*_p: multiplication at and below zero, minus-derivative above
  static void apply_astar(long p, FockPoly& v) {
    if (p <= 0) {
      v.mul_var(xv(-p));
    } else {
      v.d_var(xv(-p));
      v.negate();
    }
  }
  // b_q with [b_q, b_p] = 2(K+2) q delta_{q+p,0}
  void apply_b(long q, FockPoly& v) const {
    if (q == 0) {
      v.scale(Rational(0));
    } else if (q < 0) {
      v.mul_var(yv(-q));
    } else {
      v.d_var(yv(q));
      v.scale(Rational(2 * q) * (K + Rational(2)));
    }
  }

  static bool astar_is_creation(long p) { return p <= 0; }
  static bool a_is_creation(long q) { return q < 0; }
};

struct Cand {
  std::vector<long> pts;  // annihilation candidates from the support
  long ray_hi = 0;        // creation ray (-inf, ray_hi]
  long sup() const { return pts.empty() ? ray_hi : std::max(ray_hi, pts.back()); }
  bool contains(long v) const {
    return v <= ray_hi || std::binary_search(pts.begin(), pts.end(), v);
  }
};

Cand astar_cands(const Monomial& mono, int slack) {
  Cand c;
  for (long m : x_modes(mono)) {
    if (m < 0) c.pts.push_back(-m);
  }
  std::sort(c.pts.begin(), c.pts.end());
  c.ray_hi = 0 + slack;
  if (slack && !c.pts.empty()) {
    std::vector<long> widened;
    for (long v = c.pts.front() - slack; v <= c.pts.back() + slack; ++v) widened.push_back(v);
    c.pts = std::move(widened);
  }
  return c;
}

Cand a_cands(const Monomial& mono, int slack) {
  Cand c;
  for (long m : x_modes(mono)) {
    if (m >= 0) c.pts.push_back(m);
  }
  std::sort(c.pts.begin(), c.pts.end());
  c.ray_hi = -1 + slack;
  if (slack && !c.pts.empty()) {
    std::vector<long> widened;
    for (long v = c.pts.front() - slack; v <= c.pts.back() + slack; ++v) widened.push_back(v);
    c.pts = std::move(widened);
  }
  return c;
}

Cand b_cands(const Monomial& mono, int slack) {
  Cand c;
  for (long m : y_modes(mono)) c.pts.push_back(m);
  c.pts.push_back(0);
  std::sort(c.pts.begin(), c.pts.end());
  c.pts.erase(std::unique(c.pts.begin(), c.pts.end()), c.pts.end());
  c.ray_hi = -1 + slack;
  if (slack) {
    std::vector<long> widened;
    for (long v = c.pts.front() - slack; v <= c.pts.back() + slack; ++v) widened.push_back(v);
    c.pts = std::move(widened);
  }
  return c;
}

std::vector<long> cand_range(const Cand& c, long lo, long hi) {
  std::vector<long> vals;
  for (long v : c.pts) {
    if (v >= lo && v <= hi) vals.push_back(v);
  }
  for (long v = lo; v <= std::min(c.ray_hi, hi); ++v) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

void second_apply_term(const SecondOps& ops, Gen g, long n, const Monomial& mono,
                       const Rational& coeff, FockPoly& out, int slack) {
  const FockPoly v = FockPoly::term(mono, coeff);
  switch (g) {
    case Gen::E: {
      FockPoly piece = v;
      SecondOps::apply_a(n, piece);
      out += piece;
      return;
    }
    case Gen::H: {
      // -2 :a* a:_n + b_n ; pair modes p + q = n
      const Cand ca = a_cands(mono, slack);
      const Cand cs = astar_cands(mono, slack);
      for (long p : cand_range(cs, n - ca.sup(), cs.sup())) {
        const long q = n - p;
        if (!ca.contains(q)) continue;
        FockPoly piece = v;
        if (SecondOps::astar_is_creation(p)) {
          SecondOps::apply_a(q, piece);
          SecondOps::apply_astar(p, piece);
        } else {
          SecondOps::apply_astar(p, piece);
          SecondOps::apply_a(q, piece);
        }
        piece.scale(Rational(-2));
        out += piece;
      }
      FockPoly bp = v;
      ops.apply_b(n, bp);
      out += bp;
      return;
    }
    case Gen::F: {
      // -:a* a* a:_n + K d_z a*|_n + (a* b)_n
      const Cand ca = a_cands(mono, slack);
      const Cand cs = astar_cands(mono, slack);
      const Cand cb = b_cands(mono, slack);
      // triple: p + q + s = n, right-nested; an annihilating outer factor
      // acts on the input before the inner pair does
      for (long p : cand_range(cs, n - cs.sup() - ca.sup(), cs.sup())) {
        for (long q : cand_range(cs, n - p - ca.sup(), cs.sup())) {
          const long s = n - p - q;
          if (!ca.contains(s)) continue;
          FockPoly piece = v;
          if (!SecondOps::astar_is_creation(p)) {
            SecondOps::apply_astar(p, piece);
            if (piece.is_zero()) continue;
          }
          if (SecondOps::astar_is_creation(q)) {
            SecondOps::apply_a(s, piece);
            if (piece.is_zero()) continue;
            SecondOps::apply_astar(q, piece);
          } else {
            SecondOps::apply_astar(q, piece);
            if (piece.is_zero()) continue;
            SecondOps::apply_a(s, piece);
          }
          if (SecondOps::astar_is_creation(p)) SecondOps::apply_astar(p, piece);
          piece.negate();
          out += piece;
        }
      }
      // K d_z a*: coefficient -n a*_n at mode n
      {
        FockPoly piece = v;
        SecondOps::apply_astar(n, piece);
        piece.scale(ops.K * Rational(-n));
        out += piece;
      }
      // (a* b)_n: p + q = n
      for (long p : cand_range(cs, n - cb.sup(), cs.sup())) {
        const long q = n - p;
        if (!cb.contains(q)) continue;
        FockPoly piece = v;
        if (SecondOps::astar_is_creation(p)) {
          ops.apply_b(q, piece);
          SecondOps::apply_astar(p, piece);
        } else {
          SecondOps::apply_astar(p, piece);
          ops.apply_b(q, piece);
        }
        out += piece;
      }
      return;
    }
  }
}

}  // namespace

FockPoly sl2_apply(const Realization& real, Gen g, long mode, const FockPoly& v,
                   const Sl2EvalOpts& opts) {
  FockPoly out;
  for (const auto& t : v.terms()) {
    switch (real.kind) {
      case RealizationKind::FirstFreeField:
      case RealizationKind::JakobsenKac:
        ff_apply_term(real, g, mode, t.mono, t.coeff, out);
        break;
      case RealizationKind::BernardFelder:
        bf_apply_term(real, g, mode, t.mono, t.coeff, out);
        break;
      case RealizationKind::SecondFreeField: {
        SecondOps ops{real.K};
        second_apply_term(ops, g, mode, t.mono, t.coeff, out, opts.slack);
        break;
      }
    }
  }
  return out;
}

std::vector<Monomial> sl2_monomial_grid(int max_degree, int mode_bound, bool with_y) {
  std::vector<VarId> vars;
  for (int m = -mode_bound; m <= mode_bound; ++m) vars.push_back(xv(m));
  if (with_y) {
    for (int m = 1; m <= mode_bound; ++m) vars.push_back(yv(m));
  }
  std::vector<Monomial> grid;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t start, int left) -> void {
    grid.push_back(cur);
    if (left == 0) return;
    for (std::size_t k = start; k < vars.size(); ++k) {
      cur.mul_var(vars[k]);
      self(self, k, left - 1);
      cur.div_var_once(vars[k]);
    }
  };
  rec(rec, 0, max_degree);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {
const char* gen_name(Gen g) { return g == Gen::E ? "e" : g == Gen::H ? "h" : "f"; }

std::string sl2_pair_id(Gen a, long m, Gen b, long p) {
  return std::string("[") + gen_name(a) + "[" + std::to_string(m) + "]," + gen_name(b) + "[" +
         std::to_string(p) + "]]";
}
}  // namespace

Report sl2_relation_check(const Realization& real, int mode_window,
                          const std::vector<Monomial>& test_set, const Sl2EvalOpts& opts) {
  Report rep;
  rep.suite = "sl2-relations";
  rep.params = Params(1, 1, central_value(real) + Rational(2), {Rational(0)});
  const Rational c = central_value(real);

  struct PairCase {
    Gen a;
    long m;
    Gen b;
    long p;
    // expectation: coeff * gen at mode m+p, plus central scalar
    bool has_gen = false;
    Gen rg = Gen::H;
    Rational rc;
    Rational central;
  };
  std::vector<PairCase> pairs;
  for (long m = -mode_window; m <= mode_window; ++m) {
    for (long p = -mode_window; p <= mode_window; ++p) {
      {
        PairCase pc{Gen::E, m, Gen::F, p};
        pc.has_gen = true;
        pc.rg = Gen::H;
        pc.rc = Rational(1);
        if (m + p == 0) pc.central = Rational(m) * c;
        pairs.push_back(pc);
      }
      {
        PairCase pc{Gen::H, m, Gen::E, p};
        pc.has_gen = true;
        pc.rg = Gen::E;
        pc.rc = Rational(2);
        pairs.push_back(pc);
      }
      {
        PairCase pc{Gen::H, m, Gen::F, p};
        pc.has_gen = true;
        pc.rg = Gen::F;
        pc.rc = Rational(-2);
        pairs.push_back(pc);
      }
      if (m < p) {
        PairCase hh{Gen::H, m, Gen::H, p};
        if (m + p == 0) hh.central = Rational(2 * m) * c;
        pairs.push_back(hh);
        pairs.push_back(PairCase{Gen::E, m, Gen::E, p});
        pairs.push_back(PairCase{Gen::F, m, Gen::F, p});
      }
    }
  }

  std::vector<CheckCase> cases(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const PairCase& pc = pairs[k];
    CheckCase cc{sl2_pair_id(pc.a, pc.m, pc.b, pc.p), CaseStatus::Pass, ""};
    for (const auto& mono : test_set) {
      FockPoly v = FockPoly::term(mono, Rational(1));
      FockPoly lhs = sl2_apply(real, pc.a, pc.m, sl2_apply(real, pc.b, pc.p, v, opts), opts);
      lhs -= sl2_apply(real, pc.b, pc.p, sl2_apply(real, pc.a, pc.m, v, opts), opts);
      FockPoly rhs;
      if (pc.has_gen) {
        rhs = sl2_apply(real, pc.rg, pc.m + pc.p, v, opts);
        rhs.scale(pc.rc);
      }
      if (!pc.central.is_zero()) {
        FockPoly piece = v;
        piece.scale(pc.central);
        rhs += piece;
      }
      if (lhs != rhs) {
        lhs -= rhs;
        cc.status = CaseStatus::Fail;
        cc.witness = "v=" + mono.to_string() + " lhs-rhs=" + format_poly(lhs);
        break;
      }
    }
    cases[k] = std::move(cc);
  });
  rep.cases = std::move(cases);
  return rep;
}

Report second_vs_engine_check(const Rational& K, int mode_window,
                              const std::vector<Monomial>& test_set) {
  Report rep;
  rep.suite = "second-vs-engine";
  Params p(1, 1, K + Rational(2), {Rational(0)});
  rep.params = p;
  Engine eng(p);
  const Realization real = Realization::second(K);

  // y_m -> -y[1,m] on states; e -> F, f -> E, h -> -H on generators
  auto psi = [](const FockPoly& v) {
    FockPoly out;
    for (const auto& t : v.terms()) {
      int ysign = 0;
      for (const auto& f : t.mono.factors()) {
        if (f.var.kind == VarKind::Y) ysign += f.exp;
      }
      out.add_term(t.mono, ysign % 2 ? -t.coeff : t.coeff);
    }
    return out;
  };

  for (long m = -mode_window; m <= mode_window; ++m) {
    for (Gen g : {Gen::E, Gen::H, Gen::F}) {
      CurrentLabel mapped = g == Gen::E   ? CurrentLabel::f(1, m)
                            : g == Gen::F ? CurrentLabel::e(1, m)
                                          : CurrentLabel::h(1, m);
      CheckCase cc{std::string(gen_name(g)) + "[" + std::to_string(m) + "] matches " +
                       (g == Gen::H ? "-" : "") + mapped.to_string(),
                   CaseStatus::Pass, ""};
      for (const auto& mono : test_set) {
        FockPoly v = FockPoly::term(mono, Rational(1));
        FockPoly lhs = psi(sl2_apply(real, g, m, v));
        FockPoly rhs = eng.apply(mapped, psi(v));
        if (g == Gen::H) rhs.negate();
        if (lhs != rhs) {
          lhs -= rhs;
          cc.status = CaseStatus::Fail;
          cc.witness = "v=" + mono.to_string() + " diff=" + format_poly(lhs);
          break;
        }
      }
      rep.cases.push_back(std::move(cc));
    }
  }
  rep.add("central scalar matches the level", central_value(real) == eng.level());
  return rep;
}

}  // namespace iw::sl2
