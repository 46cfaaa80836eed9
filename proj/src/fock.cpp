#include "iw/fock.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace iw {

Params::Params(int n_, int r_, Rational g2, std::vector<Rational> lam)
    : n(n_), r(r_), gamma2(std::move(g2)), lambda(std::move(lam)) {
  validate();
}

void Params::validate() const {
  if (n < 1) throw std::invalid_argument("Params: n must be positive");
  if (r < 0 || r > n) throw std::invalid_argument("Params: need 0 <= r <= n");
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("Params: lambda must have n entries");
}

VarId VarId::x(int i, int j, int m) {
  if (i < 1 || j < i || j > 255) throw std::out_of_range("x variable: need 1 <= i <= j");
  VarId v;
  v.kind = VarKind::X;
  v.i = static_cast<std::uint8_t>(i);
  v.j = static_cast<std::uint8_t>(j);
  v.m = m;
  return v;
}

VarId VarId::y(int i, int m) {
  if (i < 1 || i > 255) throw std::out_of_range("y variable: need i >= 1");
  if (m < 1) throw std::out_of_range("y variable: mode must be >= 1");
  VarId v;
  v.kind = VarKind::Y;
  v.i = static_cast<std::uint8_t>(i);
  v.j = 0;
  v.m = m;
  return v;
}

void VarId::check_bounds(const Params& p) const {
  if (kind == VarKind::X) {
    if (i < 1 || i > j || j > p.n) throw std::out_of_range("x variable index out of bounds");
  } else {
    if (i < 1 || i > p.n) throw std::out_of_range("y variable index out of bounds");
    if (m < 1) throw std::out_of_range("y variable mode must be positive");
  }
}

std::string VarId::to_string() const {
  if (kind == VarKind::X) {
    return "x[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + "]";
  }
  return "y[" + std::to_string(i) + "," + std::to_string(m) + "]";
}

Weight& Weight::operator+=(const Weight& o) {
  if (root_offset.size() != o.root_offset.size())
    throw std::invalid_argument("Weight: rank mismatch");
  for (std::size_t k = 0; k < root_offset.size(); ++k) root_offset[k] += o.root_offset[k];
  delta_deg += o.delta_deg;
  return *this;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < root_offset.size(); ++k) {
    out += std::to_string(root_offset[k]);
    out += ",";
  }
  out += "; " + std::to_string(delta_deg) + ")";
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

int Monomial::exponent(const VarId& v) const {
  for (const auto& f : factors_) {
    if (f.var == v) return f.exp;
  }
  return 0;
}

void Monomial::mul_var(const VarId& v, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VarId& w) { return f.var < w; });
  if (it != factors_.end() && it->var == v) {
    it->exp += e;
    if (it->exp == 0) factors_.erase(it);
    return;
  }
  factors_.insert(it, Factor{v, e});
}

bool Monomial::div_var_once(const VarId& v) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VarId& w) { return f.var < w; });
  if (it == factors_.end() || !(it->var == v)) return false;
  if (--it->exp == 0) factors_.erase(it);
  return true;
}

// Exponent-vector lexicographic order (ascending variables, larger exponent
// first); compatible with multiplication by a fixed monomial, which is what
// lets mul_var/d_var transform sorted term lists in place.
std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  const std::size_t common = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (fa[k].var != fb[k].var)
      return fa[k].var < fb[k].var ? std::strong_ordering::less : std::strong_ordering::greater;
    if (fa[k].exp != fb[k].exp)
      return fa[k].exp > fb[k].exp ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (fa.size() != fb.size())
    return fa.size() > fb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.var.to_string();
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

FockPoly FockPoly::constant(Rational c) {
  FockPoly p;
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(), std::move(c)});
  return p;
}

FockPoly FockPoly::variable(const VarId& v) {
  Monomial m;
  m.mul_var(v);
  return term(std::move(m), Rational(1));
}

FockPoly FockPoly::term(Monomial m, Rational c) {
  FockPoly p;
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

FockPoly& FockPoly::operator+=(const FockPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() && b < o.terms_.size()) {
    auto cmp = terms_[a].mono <=> o.terms_[b].mono;
    if (cmp == std::strong_ordering::less) {
      out.push_back(std::move(terms_[a++]));
    } else if (cmp == std::strong_ordering::greater) {
      out.push_back(o.terms_[b++]);
    } else {
      Rational c = terms_[a].coeff + o.terms_[b].coeff;
      if (!c.is_zero()) out.push_back(Term{std::move(terms_[a].mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a < terms_.size(); ++a) out.push_back(std::move(terms_[a]));
  for (; b < o.terms_.size(); ++b) out.push_back(o.terms_[b]);
  terms_ = std::move(out);
  return *this;
}

FockPoly& FockPoly::operator-=(const FockPoly& o) {
  FockPoly neg = o;
  neg.negate();
  return *this += neg;
}

void FockPoly::negate() {
  for (auto& t : terms_) t.coeff = -t.coeff;
}

void FockPoly::scale(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  if (c.is_one()) return;
  for (auto& t : terms_) t.coeff *= c;
}

void FockPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& mm) { return t.mono < mm; });
  if (it != terms_.end() && it->mono == m) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
    return;
  }
  terms_.insert(it, Term{m, c});
}

FockPoly operator*(const FockPoly& a, const FockPoly& b) {
  FockPoly out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.mono;
      for (const auto& f : tb.mono.factors()) m.mul_var(f.var, f.exp);
      out.add_term(m, ta.coeff * tb.coeff);
    }
  }
  return out;
}

void FockPoly::mul_var(const VarId& v) {
  for (auto& t : terms_) t.mono.mul_var(v);
}

void FockPoly::d_var(const VarId& v) {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m = std::move(t.mono);
    m.div_var_once(v);
    out.push_back(Term{std::move(m), t.coeff * Rational(e)});
  }
  terms_ = std::move(out);
}

std::string FockPoly::to_string() const { return format_poly(*this); }

Weight weight_of_var(const VarId& v, const Params& p) {
  v.check_bounds(p);
  Weight w(p.n);
  if (v.kind == VarKind::Y) {
    w.delta_deg = -v.m;
    return w;
  }
  const bool positive_side = v.j <= p.r && v.m >= 0;
  const int dir = positive_side ? 1 : -1;
  for (int k = v.i; k <= v.j; ++k) w.root_offset[k - 1] = dir;
  w.delta_deg = positive_side ? -v.m : v.m;
  return w;
}

Weight weight_of(const Monomial& m, const Params& p) {
  Weight w(p.n);
  for (const auto& f : m.factors()) {
    Weight wf = weight_of_var(f.var, p);
    for (int e = 0; e < f.exp; ++e) w += wf;
  }
  return w;
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  long long integer(bool allow_sign) {
    skip();
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::string(s.substr(start, pos - start));
  }
};

VarId parse_var(Lexer& lx, const Params& p) {
  char kind = lx.peek();
  ++lx.pos;
  lx.expect('[');
  VarId v;
  if (kind == 'x') {
    long long i = lx.integer(false);
    lx.expect(',');
    long long j = lx.integer(false);
    lx.expect(',');
    long long m = lx.integer(true);
    v = VarId::x(static_cast<int>(i), static_cast<int>(j), static_cast<int>(m));
  } else {
    long long i = lx.integer(false);
    lx.expect(',');
    long long m = lx.integer(true);
    v = VarId::y(static_cast<int>(i), static_cast<int>(m));
  }
  lx.expect(']');
  v.check_bounds(p);
  return v;
}

// one term: optional coefficient, '*'-joined factors, '^' exponents
FockPoly parse_term(Lexer& lx, const Params& p) {
  Rational coeff(1);
  Monomial mono;
  bool first = true;
  for (;;) {
    char c = lx.peek();
    if (first && std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lx.digits();
      if (lx.accept('/')) {
        std::string den = lx.digits();
        coeff = Rational(BigInt::from_string(num), BigInt::from_string(den));
      } else {
        coeff = Rational(BigInt::from_string(num), BigInt(1));
      }
    } else if (c == 'x' || c == 'y') {
      VarId v = parse_var(lx, p);
      int e = 1;
      if (lx.accept('^')) {
        long long ee = lx.integer(false);
        if (ee < 1) lx.fail("exponent must be positive");
        e = static_cast<int>(ee);
      }
      mono.mul_var(v, e);
    } else {
      lx.fail("expected coefficient or variable");
    }
    first = false;
    if (!lx.accept('*')) break;
  }
  return FockPoly::term(std::move(mono), std::move(coeff));
}

}  // namespace

FockPoly parse_poly(std::string_view text, const Params& p) {
  Lexer lx{text};
  FockPoly out;
  bool negate = lx.accept('-');
  for (;;) {
    FockPoly t = parse_term(lx, p);
    if (negate) t.negate();
    out += t;
    if (lx.accept('+')) {
      negate = false;
    } else if (lx.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  if (!lx.eof()) lx.fail("trailing input");
  return out;
}

std::string format_poly(const FockPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff.sign() < 0;
    Rational c = neg ? -t.coeff : t.coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (t.mono.is_vacuum()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += t.mono.to_string();
    } else {
      out += c.to_string() + "*" + t.mono.to_string();
    }
  }
  return out;
}

}  // namespace iw
