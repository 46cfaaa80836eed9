#ifndef IW_FOCK_HPP
#define IW_FOCK_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iw/rational.hpp"

namespace iw {

/*
 * The Fock space is the polynomial ring in the indexed variables
 *
 *   x[i,j,m]   1 <= i <= j <= n,  m in Z
 *   y[i,m]     1 <= i <= n,       m >= 1
 *
 * with exact rational coefficients.  Monomials are kept in a canonical
 * sorted form (x-variables before y-variables, lexicographic on the index
 * tuple), polynomials as sorted term lists with no zero coefficients.
 */

struct Params {
  int n = 1;                      // rank, algebra is affine sl(n+1)
  int r = 0;                      // 0 <= r <= n
  Rational gamma2;                // the value gamma^2
  std::vector<Rational> lambda;   // lambda_1..lambda_n

  Params() = default;
  Params(int n_, int r_, Rational g2, std::vector<Rational> lam);

  // level k = gamma^2 - (r+1); derived, never stored
  Rational level() const { return gamma2 - Rational(r + 1); }

  void validate() const;  // throws std::invalid_argument
};

enum class VarKind : std::uint8_t { X = 0, Y = 1 };

struct VarId {
  VarKind kind = VarKind::X;
  std::uint8_t i = 1, j = 1;  // Y uses only i (j stays 0)
  int m = 0;

  static VarId x(int i, int j, int m);
  static VarId y(int i, int m);

  friend auto operator<=>(const VarId&, const VarId&) = default;

  void check_bounds(const Params& p) const;  // throws std::out_of_range
  std::string to_string() const;
};

struct Weight {
  std::vector<int> root_offset;  // coefficients of the simple roots
  long delta_deg = 0;

  explicit Weight(int n = 0) : root_offset(static_cast<std::size_t>(n), 0) {}

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
  std::string to_string() const;
};

class Monomial {
 public:
  struct Factor {
    VarId var;
    int exp = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;  // the vacuum "1"

  bool is_vacuum() const { return factors_.empty(); }
  int degree() const;
  int exponent(const VarId& v) const;
  const std::vector<Factor>& factors() const { return factors_; }

  // these keep the factor list sorted
  void mul_var(const VarId& v, int e = 1);
  // true and decrements if the variable is present, false otherwise
  bool div_var_once(const VarId& v);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // multiplication-compatible total order (exponent-vector lex)
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

class FockPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FockPoly() = default;
  static FockPoly vacuum() { return constant(Rational(1)); }
  static FockPoly constant(Rational c);
  static FockPoly variable(const VarId& v);
  static FockPoly term(Monomial m, Rational c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  FockPoly& operator+=(const FockPoly& o);
  FockPoly& operator-=(const FockPoly& o);
  friend FockPoly operator+(FockPoly a, const FockPoly& b) { return a += b; }
  friend FockPoly operator-(FockPoly a, const FockPoly& b) { return a -= b; }
  friend FockPoly operator*(const FockPoly& a, const FockPoly& b);

  void negate();
  void scale(const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  // multiply every term by variable v (order-preserving, no re-sort)
  void mul_var(const VarId& v);
  // formal partial derivative with respect to v
  void d_var(const VarId& v);

  friend bool operator==(const FockPoly&, const FockPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // sorted by Monomial order, no zero coefficients
};

// Per-variable grading that makes every realized current homogeneous:
//   x[i,j,m], j <= r, m >= 0   ->  (+alpha_[i,j], -m)
//   x[i,j,m], j <= r, m <  0   ->  (-alpha_[i,j],  m)
//   x[i,j,m], j >  r           ->  (-alpha_[i,j],  m)
//   y[i,m]                     ->  (0, -m)
// where alpha_[i,j] = alpha_i + ... + alpha_j.
Weight weight_of_var(const VarId& v, const Params& p);
Weight weight_of(const Monomial& m, const Params& p);

// Grammar (whitespace insignificant):
//   poly   := term (('+'|'-') term)*  with an optional leading '-'
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   coeff  := integer | integer '/' positive-integer
//   factor := 'x[' i ',' j ',' m ']' ('^' e)? | 'y[' i ',' m ']' ('^' e)?
// The literal 1 denotes the vacuum monomial.
FockPoly parse_poly(std::string_view text, const Params& p);  // throws std::invalid_argument
std::string format_poly(const FockPoly& p);

}  // namespace iw

#endif
