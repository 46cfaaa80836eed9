#ifndef IW_CURRENTS_HPP
#define IW_CURRENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "iw/fock.hpp"
#include "iw/oscillator.hpp"

namespace iw {

/*
 * Realized currents on the Fock space, one evaluation plan per generator:
 *
 *   F_i = a[i,i] + sum_{j>i} a[i,j] a*[i+1,j]
 *   H_i = 2:a[i,i]a*[i,i]: + sum_{j<i} (:a[j,i]a*[j,i]: - :a[j,i-1]a*[j,i-1]:)
 *       + sum_{j>i} (:a[i,j]a*[i,j]: - :a[i+1,j]a*[i+1,j]:) + b[i]
 *   E_i = sum_{k<i} :a*[i,i]a[k,i-1]a*[k,i-1]: - sum_{k<=i} :a*[i,i]a[k,i]a*[k,i]:
 *       + sum_{k>i} a[i+1,k]a*[i,k] - sum_{k<i} a[k,i-1]a*[k,i]
 *       - a*[i,i]b[i] - ((r+1 if i>r else i+1) - gamma2) da*[i,i]
 *   c   = gamma2 - (r+1)   (a scalar)
 *
 * Modes are extracted from a(z), b(z) ~ z^{-m-1}, a*(z) ~ z^{-m}; the da*
 * term carries the z-derivative factor -m at mode m.  Nested normal order
 * is evaluated right to left.
 */

enum class CurrentKind { E, F, H, C };

struct CurrentLabel {
  CurrentKind kind = CurrentKind::C;
  int i = 0;   // absent for C
  long m = 0;  // absent for C

  static CurrentLabel e(int i, long m) { return {CurrentKind::E, i, m}; }
  static CurrentLabel f(int i, long m) { return {CurrentKind::F, i, m}; }
  static CurrentLabel h(int i, long m) { return {CurrentKind::H, i, m}; }
  static CurrentLabel c() { return {CurrentKind::C, 0, 0}; }

  std::string to_string() const;
};

struct PlanTerm {
  NormalWord word;
  Rational coeff;
  bool z_deriv = false;  // the da*[i,i] summand; mode m picks up a factor -m
};

struct CurrentPlan {
  std::vector<PlanTerm> terms;
};

// root-lattice weight carried by a current at mode m: (+alpha_i, m) for E_i,
// (-alpha_i, m) for F_i, (0, m) for H_i
Weight current_weight(const CurrentLabel& label, const Params& p);

class Engine {
 public:
  explicit Engine(Params p);

  const Params& params() const { return p_; }
  const BMatrix& bmatrix() const { return B_; }
  Rational level() const { return p_.level(); }

  const CurrentPlan& plan(CurrentKind kind, int i) const;

  FockPoly apply(const CurrentLabel& label, const FockPoly& v, const EvalOpts& opts = {}) const;
  FockPoly apply_osc(const OscLabel& op, const FockPoly& v) const;

  // (lambda_1..lambda_n, gamma2-(r+1)); verified against the operators by
  // direct application to the vacuum before returning
  std::pair<std::vector<Rational>, Rational> vacuum_eigenvalues() const;

 private:
  Params p_;
  BMatrix B_;
  std::vector<CurrentPlan> plans_e_, plans_f_, plans_h_;
};

}  // namespace iw

#endif
