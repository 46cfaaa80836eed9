#ifndef IW_RELATIONS_HPP
#define IW_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "iw/currents.hpp"
#include "iw/report.hpp"

namespace iw {

/*
 * Mechanical verification of the defining current relations as applied
 * operators on finite monomial grids, exactly:
 *
 *   R1  [H_{i,m}, H_{j,p}] = m (a_i|a_j) c delta_{m+p,0}
 *   R2  [H_{i,m}, E_{j,p}] =  (a_i|a_j) E_{j,m+p}
 *   R3  [H_{i,m}, F_{j,p}] = -(a_i|a_j) F_{j,m+p}
 *   R4  [E_{i,m}, F_{j,p}] = delta_ij (H_{i,m+p} + c m delta_{m+p,0})
 *   R5  [E_{i,m}, E_{j,p}] = [F_{i,m}, F_{j,p}] = 0   if (a_i|a_j) != -1
 *   R6  [X_{i,m1},[X_{i,m2},X_{j,p}]] = 0, X in {E,F}, if (a_i|a_j) = -1
 *
 * plus the iterated-F root-vector identity, the vacuum annihilation suite,
 * and weight homogeneity.  Verification is pointwise on test sets; failures
 * carry the first failing vector as a witness.
 */

struct BracketExpectation {
  std::vector<std::pair<CurrentLabel, Rational>> currents;
  Rational central;  // coefficient of the central action (the level scalar)
};

// R1-R5 expectation for [x, y]; nullopt when the pair is governed by the
// Engel relation R6 instead (same-kind adjacent indices)
std::optional<BracketExpectation> expected_bracket(const CurrentLabel& x, const CurrentLabel& y,
                                                   const Params& p);

// all monomials of degree <= max_degree in x[i,j,m] (|m| <= mode_bound) and
// y[i,m] (1 <= m <= mode_bound), vacuum first, deterministic order
std::vector<Monomial> monomial_grid(const Params& p, int max_degree, int mode_bound);

Report check_commutator(const Engine& eng, const CurrentLabel& x, const CurrentLabel& y,
                        const BracketExpectation& expect, const std::vector<Monomial>& test_set,
                        const EvalOpts& opts = {});

// [X_{i,m1}, [X_{i,m2}, X_{j,p}]] = 0; requires (a_i|a_j) = -1
Report check_serre_engel(const Engine& eng, CurrentKind kind, int i, int j, long m1, long m2,
                         long p, const std::vector<Monomial>& test_set,
                         const EvalOpts& opts = {});

// nested [F_i, F_{i-1}, ..., F_j] at total mode M against the closed-form
// word a[j,i,M] + sum_{q>i} sum_p a[j,q,p] a*[i+1,q,M-p]; every splitting of
// M across the chain with inner modes bounded by split_window is checked
Report check_f_root_bracket(const Engine& eng, int i, int j, long total_mode, int split_window,
                            const std::vector<Monomial>& test_set, const EvalOpts& opts = {});

// applies a right-nested current bracket [c_0, [c_1, [... c_{k-1}]]] to v
FockPoly nested_bracket_apply(const Engine& eng, const std::vector<CurrentLabel>& chain,
                              const FockPoly& v, const EvalOpts& opts = {});

// vacuum annihilation by the windowed annihilator Borel of the realization:
// F_{i,m} (i<=r, 0<=m<=W), E_{i,m} (i<=r, 1<=m<=W), E_{i,m} (i>r, |m|<=W),
// H_{i,m} (1<=m<=W), depth-2/3 E-brackets for the non-diagonal roots, plus
// the H_{i,0} and c eigenvalues
Report check_highest_weight(const Engine& eng, int mode_window, const EvalOpts& opts = {});

struct SuiteConfig {
  int mode_window = 3;      // current modes for R1-R5
  int degree_bound = 2;     // test monomial degree for R1-R5
  int var_mode_bound = 3;   // test monomial variable modes
  int ccr_window = 0;       // >0 adds the oscillator CCR block
  // Engel block (R6): all mode triples |.| <= engel_mode_window run on
  // monomials of degree <= engel_degree; additionally all triples with
  // |.| <= engel_dense_mode_cap run on degree <= degree_bound monomials
  // with variable modes <= engel_dense_var_modes.
  int engel_mode_window = 3;
  int engel_degree = 1;
  int engel_dense_mode_cap = 1;
  int engel_dense_var_modes = 2;
  int root_bracket_total = 2;   // |M| bound for the root-vector identity
  int root_bracket_window = 2;  // inner splitting window and its grid modes
  int highest_weight_window = 3;
  bool weight_homogeneity = true;
  EvalOpts eval;
};

Report run_suite(const Params& p, const SuiteConfig& cfg = {});

}  // namespace iw

#endif
