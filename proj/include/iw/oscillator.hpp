#ifndef IW_OSCILLATOR_HPP
#define IW_OSCILLATOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "iw/fock.hpp"
#include "iw/report.hpp"

namespace iw {

/*
 * Elementary oscillator modes acting on the Fock space:
 *
 *   a[i,j,m]   = d/dx[i,j,m]          if m >= 0 and j <= r,
 *                x[i,j,m]*            otherwise
 *   a*[i,j,m]  = x[i,j,-m]*           if m <= 0 and j <= r,
 *                -d/dx[i,j,-m]        otherwise
 *   b[i,0]     = lambda_i
 *   b[i,-m]    = y[i,m]*              (m > 0)
 *   b[i,m]     = m * sum_j B[i][j] d/dy[j,m]   (m > 0)
 *
 * so [a[i,j,m], a*[k,l,p]] = delta_ik delta_jl delta_{m+p,0} and
 * [b[i,m], b[j,p]] = m B[i][j] delta_{m+p,0}.  For j > r the a-modes are
 * pure creation and the a*-modes pure annihilation for every m.
 */

enum class OscKind { A, AStar, B };

struct OscLabel {
  OscKind kind = OscKind::A;
  int i = 1, j = 1;  // B uses only i
  long m = 0;

  static OscLabel a(int i, int j, long m) { return {OscKind::A, i, j, m}; }
  static OscLabel a_star(int i, int j, long m) { return {OscKind::AStar, i, j, m}; }
  static OscLabel b(int i, long m) { return {OscKind::B, i, 0, m}; }

  void check_bounds(const Params& p) const;
  std::string to_string() const;
};

enum class OpClass { Creation, Annihilation, Scalar };

// Total creation/annihilation classification; b[i,0] is the scalar lambda_i.
OpClass classify(OscKind kind, int j, long m, int r);

struct BMatrix {
  int n = 0;
  std::vector<Rational> entries;  // row-major n*n

  const Rational& at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
  Rational& at(int i, int j) { return entries[(i - 1) * n + (j - 1)]; }
};

// Cartan matrix entry (alpha_i | alpha_j) of sl(n+1).
int cartan(int i, int j);

// Builds B both from the entrywise formula
//   B_ij = (alpha_i|alpha_j) (gamma2 - d_{i>r} d_{j>r} (r+1) + (r/2) d_{i,r+1} d_{j,r+1})
// and from the matrix form gamma2*A_n - (r+1)*(0 (+) A_{n-r}) + r*E_{r+1,r+1},
// and insists the two agree.
BMatrix build_b_matrix(const Params& p);  // throws std::logic_error on disagreement

// closed form (n+1) gamma2^r (gamma2 - r - 1)^{n-r} with 0^0 = 1, and the
// exact fraction-free elimination value, returned for comparison
std::pair<Rational, Rational> det_b(const Params& p);

FockPoly apply_oscillator(const OscLabel& op, const FockPoly& v, const Params& p);
FockPoly apply_oscillator(const OscLabel& op, const FockPoly& v, const Params& p,
                          const BMatrix& B);

/*
 * Normal-ordered words.  A word lists oscillator fields (modes left open);
 * apply_normal_word sums the normal-ordered composite over all mode
 * splittings consistent with the target mode, using the z-expansions
 * a(z) = sum a_m z^{-m-1}, b(z) = sum b_m z^{-m-1}, a*(z) = sum a*_m z^{-m}.
 * Only finitely many splittings act nonzero on a polynomial; the candidate
 * ranges are derived from the input's variable support (annihilation side)
 * and sign constraints (creation side).  EvalOpts::slack widens every
 * derived range; widening never changes the result.
 */
struct WordFactor {
  OscKind kind = OscKind::A;
  int i = 1, j = 1;
};

struct NormalWord {
  std::vector<WordFactor> factors;
};

struct EvalOpts {
  int slack = 0;
};

FockPoly apply_normal_word(const NormalWord& w, long target_mode, const FockPoly& v,
                           const Params& p, const BMatrix& B, const EvalOpts& opts = {});

// adds scale * (the word applied to v at target_mode) onto out
void accumulate_normal_word(const NormalWord& w, long target_mode, const FockPoly& v,
                            const Params& p, const BMatrix& B, const Rational& scale,
                            FockPoly& out, const EvalOpts& opts = {});

// Canonical commutation relations as applied operators, exactly, for all
// label pairs with |mode| <= mode_window on every test vector.
Report ccr_check(const Params& p, int mode_window, const std::vector<FockPoly>& test_set);

}  // namespace iw

#endif
