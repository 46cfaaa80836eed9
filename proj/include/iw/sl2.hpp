#ifndef IW_SL2_HPP
#define IW_SL2_HPP

#include <map>
#include <string>
#include <vector>

#include "iw/fock.hpp"
#include "iw/report.hpp"

namespace iw::sl2 {

/*
 * Rank-one laboratory.  Two independent models live here:
 *
 *  - V(0): the quotient of the level-zero module with trivial highest weight
 *    by the submodule generated by the negative Cartan modes, with basis
 *    f_{s_1}...f_{s_k}|0> (the f's commute).  Generators act by commuting
 *    through: [h_j, f_s] = -2 f_{j+s}, [e_j, f_s] = h_{j+s} + j d_{j+s,0} c,
 *    h_m|0> = 0, e_m|0> = 0, c = 0.  This is the oracle every explicit
 *    realization is tested against.
 *
 *  - four free-field realizations on polynomial spaces in x_m (m in Z) and,
 *    where applicable, y_m (m > 0), encoded as the rank-one Fock variables
 *    x[1,1,m] and y[1,m].
 */

struct FMonomial {
  std::vector<long> modes;  // sorted ascending

  void insert(long s);
  friend bool operator==(const FMonomial&, const FMonomial&) = default;
  friend auto operator<=>(const FMonomial&, const FMonomial&) = default;
  std::string to_string() const;
};

class VPoly {
 public:
  VPoly() = default;
  static VPoly basis(FMonomial m) { return term(std::move(m), Rational(1)); }
  static VPoly term(FMonomial m, Rational c);
  static VPoly vacuum() { return basis(FMonomial{}); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<FMonomial, Rational>>& terms() const { return terms_; }
  void add_term(const FMonomial& m, const Rational& c);
  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  void scale(const Rational& c);
  friend bool operator==(const VPoly&, const VPoly&) = default;
  std::string to_string() const;

 private:
  std::vector<std::pair<FMonomial, Rational>> terms_;  // sorted, no zeros
};

enum class Gen { E, H, F };

VPoly v0_apply(Gen g, long mode, const VPoly& v);

// v_r(s) = sum_{sigma in Sym(r)} sgn(sigma) f_{s_0+sigma(0)} ... f_{s_{r-1}+sigma(r-1)}
VPoly wilson_vector(int r, const std::vector<long>& s);

struct SingularityResult {
  bool e_annihilated = true;
  bool h_annihilated = true;
  std::string e_witness, h_witness;
};

// e_i v = 0 for |i| <= window; h_j v = 0 for 1 <= j <= window
SingularityResult singularity_check(const VPoly& v, int mode_window);

// joint kernel of the e_i (|i| <= window) on span{f_{t_1}..f_{t_r} : sum = N,
// |t_i| <= window}; only boundary-safe e_i rows are imposed, i.e. those whose
// images stay inside the mode window on every basis vector
std::vector<VPoly> singular_space_kernel(int count, long total_shift, int mode_window);

// exact membership of v in the span of the given vectors
bool in_span(const VPoly& v, const std::vector<VPoly>& basis);

// ---- free-field realizations ----------------------------------------------

enum class RealizationKind { FirstFreeField, JakobsenKac, BernardFelder, SecondFreeField };

struct Realization {
  RealizationKind kind = RealizationKind::FirstFreeField;
  Rational K, J;                        // BernardFelder(K, J), SecondFreeField(K)
  std::map<long, Rational> lambda_seq;  // JakobsenKac modes (absent = 0)

  static Realization first();
  static Realization jakobsen_kac(std::map<long, Rational> lam);
  static Realization bernard_felder(Rational K, Rational J);
  static Realization second(Rational K);
};

// scalar action of the central element: 0, 0, K, K
Rational central_value(const Realization& real);

struct Sl2EvalOpts {
  int slack = 0;
};

// exact image of v (a polynomial in x[1,1,m], y[1,m]) under the generator
FockPoly sl2_apply(const Realization& real, Gen g, long mode, const FockPoly& v,
                   const Sl2EvalOpts& opts = {});

std::vector<Monomial> sl2_monomial_grid(int max_degree, int mode_bound, bool with_y);

// modewise commutator verification of the rank-one relations with the
// realization's central scalar
Report sl2_relation_check(const Realization& real, int mode_window,
                          const std::vector<Monomial>& test_set, const Sl2EvalOpts& opts = {});

// SecondFreeField(K) against the general engine at n = r = 1, gamma2 = K+2,
// lambda = (0), under the relabeling e -> F, f -> E, h -> -H, y_m -> -y[1,m]
Report second_vs_engine_check(const Rational& K, int mode_window,
                              const std::vector<Monomial>& test_set);

}  // namespace iw::sl2

#endif
