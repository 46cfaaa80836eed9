#ifndef IW_STRUCTURE_HPP
#define IW_STRUCTURE_HPP

#include <map>
#include <string>
#include <vector>

#include "iw/currents.hpp"
#include "iw/report.hpp"

namespace iw {

/*
 * Structural checks at finite truncation: the generator-level bijection
 * between the PBW directions complementary to the annihilator Borel of the
 * realization and the Fock variables; the constructive generation of the
 * whole space from the small subspace
 *
 *   W_a = C_r[x] (x) C_r[y]   (x-variables with j <= r, y-variables with i <= r)
 *
 * by witness programs; and a semi-decision probe for the intersection of a
 * cyclic submodule with W_a.
 */

using WeightCensus = std::map<Weight, long long>;

std::string census_to_string(const WeightCensus& c);

// PBW directions complementary to the annihilator Borel, windowed:
//   -alpha_[i,j] (j > r), |m| <= W;   +alpha_[i,j] (j <= r), -W <= m <= 0;
//   -alpha_[i,j] (j <= r), -W <= m < 0;   Cartan directions, -W <= m < 0.
WeightCensus complement_census(const Params& p, int mode_window);

// Fock variables x[i,j,m] (|m| <= W) and y[i,m] (m <= W) graded by weight_of
WeightCensus fock_variable_census(const Params& p, int mode_window);

// symmetric-algebra monomials with at most max_factors generator factors,
// bucketed by total weight, restricted to |delta degree| <= delta_bound
WeightCensus monomial_census(const WeightCensus& generators, int max_factors, int delta_bound);

Report character_compare(const Params& p, int mode_window, int delta_bound);

// ---- generation -----------------------------------------------------------

struct WitnessStep {
  enum class Kind { ApplyCurrent, ApplyFBracket, Subtract };
  Kind kind = Kind::ApplyCurrent;
  CurrentLabel label;                  // ApplyCurrent
  int top = 0, bottom = 0;             // ApplyFBracket: nested [F_top, ..., F_bottom]
  long mode = 0;                       //   at this total mode (outer factor carries it)
  FockPoly subtrahend;                 // Subtract
  std::string to_string() const;
};

struct WitnessProgram {
  Monomial target;
  FockPoly seed;  // element of W_a
  std::vector<WitnessStep> steps;
};

// constructs and verifies a program taking the seed to exactly the target;
// throws std::out_of_range for bad indices, std::logic_error if verification
// fails (which would signal an engine bug, not a user error)
WitnessProgram generation_witness(const Engine& eng, const Monomial& target);
WitnessProgram generation_witness(const Monomial& target, const Params& p);

FockPoly execute_witness(const Engine& eng, const WitnessProgram& prog);

// every windowed monomial of degree <= degree_bound is reached by a verified
// witness program
Report generation_check(const Params& p, int mode_window, int degree_bound);

// ---- submodule probe ------------------------------------------------------

struct ProbeResult {
  bool found = false;
  FockPoly vector;  // nonzero, supported on W_a monomials, when found
  Report report;
};

// spans images of v under current words (length <= length_bound, modes
// |m| <= mode_window, images graded-truncated at |delta| <= grade_bound) and
// intersects with the W_a coordinate subspace; FOUND vectors genuinely lie in
// the cyclic span, INCONCLUSIVE is the only negative verdict
ProbeResult submodule_probe(const FockPoly& v, const Params& p, int mode_window, int grade_bound,
                            int length_bound);

bool is_wa_monomial(const Monomial& m, const Params& p);

}  // namespace iw

#endif
