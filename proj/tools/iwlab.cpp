// iwlab: batch front end for the free-field realization toolkit.
//
// Subcommands mirror the library suites: verify relations / highest-weight,
// matrix det-b, character compare, generate witness / check, probe submodule,
// sl2 singular / realization.  Reports are deterministic text or JSON; the
// exit code is 0 when every check passes (inconclusive probes are marked but
// do not fail the run), 1 on a failed check, 2 on bad flags.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "iw/relations.hpp"
#include "iw/sl2.hpp"
#include "iw/structure.hpp"

using namespace iw;

namespace {

struct CommonOpts {
  int n = 1;
  int r = 0;
  std::string gamma2 = "9/4";
  std::string lambda;
  int mode_window = 3;
  int degree = 2;
  int delta_bound = 3;
  int grade_bound = 4;
  int length_bound = 2;
  int slack = 0;
  std::string report = "text";
  std::string out;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "rank (algebra is affine sl(n+1))");
  cmd->add_option("--r", o.r, "intermediate parameter, 0 <= r <= n");
  cmd->add_option("--gamma2", o.gamma2, "gamma^2 as p/q or integer");
  cmd->add_option("--lambda", o.lambda, "comma list of n rationals (default: zeros)");
}

void add_report_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--report", o.report, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "write the report to this path instead of stdout");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', pos);
    std::string piece =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    out.push_back(Rational::from_string(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Params make_params(const CommonOpts& o) {
  std::vector<Rational> lam;
  if (!o.lambda.empty()) {
    lam = parse_rational_list(o.lambda);
  } else {
    lam.assign(static_cast<std::size_t>(o.n), Rational(0));
  }
  return Params(o.n, o.r, Rational::from_string(o.gamma2), std::move(lam));
}

int emit(const Report& rep, const CommonOpts& o) {
  std::string body = o.report == "json" ? rep.to_json() : rep.to_text();
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    f << body;
  }
  return rep.failed() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for boson realizations of affine sl(n+1)"};
  app.require_subcommand(1);

  CommonOpts o;
  int run_code = 0;
  bool full_engel = false;
  std::string target_text, vector_text, kind_text = "second", k_text = "1", j_text = "0";
  std::string lambda_seq_text, shifts_text = "0";
  int wilson_r = 1, check_window = 4;

  // verify
  auto* verify = app.add_subcommand("verify", "relation and highest-weight suites");
  verify->require_subcommand(1);
  auto* vrel = verify->add_subcommand("relations", "defining relations R1-R6 plus companions");
  add_param_flags(vrel, o);
  add_report_flags(vrel, o);
  vrel->add_option("--mode-window", o.mode_window, "current mode window");
  vrel->add_option("--degree", o.degree, "test monomial degree");
  vrel->add_option("--slack", o.slack, "widen all derived mode ranges");
  vrel->add_flag("--full-engel", full_engel,
                 "run the Engel block on the full degree grid (slow)");
  vrel->callback([&] {
    Params p = make_params(o);
    SuiteConfig cfg;
    cfg.mode_window = o.mode_window;
    cfg.degree_bound = o.degree;
    cfg.var_mode_bound = o.mode_window;
    cfg.ccr_window = o.mode_window;
    cfg.engel_mode_window = o.mode_window;
    if (full_engel) {
      cfg.engel_degree = o.degree;
      cfg.engel_dense_mode_cap = o.mode_window;
    }
    cfg.eval.slack = o.slack;
    run_code = emit(run_suite(p, cfg), o);
  });
  auto* vhw = verify->add_subcommand("highest-weight", "vacuum annihilation and eigenvalues");
  add_param_flags(vhw, o);
  add_report_flags(vhw, o);
  vhw->add_option("--mode-window", o.mode_window, "generator mode window");
  vhw->callback([&] {
    Params p = make_params(o);
    Engine eng(p);
    run_code = emit(check_highest_weight(eng, o.mode_window), o);
  });

  // matrix det-b
  auto* matrix = app.add_subcommand("matrix", "the boson inner-product matrix");
  matrix->require_subcommand(1);
  auto* detb = matrix->add_subcommand("det-b", "closed-form determinant vs elimination");
  add_param_flags(detb, o);
  add_report_flags(detb, o);
  detb->callback([&] {
    Params p = make_params(o);
    auto [closed, elim] = det_b(p);
    Report rep;
    rep.suite = "det-b";
    rep.params = p;
    rep.add("closed=" + closed.to_string() + " eliminated=" + elim.to_string(), closed == elim);
    run_code = emit(rep, o);
  });

  // character compare
  auto* character = app.add_subcommand("character", "graded census comparisons");
  character->require_subcommand(1);
  auto* ccomp = character->add_subcommand("compare", "complement vs Fock-variable census");
  add_param_flags(ccomp, o);
  add_report_flags(ccomp, o);
  ccomp->add_option("--mode-window", o.mode_window, "generator mode window");
  ccomp->add_option("--delta-bound", o.delta_bound, "delta-degree bound for monomial counts");
  ccomp->callback([&] {
    Params p = make_params(o);
    run_code = emit(character_compare(p, o.mode_window, o.delta_bound), o);
  });

  // generate
  auto* generate = app.add_subcommand("generate", "witness programs from the small subspace");
  generate->require_subcommand(1);
  auto* gwit = generate->add_subcommand("witness", "program for one target monomial");
  add_param_flags(gwit, o);
  add_report_flags(gwit, o);
  gwit->add_option("--target", target_text, "target monomial, e.g. x[2,2,5]*y[2,1]")->required();
  gwit->callback([&] {
    Params p = make_params(o);
    FockPoly t = parse_poly(target_text, p);
    if (t.size() != 1 || !t.terms()[0].coeff.is_one())
      throw CLI::ValidationError("--target must be a single monomial with coefficient 1");
    Engine eng(p);
    WitnessProgram prog = generation_witness(eng, t.terms()[0].mono);
    Report rep;
    rep.suite = "generation-witness";
    rep.params = p;
    rep.add("seed " + format_poly(prog.seed), true);
    for (std::size_t k = 0; k < prog.steps.size(); ++k) {
      rep.add("step " + std::to_string(k + 1) + ": " + prog.steps[k].to_string(), true);
    }
    FockPoly replay = execute_witness(eng, prog);
    rep.add("replay reproduces target", replay == t);
    run_code = emit(rep, o);
  });
  auto* gcheck = generate->add_subcommand("check", "cover every windowed monomial");
  add_param_flags(gcheck, o);
  add_report_flags(gcheck, o);
  gcheck->add_option("--mode-window", o.mode_window, "variable mode window");
  gcheck->add_option("--degree", o.degree, "target degree bound");
  gcheck->callback([&] {
    Params p = make_params(o);
    run_code = emit(generation_check(p, o.mode_window, o.degree), o);
  });

  // probe
  auto* probe = app.add_subcommand("probe", "submodule intersection probes");
  probe->require_subcommand(1);
  auto* psub = probe->add_subcommand("submodule", "intersect a cyclic submodule with W_a");
  add_param_flags(psub, o);
  add_report_flags(psub, o);
  psub->add_option("--vector", vector_text, "starting vector (polynomial)")->required();
  psub->add_option("--mode-window", o.mode_window, "current mode window");
  psub->add_option("--grade-bound", o.grade_bound, "|delta degree| truncation");
  psub->add_option("--length-bound", o.length_bound, "word length bound");
  psub->callback([&] {
    Params p = make_params(o);
    FockPoly v = parse_poly(vector_text, p);
    ProbeResult res = submodule_probe(v, p, o.mode_window, o.grade_bound, o.length_bound);
    run_code = emit(res.report, o);
  });

  // sl2
  auto* sl2cmd = app.add_subcommand("sl2", "rank-one laboratory");
  sl2cmd->require_subcommand(1);
  auto* ssing = sl2cmd->add_subcommand("singular", "singularity of a Wilson vector");
  add_report_flags(ssing, o);
  ssing->add_option("--r", wilson_r, "number of lowering factors")->required();
  ssing->add_option("--s", shifts_text, "comma list of r integer shifts")->required();
  ssing->add_option("--check-window", check_window, "generator mode window");
  ssing->callback([&] {
    std::vector<long> shifts;
    for (const auto& piece : parse_rational_list(shifts_text)) {
      if (!piece.is_integer()) throw CLI::ValidationError("--s entries must be integers");
      shifts.push_back(piece.numerator().to_int64());
    }
    sl2::VPoly v = sl2::wilson_vector(wilson_r, shifts);
    Report rep;
    rep.suite = "sl2-singular";
    rep.params = Params(1, 0, Rational(0), {Rational(0)});
    if (v.is_zero()) {
      rep.add("wilson vector is zero (degenerate shifts)", true);
    } else {
      sl2::SingularityResult res = sl2::singularity_check(v, check_window);
      rep.add("e-annihilated: " + std::string(res.e_annihilated ? "true" : "false"),
              res.e_annihilated, res.e_witness);
      // the h-side is informational: it fails for every Wilson vector
      rep.add("h-annihilated: " + std::string(res.h_annihilated ? "true" : "false"), true,
              res.h_witness);
    }
    run_code = emit(rep, o);
  });
  auto* sreal = sl2cmd->add_subcommand("realization", "relation suite for one realization");
  add_report_flags(sreal, o);
  sreal->add_option("--kind", kind_text, "first | jk | bf | second")
      ->check(CLI::IsMember({"first", "jk", "bf", "second"}));
  sreal->add_option("--K", k_text, "central scalar K (bf, second)");
  sreal->add_option("--J", j_text, "h_0 scalar J (bf)");
  sreal->add_option("--lambda-seq", lambda_seq_text, "jk modes as m:value,m:value");
  sreal->add_option("--mode-window", o.mode_window, "generator mode window");
  sreal->add_option("--degree", o.degree, "test monomial degree");
  sreal->callback([&] {
    sl2::Realization real;
    if (kind_text == "first") {
      real = sl2::Realization::first();
    } else if (kind_text == "jk") {
      std::map<long, Rational> lam;
      if (!lambda_seq_text.empty()) {
        std::size_t pos = 0;
        while (pos < lambda_seq_text.size()) {
          std::size_t comma = lambda_seq_text.find(',', pos);
          std::string piece = comma == std::string::npos
                                  ? lambda_seq_text.substr(pos)
                                  : lambda_seq_text.substr(pos, comma - pos);
          std::size_t colon = piece.find(':');
          if (colon == std::string::npos)
            throw CLI::ValidationError("--lambda-seq entries are m:value");
          lam[std::stol(piece.substr(0, colon))] =
              Rational::from_string(piece.substr(colon + 1));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
      real = sl2::Realization::jakobsen_kac(std::move(lam));
    } else if (kind_text == "bf") {
      real = sl2::Realization::bernard_felder(Rational::from_string(k_text),
                                              Rational::from_string(j_text));
    } else {
      real = sl2::Realization::second(Rational::from_string(k_text));
    }
    const bool with_y = real.kind == sl2::RealizationKind::BernardFelder ||
                        real.kind == sl2::RealizationKind::SecondFreeField;
    auto grid = sl2::sl2_monomial_grid(o.degree, o.mode_window, with_y);
    Report rep = sl2::sl2_relation_check(real, o.mode_window, grid);
    if (real.kind == sl2::RealizationKind::SecondFreeField) {
      rep.append(sl2::second_vs_engine_check(real.K, o.mode_window, grid));
    }
    run_code = emit(rep, o);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return run_code;
}
