// Command-line runner for figure scenarios and user-defined folds.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "multifold/analytic.hpp"
#include "multifold/errors.hpp"
#include "multifold/experiments.hpp"

namespace {

using namespace multifold;

struct Flags {
  std::string omega = "1";
  std::string delta_ratio = "1e-3";
  std::string mass = "1";
  std::string gate_scale = "1";
  std::string times;
  std::string ts = "0";
  std::string tf = "0";
  std::string grid = "0.05:20:0.05";
  std::string out;
  std::string state = "loschmidt";
  int precision = kDefaultDigits;
  unsigned jobs = 1;
  bool no_certify = false;
  bool outer = false;
  int figure_id = 0;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

OscillatorParams make_params(const Flags& f) {
  const Real omega(f.omega);
  return {Real(f.mass), omega, Real(f.delta_ratio) * omega, Real(f.gate_scale)};
}

// Fold template in omega t units plus its sweep bindings.
void build_fold(const Flags& f, Scenario& s) {
  s.base = {};
  s.sweep.clear();
  const FoldEntry start = parse_fold_entry(f.ts);
  const FoldEntry final = parse_fold_entry(f.tf);
  s.base.t_start = start.value;
  s.base.t_final = final.value;
  if (start.swept) s.sweep.push_back({{FoldSlot::Which::kStart, 0}, start.value});
  if (final.swept) s.sweep.push_back({{FoldSlot::Which::kFinal, 0}, final.value});
  if (!f.times.empty()) {
    for (const std::string& item : split_list(f.times)) {
      const FoldEntry e = parse_fold_entry(item);
      if (e.swept) s.sweep.push_back({{FoldSlot::Which::kTime, s.base.times.size()}, e.value});
      s.base.times.push_back(e.swept ? Real(0) : e.value);
    }
  }
}

RunOptions run_options(const Flags& f) {
  return {f.precision, f.jobs, !f.no_certify};
}

void emit(const Flags& f, const std::function<void(std::ostream&)>& body) {
  if (f.out.empty() || f.out == "-") {
    body(std::cout);
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + f.out + " for writing");
  body(file);
}

Table run_fold_scenario(const Flags& f, ScenarioKind kind, bool grid_given) {
  Scenario s;
  s.kind = kind;
  s.name = std::string(to_string(kind));
  s.params = make_params(f);
  build_fold(f, s);
  if (kind == ScenarioKind::kHarmonicControl && s.base.times.empty()) {
    s.base.times = {0};
    s.sweep = {{{FoldSlot::Which::kTime, 0}, Real(1)}};
  }
  if (s.sweep.empty()) {
    if (grid_given) throw std::invalid_argument("--grid needs a swept entry (use x in --times/--ts/--tf)");
    s.grid = {0, 0, 1};
    s.sweep_note = "none (single fixed fold, t column is 0)";
  } else {
    s.grid = parse_grid(f.grid);
    s.sweep_note = "x from --times/--ts/--tf";
  }
  return run_scenario(s, run_options(f));
}

TimeFold fixed_fold(const Flags& f, const OscillatorParams& params) {
  Scenario s;
  s.params = params;
  build_fold(f, s);
  if (!s.sweep.empty()) throw std::invalid_argument("this command takes a fixed fold (no x)");
  return fold_at(s, Real(0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and leading-order multifold complexity of the inverted oscillator",
               "multifold"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "key=value file mirroring the flags (flags override it)");
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--omega", f.omega, "oscillator frequency")->capture_default_str();
  app.add_option("--delta-ratio", f.delta_ratio, "perturbation delta_omega/omega")
      ->capture_default_str();
  app.add_option("--mass", f.mass, "mass")->capture_default_str();
  app.add_option("--gate-scale", f.gate_scale, "gate scale g")->capture_default_str();
  app.add_option("--times", f.times, "comma list of insertion times in omega t; x marks the sweep");
  app.add_option("--ts", f.ts, "start offset t_s (omega t)")->capture_default_str();
  app.add_option("--tf", f.tf, "final offset t_f (omega t)")->capture_default_str();
  auto* grid_opt =
      app.add_option("--grid", f.grid, "start:stop:step in omega t")->capture_default_str();
  app.add_option("--out", f.out, "output path (default stdout)");
  auto* precision_opt = app.add_option("--precision", f.precision, "working precision in decimal digits")
      ->capture_default_str()
      ->check(CLI::Range(10, 10000));
  app.add_option("--jobs", f.jobs, "worker threads for grid evaluation")
      ->capture_default_str()
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--no-certify", f.no_certify, "skip the extra-precision certification pass");

  auto* figure_cmd = app.add_subcommand("figure", "run a figure scenario (3, 4, 5, 7, 8, 9)");
  figure_cmd->add_option("id", f.figure_id, "figure number")->required();
  auto* loschmidt_cmd = app.add_subcommand("loschmidt", "Loschmidt echo fold");
  loschmidt_cmd->add_flag("--outer-evolution", f.outer,
                          "wrap the echo in exp(-iH t_f) ... exp(iH t_s)");
  auto* precursor_cmd = app.add_subcommand("precursor", "precursor fold");
  auto* harmonic_cmd = app.add_subcommand("harmonic", "harmonic-oscillator control (one kick)");
  auto* terms_cmd = app.add_subcommand("analytic-terms", "dump the leading-order term list");
  terms_cmd->add_option("--state", f.state, "loschmidt or precursor")
      ->capture_default_str()
      ->check(CLI::IsMember({"loschmidt", "precursor"}));
  auto* switchback_cmd = app.add_subcommand("switchback", "print t_T, t* and C");

  CLI11_PARSE(app, argc, argv);

  try {
    PrecisionScope precision(f.precision);
    const bool grid_given = grid_opt->count() > 0;

    if (*figure_cmd) {
      Scenario s = figure_scenario(f.figure_id);
      if (grid_given) s.grid = parse_grid(f.grid);
      if (app.get_option("--omega")->count() + app.get_option("--delta-ratio")->count() +
              app.get_option("--mass")->count() + app.get_option("--gate-scale")->count() >
          0) {
        s.params = make_params(f);
      }
      RunOptions options = run_options(f);
      if (precision_opt->count() == 0) options.precision_digits = s.precision_hint;
      const Table table = run_scenario(s, options);
      emit(f, [&](std::ostream& os) { write_csv(os, table); });
    } else if (*loschmidt_cmd && f.outer) {
      // The outer-evolution variant has no leading-order formula; only the
      // exact value is reported.
      const OscillatorParams params = make_params(f);
      const TimeFold fold = fixed_fold(f, params);
      const Real rho = rho_between(loschmidt_covariance(fold, params, {true}),
                                   reference_covariance(params));
      emit(f, [&](std::ostream& os) {
        os << "log_rho_exact=" << log(rho).to_scientific(12) << '\n'
           << "complexity=" << complexity(rho).to_scientific(12) << '\n'
           << "neg_log_inner=" << inner_product(rho).neg_log.to_scientific(12) << '\n';
      });
    } else if (*loschmidt_cmd || *precursor_cmd || *harmonic_cmd) {
      const ScenarioKind kind = *loschmidt_cmd   ? ScenarioKind::kLoschmidt
                                : *precursor_cmd ? ScenarioKind::kPrecursor
                                                 : ScenarioKind::kHarmonicControl;
      const Table table = run_fold_scenario(f, kind, grid_given);
      emit(f, [&](std::ostream& os) { write_csv(os, table); });
    } else if (*terms_cmd) {
      const OscillatorParams params = make_params(f);
      const TimeFold fold = fixed_fold(f, params);
      const bool loschmidt = f.state == "loschmidt";
      const LeadingOrder leading =
          loschmidt ? rho_L_leading(fold, params) : rho_P_leading(fold, params);
      emit(f, [&](std::ostream& os) {
        write_terms_csv(os, loschmidt ? ScenarioKind::kLoschmidt : ScenarioKind::kPrecursor,
                        fold, params, leading);
      });
    } else if (*switchback_cmd) {
      const OscillatorParams params = make_params(f);
      const TimeFold fold = fixed_fold(f, params);
      const SwitchbackResult r = switchback_complexity(fold, params);
      if (r.regime_warning) {
        std::cerr << "warning: a leg of the fold is not longer than the scrambling time; "
                     "the switchback formula is outside its regime\n";
      }
      emit(f, [&](std::ostream& os) {
        os << "t_total=" << r.total_time.to_scientific(12) << '\n'
           << "t_scrambling=" << r.scrambling_time.to_scientific(12) << '\n'
           << "complexity=" << r.complexity.to_scientific(12) << '\n'
           << "insertions=" << r.insertions << '\n'
           << "regime_warning=" << (r.regime_warning ? "true" : "false") << '\n';
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "multifold: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
