#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "multifold/analytic.hpp"
#include "multifold/errors.hpp"
#include "multifold/experiments.hpp"

namespace py = pybind11;
using namespace multifold;

namespace {

// Python numbers and strings go through their decimal text so that a str
// argument keeps every digit.
Real to_real(const py::handle& value) { return Real(std::string(py::str(value))); }

std::vector<Real> to_reals(const py::sequence& values) {
  std::vector<Real> out;
  out.reserve(values.size());
  for (const py::handle& v : values) out.push_back(to_real(v));
  return out;
}

double to_float(const Real& x) { return x.to_double(); }

OscillatorParams make_params(const py::handle& omega, const py::handle& delta_ratio,
                             const py::handle& mass, const py::handle& gate_scale) {
  const Real w = to_real(omega);
  return {to_real(mass), w, to_real(delta_ratio) * w, to_real(gate_scale)};
}

// Times are given in omega t units, as in the command-line tool.
TimeFold make_fold(const py::sequence& times, const py::handle& ts, const py::handle& tf,
                   const OscillatorParams& p) {
  TimeFold fold{to_real(ts) / p.omega(), to_real(tf) / p.omega(), to_reals(times)};
  for (Real& t : fold.times) t /= p.omega();
  return fold;
}

py::dict summary(const Real& rho, const std::optional<Real>& leading) {
  py::dict out;
  const Real log_rho = log(rho);
  out["rho"] = to_float(rho);
  out["log_rho_exact"] = to_float(log_rho);
  out["complexity"] = to_float(complexity(rho));
  out["neg_log_inner"] = to_float(inner_product(rho).neg_log);
  if (leading) {
    const Real log_lead = log(*leading);
    out["log_rho_leading"] = to_float(log_lead);
    out["rel_error"] = to_float(guarded_relative_error(log_rho, log_lead));
  }
  return out;
}

#define MULTIFOLD_FOLD_ARGS                                                                \
  py::arg("times"), py::kw_only(), py::arg("ts") = 0, py::arg("tf") = 0,                  \
      py::arg("omega") = 1, py::arg("delta_ratio") = "1e-3", py::arg("mass") = 1,         \
      py::arg("gate_scale") = 1, py::arg("precision") = kDefaultDigits

py::list terms_to_list(const std::vector<AnalyticTerm>& terms) {
  py::list out;
  for (const AnalyticTerm& t : terms) {
    py::dict d;
    d["kind"] = t.kind == TermKind::kConstant  ? "constant"
                : t.kind == TermKind::kOneWay  ? "one-way"
                : t.kind == TermKind::kEcho    ? "echo"
                                               : "precursor";
    d["subset"] = t.subset;
    d["signs"] = to_string(t.pattern);
    d["sigma"] = t.sigma;
    d["exponent_arg"] = to_float(t.exponent_arg);
    d["log_value"] = to_float(t.log_value);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and leading-order multifold complexity of the inverted oscillator";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DegenerateSpectrum>(m, "DegenerateSpectrum", base.ptr());
  py::register_exception<ComplexityBudget>(m, "ComplexityBudget", base.ptr());
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base.ptr());
  py::register_exception<UnknownFigure>(m, "UnknownFigure", base.ptr());

  m.def(
      "loschmidt",
      [](const py::sequence& times, const py::handle& ts, const py::handle& tf,
         const py::handle& omega, const py::handle& delta_ratio, const py::handle& mass,
         const py::handle& gate_scale, int precision, bool outer_evolution) {
        PrecisionScope scope(precision);
        const OscillatorParams p = make_params(omega, delta_ratio, mass, gate_scale);
        const TimeFold fold = make_fold(times, ts, tf, p);
        const Real rho =
            rho_between(loschmidt_covariance(fold, p, {outer_evolution}), reference_covariance(p));
        if (outer_evolution) return summary(rho, std::nullopt);
        return summary(rho, rho_L_leading(fold, p, TermDetail::kValueOnly).rho);
      },
      MULTIFOLD_FOLD_ARGS, py::arg("outer_evolution") = false,
      "Exact and leading-order rho of the Loschmidt echo; times in omega t units.");

  m.def(
      "precursor",
      [](const py::sequence& times, const py::handle& ts, const py::handle& tf,
         const py::handle& omega, const py::handle& delta_ratio, const py::handle& mass,
         const py::handle& gate_scale, int precision) {
        PrecisionScope scope(precision);
        const OscillatorParams p = make_params(omega, delta_ratio, mass, gate_scale);
        const TimeFold fold = make_fold(times, ts, tf, p);
        const Real rho = rho_between(precursor_covariance(fold, p), reference_covariance(p));
        return summary(rho, rho_P_leading(fold, p, TermDetail::kValueOnly).rho);
      },
      MULTIFOLD_FOLD_ARGS, "Exact and leading-order rho of the precursor state.");

  m.def(
      "harmonic",
      [](const py::handle& t1, const py::handle& omega, const py::handle& delta_ratio,
         const py::handle& mass, const py::handle& gate_scale, int precision) {
        PrecisionScope scope(precision);
        const OscillatorParams p = make_params(omega, delta_ratio, mass, gate_scale);
        const Real t = to_real(t1) / p.omega();
        const Real rho = rho_between(harmonic_precursor_covariance(t, p),
                                     harmonic_reference_covariance(p));
        return summary(rho, harmonic_precursor_rho(t, p));
      },
      py::arg("t1"), py::kw_only(), py::arg("omega") = 1, py::arg("delta_ratio") = "1e-3",
      py::arg("mass") = 1, py::arg("gate_scale") = 1, py::arg("precision") = kDefaultDigits,
      "Single kick in the ordinary harmonic oscillator.");

  m.def(
      "leading_terms",
      [](const std::string& state, const py::sequence& times, const py::handle& ts,
         const py::handle& tf, const py::handle& omega, const py::handle& delta_ratio,
         const py::handle& mass, const py::handle& gate_scale, int precision) {
        PrecisionScope scope(precision);
        const OscillatorParams p = make_params(omega, delta_ratio, mass, gate_scale);
        const TimeFold fold = make_fold(times, ts, tf, p);
        if (state == "loschmidt") return terms_to_list(rho_L_leading(fold, p).terms);
        if (state == "precursor") return terms_to_list(rho_P_leading(fold, p).terms);
        throw py::value_error("state must be 'loschmidt' or 'precursor'");
      },
      py::arg("state"), MULTIFOLD_FOLD_ARGS, "Enumerated terms of a leading-order sum.");

  m.def(
      "switchback",
      [](const py::sequence& times, const py::handle& ts, const py::handle& tf,
         const py::handle& omega, const py::handle& delta_ratio, const py::handle& mass,
         const py::handle& gate_scale, int precision) {
        PrecisionScope scope(precision);
        const OscillatorParams p = make_params(omega, delta_ratio, mass, gate_scale);
        const SwitchbackResult r = switchback_complexity(make_fold(times, ts, tf, p), p);
        py::dict out;
        out["total_time"] = to_float(r.total_time);
        out["scrambling_time"] = to_float(r.scrambling_time);
        out["complexity"] = to_float(r.complexity);
        out["insertions"] = r.insertions;
        out["regime_warning"] = r.regime_warning;
        return out;
      },
      MULTIFOLD_FOLD_ARGS, "Switchback complexity w (t_T - 2 N t*).");

  m.def(
      "scrambling_time",
      [](const py::handle& omega, const py::handle& delta_ratio) {
        return to_float(scrambling_time(OscillatorParams::natural(to_real(omega),
                                                                  to_real(delta_ratio))));
      },
      py::arg("omega") = 1, py::arg("delta_ratio") = "1e-3");

  m.def(
      "kappa",
      [](const std::string& signs) {
        SignPattern pattern;
        for (char c : signs) {
          if (c != '+' && c != '-') throw py::value_error("signs must contain only '+' and '-'");
          pattern.push_back(c == '+' ? Sign::kPlus : Sign::kMinus);
        }
        return kappa(pattern);
      },
      py::arg("signs"));

  m.def(
      "inner_product",
      [](const py::handle& rho, int precision) {
        PrecisionScope scope(precision);
        const InnerProduct ip = inner_product(to_real(rho));
        return py::make_tuple(to_float(ip.value), to_float(ip.neg_log));
      },
      py::arg("rho"), py::kw_only(), py::arg("precision") = kDefaultDigits,
      "(I, -log I) for a given rho.");

  m.def(
      "figure_csv",
      [](int id, const std::optional<std::string>& grid, std::optional<int> precision,
         unsigned jobs, bool certify) {
        Scenario s = figure_scenario(id);
        if (grid) s.grid = parse_grid(*grid);
        const RunOptions options{precision.value_or(s.precision_hint), jobs, certify};
        Table table;
        {
          py::gil_scoped_release release;
          table = run_scenario(s, options);
        }
        std::ostringstream os;
        write_csv(os, table);
        return os.str();
      },
      py::arg("id"), py::kw_only(), py::arg("grid") = py::none(), py::arg("precision") = py::none(), py::arg("jobs") = 1, py::arg("certify") = true,
      "CSV text of a figure scenario, identical to the command-line output.");
}
