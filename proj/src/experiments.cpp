#include "multifold/experiments.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "multifold/errors.hpp"

namespace multifold {
namespace {

constexpr int kCertifyExtraDigits = 20;
const Real kLeadingFloor{1e-6};
const Real kCertifyRelative{1e-6};

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

// Renders a template slot in omega t units, e.g. "20" or "0.5x".
std::string render_slot(const Scenario& s, FoldSlot::Which which, std::size_t index,
                        const Real& fixed) {
  for (const SweepBinding& b : s.sweep) {
    if (b.slot.which != which) continue;
    if (which == FoldSlot::Which::kTime && b.slot.index != index) continue;
    if (b.coefficient == 1) return "x";
    if (b.coefficient == -1) return "-x";
    return b.coefficient.to_string() + "x";
  }
  return fixed.to_string();
}

std::string render_fold(const Scenario& s) {
  std::string times;
  for (std::size_t i = 0; i < s.base.times.size(); ++i) {
    if (i > 0) times += ',';
    times += render_slot(s, FoldSlot::Which::kTime, i, s.base.times[i]);
  }
  return "t_start=" + render_slot(s, FoldSlot::Which::kStart, 0, s.base.t_start) +
         " t_final=" + render_slot(s, FoldSlot::Which::kFinal, 0, s.base.t_final) +
         " times=" + times;
}

bool certified(const Real& primary, const Real& reference, int digits) {
  const Real diff = abs(primary - reference);
  // Near log rho = 0 the relative test is meaningless; accept agreement to
  // within the working precision there, but never looser than 1e-12.
  const Real floor = min(Real("1e-12"), pow(Real(10), -(digits - 10)));
  return diff <= kCertifyRelative * abs(reference) || diff <= floor;
}

Row evaluate_certified(const Scenario& s, const std::string& x_text, const RunOptions& options) {
  Row row;
  std::exception_ptr primary_error;
  {
    PrecisionScope scope(options.precision_digits);
    try {
      row = evaluate_point(s, Real(x_text));
    } catch (const Error&) {
      if (!options.certify) throw;
      primary_error = std::current_exception();
    }
  }
  if (!options.certify) return row;
  Real check;
  {
    PrecisionScope scope(options.precision_digits + kCertifyExtraDigits);
    check = evaluate_point(s, Real(x_text)).log_rho_exact;
  }
  if (primary_error) {
    // Rounding broke a structural check that holds at higher precision.
    try {
      std::rethrow_exception(primary_error);
    } catch (const Error& e) {
      throw PrecisionExhausted("rounding at " + std::to_string(options.precision_digits) +
                               " digits broke the evaluation at omega t = " + x_text + " (" +
                               e.what() + ")");
    }
  }
  if (!certified(row.log_rho_exact, check, options.precision_digits)) {
    throw PrecisionExhausted("cannot certify 6 significant digits of log rho at omega t = " +
                             x_text + " with " + std::to_string(options.precision_digits) +
                             " digits (got " + row.log_rho_exact.to_string(10) + ", reference " +
                             check.to_string(10) + ")");
  }
  return row;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kLoschmidt:
      return "loschmidt";
    case ScenarioKind::kPrecursor:
      return "precursor";
    case ScenarioKind::kHarmonicControl:
      return "harmonic-control";
  }
  return "unknown";
}

std::vector<Real> Grid::points() const {
  if (!(step > 0)) throw std::invalid_argument("grid step must be positive");
  if (stop < start) throw std::invalid_argument("grid start must not exceed stop");
  const double span = ((stop - start) / step).to_double();
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<Real> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<int>(i) * step);
  return out;
}

Grid parse_grid(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos) {
    throw std::invalid_argument("grid must look like start:stop:step");
  }
  Grid grid{Real(trim(text.substr(0, a))), Real(trim(text.substr(a + 1, b - a - 1))),
            Real(trim(text.substr(b + 1)))};
  static_cast<void>(grid.points());  // validates
  return grid;
}

FoldEntry parse_fold_entry(std::string_view raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty time entry");
  const auto x = text.find('x');
  if (x == std::string::npos) return {Real(text), false};
  std::string coef = text.substr(0, x);
  std::string tail = text.substr(x + 1);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Real value = coef.empty() || coef == "+" ? Real(1) : coef == "-" ? Real(-1) : Real(coef);
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("cannot parse time entry '" + text + "'");
    value /= Real(tail.substr(1));
  }
  return {value, true};
}

void validate(const Scenario& s) {
  if (!(s.grid.step > 0)) throw std::invalid_argument("grid step must be positive");
  if (s.grid.stop < s.grid.start) throw std::invalid_argument("grid start must not exceed stop");
  if (s.sweep.size() > 2) throw std::invalid_argument("at most two swept fold entries");
  for (const SweepBinding& b : s.sweep) {
    if (b.slot.which == FoldSlot::Which::kTime && b.slot.index >= s.base.times.size()) {
      throw std::invalid_argument("sweep binding refers to a missing time");
    }
  }
  if (s.kind == ScenarioKind::kHarmonicControl && s.base.times.size() != 1) {
    throw std::invalid_argument("harmonic control takes exactly one insertion time");
  }
}

TimeFold fold_at(const Scenario& s, const Real& x) {
  TimeFold fold = s.base;
  for (const SweepBinding& b : s.sweep) {
    switch (b.slot.which) {
      case FoldSlot::Which::kStart:
        fold.t_start = b.coefficient * x;
        break;
      case FoldSlot::Which::kFinal:
        fold.t_final = b.coefficient * x;
        break;
      case FoldSlot::Which::kTime:
        fold.times.at(b.slot.index) = b.coefficient * x;
        break;
    }
  }
  const Real& w = s.params.omega();
  fold.t_start /= w;
  fold.t_final /= w;
  for (Real& t : fold.times) t /= w;
  return fold;
}

Real guarded_relative_error(const Real& log_exact, const Real& log_leading) {
  if (abs(log_leading) < kLeadingFloor) return 0;
  return (log_leading - log_exact) / log_leading;
}

Row evaluate_point(const Scenario& s, const Real& x) {
  const TimeFold fold = fold_at(s, x);
  Real exact;
  Real leading;
  switch (s.kind) {
    case ScenarioKind::kLoschmidt:
      exact = rho_between(loschmidt_covariance(fold, s.params), reference_covariance(s.params));
      leading = rho_L_leading(fold, s.params, TermDetail::kValueOnly).rho;
      break;
    case ScenarioKind::kPrecursor:
      exact = rho_between(precursor_covariance(fold, s.params), reference_covariance(s.params));
      leading = rho_P_leading(fold, s.params, TermDetail::kValueOnly).rho;
      break;
    case ScenarioKind::kHarmonicControl:
      exact = rho_between(harmonic_precursor_covariance(fold.times.front(), s.params),
                          harmonic_reference_covariance(s.params));
      leading = harmonic_precursor_rho(fold.times.front(), s.params);
      break;
  }
  Real log_exact = log(exact);
  Real log_leading = log(leading);
  Real rel = guarded_relative_error(log_exact, log_leading);
  return {x, std::move(log_exact), std::move(log_leading), std::move(rel)};
}

Table run_scenario(const Scenario& s, const RunOptions& options) {
  validate(s);
  const std::vector<Real> xs = s.grid.points();
  // Abscissae are handed to workers as decimal text so that every worker
  // reconstructs them at its own working precision.
  std::vector<std::string> x_text;
  x_text.reserve(xs.size());
  for (const Real& x : xs) x_text.push_back(x.to_string(options.precision_digits + 10));

  std::vector<Row> rows(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(xs.size())));
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < xs.size(); i += workers) {
      try {
        rows[i] = evaluate_certified(s, x_text[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return {s, options, std::move(rows)};
}

Scenario figure_scenario(int id) {
  Scenario s;
  s.name = "figure-" + std::to_string(id);
  s.params = OscillatorParams::natural(1, Real("1e-3"));
  const auto time = [](std::size_t i, Real c = 1) {
    return SweepBinding{{FoldSlot::Which::kTime, i}, std::move(c)};
  };
  switch (id) {
    case 3:
      s.kind = ScenarioKind::kLoschmidt;
      s.base.times = {0};
      s.sweep = {time(0)};
      s.sweep_note = "x=omega t_1";
      break;
    case 4:
      s.kind = ScenarioKind::kPrecursor;
      s.base = {20, 20, {0}};
      s.sweep = {time(0)};
      s.sweep_note = "x=omega t_1";
      // As t_1 approaches t_s the e^{80} factors cancel down to log rho ~ 1e-3.
      s.precision_hint = 60;
      break;
    case 5:
      s.kind = ScenarioKind::kLoschmidt;
      s.base.times = {0, 0};
      s.sweep = {time(0), time(1, Real("0.5"))};
      s.sweep_note = "x=omega t_1 with t_2=t_1/2 (chosen slice)";
      break;
    case 7:
      s.kind = ScenarioKind::kPrecursor;
      s.base = {20, -20, {0, 0}};
      s.sweep = {time(0), time(1, Real("0.5"))};
      s.sweep_note = "x=omega t_1 with t_2=t_1/2 (chosen slice)";
      break;
    case 8:
      s.kind = ScenarioKind::kLoschmidt;
      s.base.times = {20, 0, 20, 0};
      s.sweep = {time(1), time(3)};
      s.sweep_note = "x=omega t_2=omega t_4 (chosen slice)";
      break;
    case 9:
      s.kind = ScenarioKind::kPrecursor;
      s.base = {-20, -20, {20, 0, 20, 0}};
      s.sweep = {time(1), time(3)};
      s.sweep_note = "x=omega t_2=omega t_4 (chosen slice)";
      break;
    default:
      throw UnknownFigure("no scenario for figure " + std::to_string(id) +
                          " (known: 3, 4, 5, 7, 8, 9)");
  }
  return s;
}

Table figure(int id, const RunOptions& options) {
  Scenario s = figure_scenario(id);
  return run_scenario(s, options);
}

void write_csv(std::ostream& os, const Table& table) {
  const Scenario& s = table.scenario;
  const OscillatorParams& p = s.params;
  os << "# multifold " << kVersion << '\n'
     << "# scenario=" << s.name << '\n'
     << "# kind=" << to_string(s.kind) << '\n'
     << "# mass=" << p.mass().to_string() << '\n'
     << "# omega=" << p.omega().to_string() << '\n'
     << "# delta_omega=" << p.delta_omega().to_string() << '\n'
     << "# gate_scale=" << p.gate_scale().to_string() << '\n'
     << "# fold(omega t)=" << render_fold(s) << '\n'
     << "# sweep=" << (s.sweep_note.empty() ? std::string("none") : s.sweep_note) << '\n'
     << "# grid=" << s.grid.start.to_string() << ':' << s.grid.stop.to_string() << ':'
     << s.grid.step.to_string() << '\n'
     << "# precision_digits=" << table.options.precision_digits << '\n'
     << "# certified=" << (table.options.certify ? "true" : "false") << '\n'
     << "t,log_rho_exact,log_rho_leading,rel_error\n";
  for (const Row& r : table.rows) {
    os << r.t.to_scientific(12) << ',' << r.log_rho_exact.to_scientific(12) << ','
       << r.log_rho_leading.to_scientific(12) << ',' << r.rel_error.to_scientific(12) << '\n';
  }
}

void write_terms_csv(std::ostream& os, ScenarioKind kind, const TimeFold& fold,
                     const OscillatorParams& params, const LeadingOrder& leading) {
  os << "# multifold " << kVersion << '\n'
     << "# state=" << to_string(kind) << '\n'
     << "# omega=" << params.omega().to_string() << '\n'
     << "# delta_omega=" << params.delta_omega().to_string() << '\n'
     << "# alpha=" << params.alpha().to_string() << '\n'
     << "# insertions=" << fold.size() << '\n'
     << "# log_rho_leading=" << log(leading.rho).to_scientific(12) << '\n'
     << "# perturbative=" << (leading.perturbative ? "true" : "false") << '\n'
     << "subset,signs,kappa,sigma,exponent_arg,log_value\n";
  for (const AnalyticTerm& t : leading.terms) {
    std::string subset;
    for (std::size_t i = 0; i < t.subset.size(); ++i) {
      if (i > 0) subset += ' ';
      subset += std::to_string(t.subset[i]);
    }
    if (t.kind == TermKind::kConstant) subset = "const";
    if (t.kind == TermKind::kOneWay) subset = "one-way";
    os << subset << ',' << to_string(t.pattern) << ',' << kappa(t.pattern) << ',' << t.sigma
       << ',' << t.exponent_arg.to_scientific(12) << ',' << t.log_value.to_scientific(12)
       << '\n';
  }
}

}  // namespace multifold
