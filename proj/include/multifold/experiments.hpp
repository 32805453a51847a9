#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multifold/analytic.hpp"

namespace multifold {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ScenarioKind : std::uint8_t { kLoschmidt, kPrecursor, kHarmonicControl };

std::string_view to_string(ScenarioKind kind);

/// Which entry of a TimeFold a sweep variable drives.
struct FoldSlot {
  enum class Which : std::uint8_t { kStart, kFinal, kTime } which = Which::kTime;
  std::size_t index = 0;  // for kTime, 0-based
};

/// slot = coefficient * x, with x the grid abscissa in units of 1/omega.
struct SweepBinding {
  FoldSlot slot;
  Real coefficient{1};
};

/// Inclusive grid start, start + step, ..., up to stop (in omega t units).
struct Grid {
  Real start{0.05};
  Real stop{20};
  Real step{0.05};

  [[nodiscard]] std::vector<Real> points() const;
};

/// Parses "start:stop:step". Throws std::invalid_argument.
Grid parse_grid(std::string_view text);

/// Fold template entry: either a fixed value or coefficient * x.
struct FoldEntry {
  Real value{0};
  bool swept = false;
};

/// Parses "20", "-x", "0.5x", "x/2" into a FoldEntry (values in omega t).
FoldEntry parse_fold_entry(std::string_view text);

struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::kLoschmidt;
  /// Fixed part of the fold in omega t units; swept slots are overwritten.
  TimeFold base;
  std::vector<SweepBinding> sweep;
  Grid grid;
  OscillatorParams params = OscillatorParams::natural(1, Real("1e-3"));
  /// Free-form description of the sweep choice, recorded in CSV metadata.
  std::string sweep_note;
  /// Working precision that certifies the whole default grid; used when the
  /// caller does not ask for a specific precision.
  int precision_hint = kDefaultDigits;
};

/// Checks grid step > 0, start <= stop and 0..2 sweep bindings (a harmonic
/// scenario takes exactly one binding on t_1). Throws std::invalid_argument.
void validate(const Scenario& s);

/// Fold in time units for abscissa x (omega t units).
TimeFold fold_at(const Scenario& s, const Real& x);

struct Row {
  Real t;
  Real log_rho_exact;
  Real log_rho_leading;
  Real rel_error;
};

struct RunOptions {
  int precision_digits = kDefaultDigits;
  unsigned workers = 1;
  /// Re-evaluate every point with 20 extra digits and require 6 matching
  /// significant digits of log rho.
  bool certify = true;
};

struct Table {
  Scenario scenario;
  RunOptions options;
  std::vector<Row> rows;
};

/// One exact / leading-order evaluation at abscissa x.
Row evaluate_point(const Scenario& s, const Real& x);

/// Relative error (lead - exact) / lead, or 0 when |lead| < 1e-6.
Real guarded_relative_error(const Real& log_exact, const Real& log_leading);

/// Rows in ascending t; independent of the worker count. Throws
/// PrecisionExhausted when certification fails.
Table run_scenario(const Scenario& s, const RunOptions& options = {});

/// Figure scenarios 3, 4, 5, 7, 8, 9 with the default grid 0.05:20:0.05.
/// Throws UnknownFigure.
Scenario figure_scenario(int id);

Table figure(int id, const RunOptions& options = {});

/// "#"-prefixed metadata, then t,log_rho_exact,log_rho_leading,rel_error with
/// 12 significant digits in scientific notation, LF line endings.
void write_csv(std::ostream& os, const Table& table);

/// Enumerated leading-order terms as CSV.
void write_terms_csv(std::ostream& os, ScenarioKind kind, const TimeFold& fold,
                     const OscillatorParams& params, const LeadingOrder& leading);

}  // namespace multifold
