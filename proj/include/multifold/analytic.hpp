#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multifold/gaussian.hpp"
#include "multifold/states.hpp"

namespace multifold {

enum class Sign : std::uint8_t { kPlus, kMinus };

/// Operators between consecutive times of a subset, t_{j1} (+) t_{j2} (+) ...
using SignPattern = std::vector<Sign>;

/// Number of competitions removed from the maximal power 2n-1:
/// one if the pattern opens with a minus, plus one per adjacent sign change.
int kappa(const SignPattern& pattern);

/// "+-+" style rendering; empty pattern renders as "".
std::string to_string(const SignPattern& pattern);

enum class TermKind : std::uint8_t {
  kConstant,  // Loschmidt "1"
  kOneWay,    // precursor exp|2 (t_s - t_f) w|
  kEcho,      // Loschmidt subset term
  kPrecursor  // precursor subset term
};

/// One term alpha^sigma exp|4 w arg| of a leading-order sum.
struct AnalyticTerm {
  TermKind kind{};
  std::vector<int> subset;  // 1-based indices j1 < ... < jn
  SignPattern pattern;
  int sigma = 0;
  Real exponent_arg;  // time combination inside |.|
  Real log_value;     // sigma log(alpha) + 4 w |arg|
  Real value;         // exp(log_value)
};

struct LeadingOrder {
  Real rho;
  std::vector<AnalyticTerm> terms;  // empty when only the value was requested
  bool perturbative = true;         // delta_omega / omega <= 0.1
};

enum class TermDetail : std::uint8_t { kWithTerms, kValueOnly };

inline constexpr std::size_t kMaxLoschmidtInsertions = 15;
inline constexpr std::size_t kMaxPrecursorInsertions = 40;

/// 1 + sum over subsets and sign patterns of alpha^{2n-1-kappa} e^{|4 w (t_j1 (+) ... t_jn)|}.
/// Terms are ordered by subset size, then lexicographic subset, then pattern
/// counted in binary with + = 0 and the first operator most significant.
/// Throws ComplexityBudget above 15 insertions; DomainError if alpha == 0.
LeadingOrder rho_L_leading(const TimeFold& fold, const OscillatorParams& params,
                           TermDetail detail = TermDetail::kWithTerms);

/// e^{|2 w (t_s - t_f)|} + sum over subsets of
/// alpha^n e^{|4 w (t_s/2 + sum_k (-1)^k t_jk + (-1)^{n+1} t_f/2)|}.
/// Throws ComplexityBudget above 40 insertions; DomainError if alpha == 0.
LeadingOrder rho_P_leading(const TimeFold& fold, const OscillatorParams& params,
                           TermDetail detail = TermDetail::kWithTerms);

/// Closed-form rho for a single kick in the harmonic oscillator at time t1.
Real harmonic_precursor_rho(const Real& t1, const OscillatorParams& params);

/// t* = -log(alpha) / (4 w). Throws DomainError unless 0 < alpha < 1.
Real scrambling_time(const OscillatorParams& params);

/// |t_1 - t_s| + sum |t_{k+1} - t_k| + |t_f - t_N|.
Real total_folded_time(const TimeFold& fold);

struct DominantTerm {
  AnalyticTerm term;
  bool tie = false;  // another term is equal within 1e-20 in log value
};

/// Term with the largest log value; ties go to smaller sigma, then to the
/// earlier term in enumeration order. Throws DomainError on an empty list.
DominantTerm dominant_term(const std::vector<AnalyticTerm>& terms);

struct SwitchbackResult {
  Real total_time;       // t_T
  Real scrambling_time;  // t*
  Real complexity;       // w (t_T - 2 N t*)
  std::size_t insertions = 0;
  /// Some leg of the fold is no longer than t*, outside the formula's regime.
  bool regime_warning = false;
};

/// Switchback complexity with n taken as the number of insertions N.
SwitchbackResult switchback_complexity(const TimeFold& fold, const OscillatorParams& params);

}  // namespace multifold
