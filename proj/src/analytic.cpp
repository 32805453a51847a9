#include "multifold/analytic.hpp"

#include <numeric>

#include "multifold/errors.hpp"

namespace multifold {
namespace {

const Real kTieTolerance{1e-20};

// Advances `idx` (strictly increasing, values < n) to the next combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

SignPattern pattern_from_bits(unsigned bits, int length) {
  SignPattern pattern(length);
  for (int i = 0; i < length; ++i) {
    const bool minus = (bits >> (length - 1 - i)) & 1U;
    pattern[i] = minus ? Sign::kMinus : Sign::kPlus;
  }
  return pattern;
}

SignPattern alternating_from_minus(int length) {
  SignPattern pattern(length);
  for (int i = 0; i < length; ++i) pattern[i] = (i % 2 == 0) ? Sign::kMinus : Sign::kPlus;
  return pattern;
}

std::vector<int> one_based(const std::vector<int>& idx) {
  std::vector<int> out(idx);
  for (int& v : out) ++v;
  return out;
}

void require_alpha(const OscillatorParams& params) {
  if (!(params.alpha() > 0)) {
    throw DomainError("leading-order sums need delta_omega > 0 (alpha = 0 is the unperturbed case)");
  }
}

class Accumulator {
 public:
  Accumulator(const OscillatorParams& params, TermDetail detail)
      : log_alpha_(log(params.alpha())), four_omega_(4 * params.omega()), detail_(detail) {}

  void add(TermKind kind, std::vector<int> subset, SignPattern pattern, int sigma, Real arg) {
    Real log_value = sigma * log_alpha_ + four_omega_ * abs(arg);
    Real value = exp(log_value);
    sum_ += value;
    if (detail_ == TermDetail::kWithTerms) {
      terms_.push_back({kind, std::move(subset), std::move(pattern), sigma, std::move(arg),
                        std::move(log_value), std::move(value)});
    }
  }

  void add_constant(Real value) { sum_ += value; }

  LeadingOrder finish(const OscillatorParams& params) {
    return {std::move(sum_), std::move(terms_), params.perturbative()};
  }

 private:
  Real log_alpha_;
  Real four_omega_;
  TermDetail detail_;
  Real sum_{0};
  std::vector<AnalyticTerm> terms_;
};

}  // namespace

int kappa(const SignPattern& pattern) {
  if (pattern.empty()) return 0;
  int k = pattern.front() == Sign::kMinus ? 1 : 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    if (pattern[i] != pattern[i - 1]) ++k;
  }
  return k;
}

std::string to_string(const SignPattern& pattern) {
  std::string out;
  out.reserve(pattern.size());
  for (Sign s : pattern) out.push_back(s == Sign::kPlus ? '+' : '-');
  return out;
}

LeadingOrder rho_L_leading(const TimeFold& fold, const OscillatorParams& params,
                           TermDetail detail) {
  const std::size_t count = fold.size();
  if (count > kMaxLoschmidtInsertions) {
    throw ComplexityBudget("Loschmidt leading order supports at most 15 insertions");
  }
  require_alpha(params);
  Accumulator acc(params, detail);
  if (detail == TermDetail::kWithTerms) {
    acc.add(TermKind::kConstant, {}, {}, 0, Real(0));
  } else {
    acc.add_constant(1);
  }
  const int total = static_cast<int>(count);
  for (int n = 1; n <= total; ++n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      const unsigned patterns = 1U << (n - 1);
      for (unsigned bits = 0; bits < patterns; ++bits) {
        SignPattern pattern = pattern_from_bits(bits, n - 1);
        Real arg = fold.times[idx[0]];
        for (int i = 1; i < n; ++i) {
          if (pattern[i - 1] == Sign::kPlus) {
            arg += fold.times[idx[i]];
          } else {
            arg -= fold.times[idx[i]];
          }
        }
        const int sigma = 2 * n - 1 - kappa(pattern);
        acc.add(TermKind::kEcho, one_based(idx), std::move(pattern), sigma, std::move(arg));
      }
    } while (next_combination(idx, total));
  }
  return acc.finish(params);
}

LeadingOrder rho_P_leading(const TimeFold& fold, const OscillatorParams& params,
                           TermDetail detail) {
  const std::size_t count = fold.size();
  if (count > kMaxPrecursorInsertions) {
    throw ComplexityBudget("precursor leading order supports at most 40 insertions");
  }
  require_alpha(params);
  Accumulator acc(params, detail);
  // alpha^0 e^{|4 w (t_s - t_f)/2|} is the one-way term.
  acc.add(TermKind::kOneWay, {}, {}, 0, (fold.t_start - fold.t_final) / 2);
  const int total = static_cast<int>(count);
  const Real half_start = fold.t_start / 2;
  const Real half_final = fold.t_final / 2;
  for (int n = 1; n <= total; ++n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      Real arg = half_start;
      for (int k = 1; k <= n; ++k) {
        if (k % 2 == 0) {
          arg += fold.times[idx[k - 1]];
        } else {
          arg -= fold.times[idx[k - 1]];
        }
      }
      if (n % 2 == 1) {
        arg += half_final;
      } else {
        arg -= half_final;
      }
      acc.add(TermKind::kPrecursor, one_based(idx), alternating_from_minus(n - 1), n,
              std::move(arg));
    } while (next_combination(idx, total));
  }
  return acc.finish(params);
}

Real harmonic_precursor_rho(const Real& t1, const OscillatorParams& params) {
  const Real& w = params.omega();
  const Real& dw = params.delta_omega();
  const Real c2 = cos(2 * w * t1);
  const Real c4 = cos(4 * w * t1);
  const Real root2 = sqrt(Real(2));
  // dw^2 sqrt(X + 128 w^2 / dw^2) written as dw sqrt(dw^2 X + 128 w^2) so
  // that dw = 0 is regular.
  const Real radical = sqrt(dw * dw * (59 - 60 * c2 + 9 * c4) + 128 * w * w);
  const Real bracket =
      dw * dw * root2 * (25 - 30 * c2 + 9 * c2 * c2) + (5 - 3 * c2) * dw * radical;
  return 1 + bracket / (32 * root2 * w * w);
}

Real scrambling_time(const OscillatorParams& params) {
  const Real alpha = params.alpha();
  if (!(alpha > 0) || !(alpha < 1)) {
    throw DomainError("scrambling time needs 0 < alpha < 1, got alpha = " + alpha.to_string());
  }
  return -log(alpha) / (4 * params.omega());
}

Real total_folded_time(const TimeFold& fold) {
  if (fold.times.empty()) return abs(fold.t_final - fold.t_start);
  Real total = abs(fold.times.front() - fold.t_start);
  for (std::size_t k = 1; k < fold.times.size(); ++k) {
    total += abs(fold.times[k] - fold.times[k - 1]);
  }
  total += abs(fold.t_final - fold.times.back());
  return total;
}

DominantTerm dominant_term(const std::vector<AnalyticTerm>& terms) {
  if (terms.empty()) throw DomainError("dominant_term needs at least one term");
  Real best = terms.front().log_value;
  for (const AnalyticTerm& t : terms) best = max(best, t.log_value);
  const AnalyticTerm* chosen = nullptr;
  int near = 0;
  for (const AnalyticTerm& t : terms) {
    if (best - t.log_value > kTieTolerance) continue;
    ++near;
    if (chosen == nullptr || t.sigma < chosen->sigma) chosen = &t;
  }
  return {*chosen, near > 1};
}

SwitchbackResult switchback_complexity(const TimeFold& fold, const OscillatorParams& params) {
  SwitchbackResult out;
  out.total_time = total_folded_time(fold);
  out.scrambling_time = scrambling_time(params);
  out.insertions = fold.size();
  out.complexity =
      params.omega() * (out.total_time - 2 * static_cast<int>(out.insertions) * out.scrambling_time);

  std::vector<Real> points;
  points.reserve(fold.size() + 2);
  points.push_back(fold.t_start);
  points.insert(points.end(), fold.times.begin(), fold.times.end());
  points.push_back(fold.t_final);
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (abs(points[k] - points[k - 1]) <= out.scrambling_time) out.regime_warning = true;
  }
  return out;
}

}  // namespace multifold
