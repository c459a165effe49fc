#pragma once

#include <optional>
#include <vector>

#include "arithdyn/divisor.hpp"
#include "arithdyn/exact_log.hpp"
#include "arithdyn/heights.hpp"
#include "arithdyn/projective.hpp"
#include "arithdyn/selfmap.hpp"

namespace arithdyn {

struct CnReport {
  unsigned n = 0;
  unsigned delta_f = 0;
  /// degree(D), the multiple with D ~ mu O(1)
  unsigned long mu = 0;
  std::size_t dimension = 0;
  Divisor pullback;
  PiSelection selection;
  /// degrees of the components of the reduced part, in canonical order
  std::vector<unsigned long> m_i;
  unsigned long gamma = 0;
  Rational c_n;
  /// c_n <= 0: no non-density conclusion
  bool inconclusive = false;
  /// other maximal subsets that were not chosen
  std::vector<std::vector<std::size_t>> selection_ambiguity;
};

/// Pullback, reduced properly intersecting part, then
///   gamma = max m_i (N+1),  c_n = (sum m_i - gamma) / (delta^n mu^n).
/// Throws NotCertified, DeltaNotGreaterThanOne, UnverifiedComponent.
CnReport compute_cn(const SelfMap& f, const Divisor& d, unsigned n, FactorBasis& basis,
                    const RandomConfig& rng = {});

/// c_n from the stored n, delta_f, mu, m_i and dimension.
Rational recompute_cn(const CnReport& r);

struct DegreeIdentity {
  long lhs = 0;  // degree(D^(n)) - degree(reduced part)
  long rhs = 0;  // delta^n mu^n - sum m_i
  bool holds() const { return lhs == rhs; }
};
DegreeIdentity degree_identity(const CnReport& r);

enum class FlagState { Yes, No, OnDivisor, HeightZero };
const char* to_string(FlagState s);

struct OrbitRecord {
  std::size_t k = 0;
  ProjPoint point;
  ExactLog height;
  /// absent when the point lies on the divisor
  std::optional<ExactLog> proximity;
  std::optional<ExactLog> counting;
  FlagState flag = FlagState::No;
  /// m_S >= (1 - tol) mu h with h > 0
  bool integral_candidate = false;
};

struct OrbitScanOptions {
  PlaceSet places{Place::infinite()};
  Rational epsilon{1, 32};
  std::size_t kmax = 5;
  std::size_t bit_budget = 1u << 20;
  Rational integral_tol{1, 10};
  ComparePolicy policy{};
};

struct OrbitScan {
  /// c_n - epsilon
  Rational threshold;
  unsigned long mu = 0;
  std::vector<OrbitRecord> records;
  std::optional<std::pair<std::size_t, std::size_t>> cycle;
  std::vector<std::size_t> flagged;
  std::vector<std::size_t> integral_candidates;
};

/// For k = 0..kmax decides n_S(D, f^k(x0)) <= (c_n - epsilon) mu h(f^k(x0))
/// exactly. Throws SizeBudgetExceeded, NotCertified, InvalidArgument for
/// epsilon <= 0.
OrbitScan orbit_scan(const SelfMap& f, const Divisor& d, const ProjPoint& x0, const Rational& c_n,
                     const OrbitScanOptions& options = {});

struct BetaReport {
  unsigned long d = 0;
  std::size_t dimension = 0;
  Rational formula;
  /// (m, discrete ratio)
  std::vector<std::pair<unsigned long, Rational>> discrete;
};

/// 1 / (d (N+1)). Throws InvalidArgument for d == 0 or N == 0.
Rational beta(unsigned long d, std::size_t dimension);

/// sum_{l >= 1} C(m - l d + N, N) / (m C(m + N, N)).
Rational beta_oracle(unsigned long d, std::size_t dimension, unsigned long m);

BetaReport beta_report(unsigned long d, std::size_t dimension, const std::vector<unsigned long>& ms);

struct RvOptions {
  PlaceSet places{Place::infinite()};
  Rational epsilon{1};
  long bound = 50;
  /// default: log of the largest coefficient sum
  std::optional<ExactLog> slack;
  /// how many violators to keep in each list
  std::size_t keep = 200;
  ComparePolicy policy{};
};

struct RvViolator {
  ProjPoint point;
  /// sum_i m_S(x, D_i) / d_i - (N+1) h(x)
  ExactLog excess;
  /// index into RvReport::family, if on a family line
  std::optional<std::size_t> family_line;
};

struct RvReport {
  bool vacuous = false;
  std::size_t dimension = 0;
  long bound = 0;
  Rational epsilon;
  ExactLog slack;
  /// lines through two pairwise intersection points of linear divisors (P^2)
  std::vector<HomogeneousForm> family;
  std::size_t points_checked = 0;
  std::size_t points_on_divisors = 0;
  /// violators of the inequality with the slack constant
  std::size_t violations = 0;
  std::vector<RvViolator> violators;
  /// violators of the zero-slack inequality
  std::size_t zero_slack_on_family = 0;
  std::size_t zero_slack_off_family = 0;
  std::vector<RvViolator> zero_slack_off_family_points;
  std::optional<ExactLog> max_excess;
  std::optional<ProjPoint> argmax;
};

/// Enumerates normalized points with max |x_j| <= bound off every divisor and
/// tests sum_i m_S(x, D_i)/deg D_i <= (N+1+epsilon) h(x) + slack.
RvReport rv_check(const RingPtr& ring, const std::vector<HomogeneousForm>& divisors, const RvOptions& options);

}  // namespace arithdyn
