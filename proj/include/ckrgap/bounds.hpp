#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ckrgap/instances.hpp"

namespace ckrgap {

/// The two-term lower bound on non-opposite cut cost of combine(params).
/// Asymptotic when `n` is empty, otherwise the finite-n form with the 1/n
/// corrections.
struct TheoremBound {
  Rational term_i;
  Rational term_ii;
  Rational bound;  // min(term_i, term_ii)
  std::optional<int> n;
  /// Finite form only: n >= 10 and c*n integral.
  bool in_regime = true;
};

TheoremBound theorem2_bound(const GapParams& params, std::optional<int> n = std::nullopt);

struct OptimizeConfig {
  /// Interior grid points on the c axis over (0, 1/2).
  int c_grid = 2000;
  /// Golden-section steps around the best grid cell.
  int refine_iterations = 120;
  /// Components that may be positive; a false entry pins lambda_i = 0.
  std::array<bool, 4> allow = {true, true, true, true};
  /// When non-empty, only these points are evaluated (exactly) and the best
  /// one is returned; the first wins ties.
  std::vector<GapParams> candidates;
  /// Decimal places kept when rounding the optimizer's doubles to exact
  /// rationals.
  int places = 9;
};

struct OptimizeResult {
  GapParams params;
  TheoremBound bound;  // asymptotic, exact
};

OptimizeResult optimize_params(const OptimizeConfig& config = {});

/// Best lambda for a fixed c and its asymptotic bound, by enumerating the
/// vertices of the inner linear program in double precision.
struct LambdaSolution {
  std::array<double, 4> lambda{};
  double value = 0;
};

LambdaSolution best_lambda_for_c(double c, const std::array<bool, 4>& allow = {true, true, true, true});

/// Costs of the certificate cuts on combine(params): P_ext, P_prime and,
/// when c < 1/9, P3. Asymptotic formulas when `n` is empty; otherwise
/// direct evaluation at n.
struct LimitationCertificates {
  Rational ext;
  Rational prime;
  std::optional<Rational> caps;
  Rational min;
};

LimitationCertificates limitation_certificates(const GapParams& params, std::optional<int> n = std::nullopt);
Rational limitation_min(const GapParams& params, std::optional<int> n = std::nullopt);

/// Exact value of (3 - 9c^2/2) / (5/2 - 9c^2/2 + 27c^3/4).
Rational beta_value(const Rational& c);

struct BetaMax {
  double c = 0;
  double beta = 0;
};

/// Maximum of beta over [0, 1/9) by a grid of `grid` points plus
/// golden-section refinement.
BetaMax beta_max(int grid = 100000, int refine_iterations = 120);

/// min_cost * n / total_weight.
Rational prop1_gap(const Rational& total_weight, const Rational& min_cost, int n);

/// Value of the identity embedding x^u = u in the simplex relaxation,
/// sum of w(e) * |u - v|_1 / 2.
Rational lp_identity_value(const WeightMap& w);

struct CertifiedCut {
  std::string name;
  Rational formula;     // asymptotic cost formula
  Rational cost;        // direct evaluation at n
  Rational correction;  // computed finite-n envelope for |cost - formula|
  bool within_envelope = false;
};

struct GapReport {
  GapParams params;
  TheoremBound theorem;  // finite form at params.n
  TheoremBound asymptotic;
  Rational total_weight;
  Rational lp_value;
  std::vector<CertifiedCut> certified_cuts;
  Rational gap_estimate;  // theorem.bound * n / total_weight
};

/// Needs params.n divisible by 3 (when lambda_1 > 0) and c*n integral.
GapReport make_gap_report(const GapParams& params);

}  // namespace ckrgap
