#include "ckrgap/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "ckrgap/cuts.hpp"
#include "ckrgap/kernels.hpp"

namespace ckrgap {

namespace {

const Rational& lam(const GapParams& p, int i) { return p.lambda[static_cast<std::size_t>(i - 1)]; }

Rational min3(const Rational& a, const Rational& b, const Rational& c) { return std::min({a, b, c}); }

}  // namespace

TheoremBound theorem2_bound(const GapParams& params, std::optional<int> n) {
  params.validate();
  if (n && *n < 1) invalid_parameter("the finite bound needs n >= 1");
  const Rational& c = params.c;
  const Rational c2 = c * c;
  const Rational base = frac(6, 5);

  TheoremBound out;
  out.n = n;
  Rational slack_i = 0, slack_ii = 0;
  if (n) {
    slack_i = frac(1, *n);
    slack_ii = frac(5, 2L * *n);
    Rational cn = c * *n;
    out.in_regime = *n >= 10 && cn.get_den() == 1;
  }
  const Rational inner_i = std::min(Rational(lam(params, 1) / 5), Rational(3 * lam(params, 4) / 2));
  out.term_i = lam(params, 2) + (base - slack_i) * lam(params, 1) + inner_i;
  const Rational inner_ii = min3(2 * lam(params, 3) / (9 * c), c2 * lam(params, 1) / 5, 3 * c2 * lam(params, 4) / 2);
  out.term_ii = 2 * lam(params, 2) + (base - slack_ii) * lam(params, 1) + 3 * inner_ii;
  out.bound = std::min(out.term_i, out.term_ii);
  return out;
}

LambdaSolution best_lambda_for_c(double c, const std::array<bool, 4>& allow) {
  if (!(c > 0 && c < 0.5)) invalid_parameter("c must lie in (0, 1/2)");
  // Variables (l1, l2, l3, l4, t). Rows 0-4: each linear piece of the bound
  // minus t is >= 0; rows 5-8: l_i >= 0. A vertex makes four rows tight
  // next to sum(l) = 1.
  const double c2 = c * c;
  const double rows[9][5] = {
      {1.4, 1, 0, 0, -1},
      {1.2, 1, 0, 1.5, -1},
      {1.2, 2, 2.0 / (3.0 * c), 0, -1},
      {1.2 + 0.6 * c2, 2, 0, 0, -1},
      {1.2, 2, 0, 4.5 * c2, -1},
      {1, 0, 0, 0, 0},
      {0, 1, 0, 0, 0},
      {0, 0, 1, 0, 0},
      {0, 0, 0, 1, 0},
  };
  std::vector<int> mandatory, optional;
  for (int r = 0; r < 9; ++r) {
    if (r >= 5 && !allow[static_cast<std::size_t>(r - 5)]) {
      mandatory.push_back(r);
    } else {
      optional.push_back(r);
    }
  }
  if (mandatory.size() >= 4) invalid_parameter("at least one lambda component must be allowed");
  const std::size_t pick = 4 - mandatory.size();

  LambdaSolution best;
  bool found = false;
  std::vector<bool> chosen(optional.size(), false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<long>(pick), true);
  do {
    std::vector<int> active = mandatory;
    for (std::size_t s = 0; s < optional.size(); ++s) {
      if (chosen[s]) active.push_back(optional[s]);
    }
    double a[5][6] = {{1, 1, 1, 1, 0, 1}};
    for (int r = 0; r < 4; ++r) {
      for (int col = 0; col < 5; ++col) a[r + 1][col] = rows[active[static_cast<std::size_t>(r)]][col];
      a[r + 1][5] = 0;
    }
    bool singular = false;
    for (int col = 0; col < 5 && !singular; ++col) {
      int piv = col;
      for (int r = col + 1; r < 5; ++r) {
        if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
      }
      if (std::fabs(a[piv][col]) < 1e-13) {
        singular = true;
        break;
      }
      if (piv != col) std::swap(a[piv], a[col]);
      for (int r = 0; r < 5; ++r) {
        if (r == col) continue;
        const double f = a[r][col] / a[col][col];
        for (int q = col; q < 6; ++q) a[r][q] -= f * a[col][q];
      }
    }
    if (singular) continue;
    double x[5];
    for (int r = 0; r < 5; ++r) x[r] = a[r][5] / a[r][r];
    bool feasible = true;
    for (int r = 0; r < 9 && feasible; ++r) {
      double g = 0;
      for (int col = 0; col < 5; ++col) g += rows[r][col] * x[col];
      feasible = g >= -1e-12;
    }
    for (int r : mandatory) feasible = feasible && std::fabs(x[r - 5]) <= 1e-12;
    if (!feasible) continue;
    if (!found || x[4] > best.value) {
      found = true;
      best.value = x[4];
      for (int i = 0; i < 4; ++i) best.lambda[static_cast<std::size_t>(i)] = std::max(0.0, x[i]);
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  if (!found) throw Error("internal", "inner linear program has no feasible vertex");
  return best;
}

namespace {

template <class F>
double golden_max(F f, double lo, double hi, int iterations) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iterations; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return (lo + hi) / 2;
}

Rational round_decimal(double value, int places) {
  const double scale = std::pow(10.0, places);
  return Rational(mpz_class(static_cast<long>(std::llround(value * scale)))) / Rational(mpz_class(static_cast<long>(std::llround(scale))));
}

}  // namespace

OptimizeResult optimize_params(const OptimizeConfig& config) {
  if (!config.candidates.empty()) {
    std::optional<OptimizeResult> best;
    for (const GapParams& p : config.candidates) {
      TheoremBound b = theorem2_bound(p);
      if (!best || b.bound > best->bound.bound) best = OptimizeResult{p, b};
    }
    return *best;
  }
  if (config.c_grid < 1 || config.places < 1 || config.places > 15) invalid_parameter("bad optimizer configuration");

  auto value = [&](double c) { return best_lambda_for_c(c, config.allow).value; };
  const int cells = config.c_grid + 1;
  int best_j = 1;
  double best_v = value(0.5 / cells);
  for (int j = 2; j < cells; ++j) {
    const double v = value(0.5 * j / cells);
    if (v > best_v) {
      best_v = v;
      best_j = j;
    }
  }
  const double lo = std::max(0.5 * (best_j - 1) / cells, 1e-12);
  const double hi = std::min(0.5 * (best_j + 1) / cells, 0.5 - 1e-12);
  const double c_star = golden_max(value, lo, hi, config.refine_iterations);
  LambdaSolution sol = best_lambda_for_c(c_star, config.allow);

  GapParams p;
  p.c = round_decimal(c_star, config.places);
  std::size_t largest = 0;
  Rational sum = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    p.lambda[i] = config.allow[i] ? round_decimal(sol.lambda[i], config.places) : Rational(0);
    sum += p.lambda[i];
    if (sol.lambda[i] > sol.lambda[largest]) largest = i;
  }
  p.lambda[largest] += 1 - sum;
  return OptimizeResult{p, theorem2_bound(p)};
}

LimitationCertificates limitation_certificates(const GapParams& params, std::optional<int> n) {
  params.validate();
  LimitationCertificates out;
  const Rational& c = params.c;
  const bool small_c = c < frac(1, 9);
  if (!n) {
    const Rational base = frac(6, 5) * lam(params, 1);
    out.ext = base + lam(params, 2) + frac(3, 2) * lam(params, 4);
    out.prime = base + 2 * lam(params, 2) + 2 * lam(params, 3) / (3 * c);
    if (small_c) out.caps = base + 2 * lam(params, 2) + frac(9, 2) * c * c * lam(params, 4);
  } else {
    GapParams at = params;
    at.n = *n;
    const WeightMap w = combine(at);
    out.ext = cost(named_cut(NamedCut::PExt, *n), w);
    out.prime = cost(named_cut(NamedCut::PPrime, *n), w);
    const Rational cn = c * *n;
    if (small_c && cn.get_den() == 1) out.caps = cost(named_cut(NamedCut::P3, *n, c), w);
  }
  out.min = std::min(out.ext, out.prime);
  if (out.caps) out.min = std::min(out.min, *out.caps);
  return out;
}

Rational limitation_min(const GapParams& params, std::optional<int> n) {
  return limitation_certificates(params, n).min;
}

Rational beta_value(const Rational& c) {
  const Rational c2 = c * c;
  return (3 - frac(9, 2) * c2) / (frac(5, 2) - frac(9, 2) * c2 + frac(27, 4) * c2 * c);
}

BetaMax beta_max(int grid, int refine_iterations) {
  if (grid < 2) invalid_parameter("beta grid needs at least two points");
  const double top = 1.0 / 9.0;
  std::vector<double> cs(static_cast<std::size_t>(grid)), vs(cs.size());
  for (int j = 0; j < grid; ++j) cs[static_cast<std::size_t>(j)] = top * j / grid;
  kernels::beta_batch(cs.data(), cs.size(), vs.data());
  const auto best = static_cast<std::size_t>(std::max_element(vs.begin(), vs.end()) - vs.begin());

  auto f = [](double c) {
    double v;
    kernels::beta_batch(&c, 1, &v);
    return v;
  };
  const double lo = best == 0 ? 0.0 : cs[best - 1];
  const double hi = best + 1 < cs.size() ? cs[best + 1] : top;
  BetaMax out{cs[best], vs[best]};
  const double refined = golden_max(f, lo, hi, refine_iterations);
  if (f(refined) > out.beta) out = {refined, f(refined)};
  return out;
}

Rational prop1_gap(const Rational& total_weight, const Rational& min_cost, int n) {
  if (total_weight <= 0) invalid_parameter("total weight must be positive");
  return min_cost * n / total_weight;
}

Rational lp_identity_value(const WeightMap& w) {
  const auto& g = w.graph();
  Rational sum = 0;
  for (const auto& [e, weight] : w.entries()) {
    const Edge& edge = g.edge(e);
    long l1 = 0;
    for (int i = 1; i <= g.k(); ++i) l1 += std::abs(g.coord(edge.u, i) - g.coord(edge.v, i));
    sum += weight * frac(l1, 2L * g.n());
  }
  return sum;
}

GapReport make_gap_report(const GapParams& params) {
  params.validate();
  const int n = params.n;
  GapReport out;
  out.params = params;
  out.theorem = theorem2_bound(params, n);
  out.asymptotic = theorem2_bound(params);
  const WeightMap w = combine(params);
  out.total_weight = total_weight(w);
  out.lp_value = lp_identity_value(w);

  const Rational& c = params.c;
  const Rational& l1 = lam(params, 1);
  const Rational& l4 = lam(params, 4);
  const LimitationCertificates formula = limitation_certificates(params);
  const LimitationCertificates direct = limitation_certificates(params, n);
  const Rational inv_n = frac(1, n), inv_n2 = frac(1, static_cast<long>(n) * n);

  auto add = [&](const char* name, const Rational& f, const Rational& cost_at_n, const Rational& correction) {
    Rational gap = cost_at_n - f;
    if (gap < 0) gap = -gap;
    out.certified_cuts.push_back({name, f, cost_at_n, correction, gap <= correction});
  };
  // Differences come from I1 (the Q0 crossing adds 3/(5n)) and from the
  // uniform component I4, whose cut counts are exact polynomials in n.
  add("P_ext", formula.ext, direct.ext, frac(3, 5) * l1 * inv_n + frac(7, 2) * l4 * inv_n + l4 * inv_n2);
  add("P_prime", formula.prime, direct.prime, 12 * l4 * inv_n2);
  if (formula.caps && direct.caps) {
    add("P3", *formula.caps, *direct.caps, frac(27, 2) * c * l4 * inv_n + 12 * l4 * inv_n2);
  }
  out.gap_estimate = prop1_gap(out.total_weight, out.theorem.bound, n);
  return out;
}

}  // namespace ckrgap
