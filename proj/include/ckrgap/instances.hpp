#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ckrgap/lattice.hpp"
#include "ckrgap/rational.hpp"

namespace ckrgap {

/// Sparse non-negative edge weights over a SimplexGraph. Edges that are not
/// listed weigh zero. Immutable after construction.
class WeightMap {
 public:
  using Entry = std::pair<EdgeId, Rational>;

  WeightMap(GraphPtr graph, std::string tag);
  /// Entries may come in any order; zero weights are dropped, duplicates and
  /// negative weights are rejected.
  WeightMap(GraphPtr graph, std::string tag, std::vector<Entry> entries);

  const SimplexGraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const std::string& tag() const noexcept { return tag_; }

  Rational weight(EdgeId e) const;
  /// Positive-weight entries sorted by edge id.
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t positive_edge_count() const noexcept { return entries_.size(); }

 private:
  GraphPtr graph_;
  std::string tag_;
  std::vector<Entry> entries_;
};

Rational total_weight(const WeightMap& w);

enum class Component { I1, I2, I3, I4 };

const char* component_name(Component c) noexcept;
std::optional<Component> parse_component(std::string_view name);

/// Convex-combination parameters. `c` is only consulted when lambda_3 > 0
/// (and by the bound formulas).
struct GapParams {
  std::array<Rational, 4> lambda;
  Rational c;
  int n = 0;

  /// Throws Error("lambda-simplex-violation") when lambda is not a
  /// probability vector, invalid-parameter when c is outside (0, 1/2).
  void validate() const;
};

/// The values reported with the 1.20016 bound, parsed as exact decimals.
GapParams reported_params(int n = 0);

/// The scaled three-terminal instance J on Delta_{3,n} (n divisible by 3):
/// total weight exactly n.
WeightMap build_amm_j(int n);

/// Weight of the d-th edge (1-based, counted from either end) of a boundary
/// line of J, in units of rho = 3/(5n).
int amm_boundary_units(int n, int d);

/// One of the four components on Delta_{4,n}. `c` is required for I3.
WeightMap build_component(Component which, int n, const std::optional<Rational>& c = std::nullopt);

/// Edge-wise sum lambda_1 I_1 + ... + lambda_4 I_4 at params.n.
WeightMap combine(const GapParams& params);

}  // namespace ckrgap
