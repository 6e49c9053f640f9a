#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ckrgap/cuts.hpp"
#include "ckrgap/instances.hpp"

namespace ckrgap {

struct SearchBudget {
  enum class Mode { Exhaustive, BranchAndBound };

  /// Labelings (exhaustive) or label assignments (branch-and-bound).
  std::uint64_t max_labelings = 2'000'000'000;
  Mode mode = Mode::Exhaustive;
  /// Exhaustive mode splits the most significant digit across workers.
  unsigned threads = 1;
};

struct SearchResult {
  Rational min_cost;
  std::optional<CutLabeling> argmin;
  std::uint64_t explored = 0;
  bool proven_optimal = false;
};

/// Integer image of a WeightMap: weight(e) = scaled(e) / denominator(), with
/// the denominator the lcm of all weight denominators.
class ScaledWeights {
 public:
  /// Throws Error("internal") if the scaled total does not fit in 62 bits.
  explicit ScaledWeights(const WeightMap& w);

  const SimplexGraph& graph() const noexcept { return *graph_; }
  std::int64_t scaled(EdgeId e) const noexcept { return dense_[e]; }
  const mpz_class& denominator() const noexcept { return den_; }
  Rational to_rational(std::int64_t value) const;

  /// Cost of a labeling given as one int32 label per node.
  std::int64_t cost(std::span<const std::int32_t> labels) const noexcept;

 private:
  GraphPtr graph_;
  mpz_class den_;
  std::vector<std::int64_t> dense_;
  std::vector<std::uint32_t> u_, v_;
  std::vector<std::int64_t> w_;
};

/// Per-node label choices of a non-opposite cut: the terminal's own label,
/// otherwise Support(x) ascending followed by k+1.
std::vector<std::vector<Label>> non_opposite_options(const SimplexGraph& g);

/// Visits every non-opposite cut of g once, in mixed-radix order (node 0
/// most significant). Throws Error("budget-exhausted") when there are more
/// than `budget` cuts. Returns the number visited.
std::uint64_t enumerate_non_opposite(const SimplexGraph& g,
                                     const std::function<void(std::span<const Label>)>& visit,
                                     std::uint64_t budget = 2'000'000'000);

/// Exact minimum cost over non-opposite cuts of w's graph (k in {3, 4}).
/// Ties keep the first labeling in the mode's visiting order. An exhausted
/// budget yields proven_optimal = false with the best labeling seen (none
/// for a zero budget).
SearchResult min_non_opposite_cost(const WeightMap& w, const SearchBudget& budget = {});

/// Minimum weight of an edge set separating s_i from every node of the
/// opposite side V_jk, on Delta_{3,n}. Exact max-flow.
Rational min_terminal_face_cut(const WeightMap& w, int i);

/// True iff result is proven optimal and its minimum is at least the finite
/// two-term bound at params.n.
bool verify_theorem2(const GapParams& params, const SearchResult& result);

}  // namespace ckrgap
