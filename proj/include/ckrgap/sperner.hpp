#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "ckrgap/cuts.hpp"
#include "ckrgap/lattice.hpp"

namespace ckrgap {

/// H_{k,n}: one hyperedge {x + e_1, ..., x + e_k} per x in Delta_{k,n-1},
/// stored in the colex order of x.
class SimplexHypergraph {
 public:
  SimplexHypergraph(int k, int n);

  int k() const noexcept { return graph_->k(); }
  int n() const noexcept { return graph_->n(); }
  const SimplexGraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }

  std::size_t size() const noexcept { return members_.size() / static_cast<std::size_t>(k()); }
  /// Nodes of hyperedge h; member i-1 is x + e_i.
  std::span<const NodeId> hyperedge(std::size_t h) const noexcept {
    const auto k = static_cast<std::size_t>(this->k());
    return {members_.data() + h * k, k};
  }
  /// The C(k,2) edges induced by hyperedge h.
  std::vector<EdgeId> clique(std::size_t h) const;

 private:
  GraphPtr graph_;
  std::vector<NodeId> members_;
};

SimplexHypergraph build_hypergraph(int k, int n);

/// Labels in 1..k, one per node of h.graph().
std::size_t count_monochromatic(const SimplexHypergraph& h, std::span<const Label> labels);

bool is_sperner_admissible(const SimplexGraph& g, std::span<const Label> labels);

/// C(n+k-3, k-1), the maximum number of monochromatic hyperedges of an
/// admissible labeling.
Rational mv_bound(int k, int n);

/// (1/(k-2)! - beta) (n+k-3)!/(n-1)!, a lower bound on non-monochromatic
/// hyperedges when all inadmissible labels sit on one facet.
Rational nonmon_bound(int k, int n, const Rational& beta);

/// beta for a raw inadmissible count: count / ((n+k-2)!/n!).
Rational inadmissible_beta(int k, int n, std::uint64_t count);

struct ExtremalResult {
  std::size_t max_monochromatic = 0;
  std::vector<Label> witness;  // first maximizer in enumeration order
  std::uint64_t explored = 0;
  /// Face-restricted mode only: inadmissible count -> (max monochromatic,
  /// min non-monochromatic) over labelings with that count.
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> by_inadmissible;
};

inline constexpr std::uint64_t kDefaultLabelingBudget = 50'000'000;

/// Exhaustive maximum of count_monochromatic. Admissible mode ranges over
/// labels in Support(x). Face-restricted mode also allows the label k on the
/// facet spanned by s_1..s_{k-1}; those are the inadmissible labels.
/// Throws Error("budget-exhausted") when the space exceeds `budget`.
ExtremalResult exhaustive_extremal(int k, int n, bool face_restricted,
                                   std::uint64_t budget = kDefaultLabelingBudget);

struct Lemma5Result {
  Rational alpha;
  Rational lower_bound;  // 3 alpha n (n+1)
  std::size_t cut_size = 0;
  bool ok = false;
};

/// Delta_{4,n} only; p must be non-opposite.
Lemma5Result lemma5_check(const CutLabeling& p);

/// Same check from raw labels (no validation), for enumeration loops.
Lemma5Result lemma5_check(const SimplexGraph& g, std::span<const Label> labels);

}  // namespace ckrgap
