#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ckrgap/instances.hpp"
#include "ckrgap/lattice.hpp"

namespace ckrgap {

using Label = std::uint8_t;

/// A cut of Delta_{k,n}: every node gets a label in 1..k+1 and each terminal
/// s_i is labeled i. Label k+1 is the auxiliary label.
class CutLabeling {
 public:
  CutLabeling(GraphPtr graph, std::vector<Label> labels);

  const SimplexGraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label operator[](NodeId v) const noexcept { return labels_[v]; }
  Label aux_label() const noexcept { return static_cast<Label>(graph_->k() + 1); }
  std::size_t count(Label l) const noexcept;

  bool operator==(const CutLabeling& other) const;

 private:
  GraphPtr graph_;
  std::vector<Label> labels_;
};

/// Sorted edge ids.
struct CutSet {
  std::vector<EdgeId> edges;
  std::size_t size() const noexcept { return edges.size(); }
  bool contains(EdgeId e) const;
  bool is_subset_of(const CutSet& other) const;
};

CutSet delta(const CutLabeling& p);
Rational cost(const CutLabeling& p, const WeightMap& w);

/// Every label lies in Support(x) or equals k+1.
bool is_non_opposite(const CutLabeling& p);
/// Delta_{3,n} only: each boundary line L_ij carries at least two cut edges.
bool is_fragmenting(const CutLabeling& q);

/// Restriction of a cut of Delta_{k,n} to the face spanned by s_1..s_{k-1},
/// relabeling k+1 to k. Throws Error("non-restrictable") if a face node is
/// labeled k.
CutLabeling restrict_to_face(const CutLabeling& p);

/// Relabels each node by the terminal whose component of G - delta(q)
/// contains it, and everything else with the auxiliary label.
CutLabeling canonicalize_reachability(const CutLabeling& q);

enum class NamedCut { Q0, PExt, PPrime, P3, Lemma5Tight };

std::optional<NamedCut> parse_named_cut(std::string_view name);
const char* named_cut_name(NamedCut c) noexcept;

/// Q0 lives on Delta_{3,n}; the others on Delta_{4,n}. `param` is c for P3
/// and the radius fraction alpha for Lemma5Tight.
CutLabeling named_cut(NamedCut which, int n, const std::optional<Rational>& param = std::nullopt);

}  // namespace ckrgap
