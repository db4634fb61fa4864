#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perron/puiseux.hpp"
#include "perron/tropical.hpp"
#include "perron/trop.hpp"

namespace perron {

/// Finite digraph with at most one exact-rational-weighted arc per ordered
/// node pair; absence is encoded as +inf.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_arc(int src, int dst) const { return w_(dst, src).is_finite(); }
  Trop weight(int src, int dst) const { return w_(dst, src); }
  void set_arc(int src, int dst, const Rational& weight) { w_(dst, src) = Trop(weight); }
  void remove_arc(int src, int dst) { w_(dst, src) = Trop::infinity(); }

  /// Adjacency matrix in the tropical convention: entry (i,j) is the weight
  /// of the arc j -> i.
  const TropicalMatrix& adjacency_matrix() const { return w_; }
  static WeightedDigraph from_adjacency_matrix(const TropicalMatrix& C,
                                               std::vector<std::string> labels = {});

  /// Smallest arc weight s(G); +inf when arcless.
  Trop smallest_weight() const;

  /// Arc list (src, dst, weight), ordered by (src, dst).
  struct Arc { int src, dst; Rational weight; };
  std::vector<Arc> arcs() const;

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.w_ == b.w_;
  }

 private:
  int n_ = 0;
  TropicalMatrix w_;
  std::vector<std::string> labels_;
};

/// Node map of a weighted-digraph homomorphism.
struct GraphMorphism {
  std::vector<int> map;  // source node -> target node
  int target_size = 0;
};

/// Checks the homomorphism weight condition: every arc between nodes with
/// distinct images has a target arc of weight <= its own.
bool is_homomorphism(const WeightedDigraph& G, const WeightedDigraph& H,
                     const GraphMorphism& f);

/// Composition of single-node translations S_k(nu); commuting, so stored
/// canonically as per-node totals ordered by node.
struct SimilarityTransform {
  std::vector<Rational> shift;  // one entry per node

  static SimilarityTransform identity(int n) { return {std::vector<Rational>(n)}; }
  bool is_identity() const {
    for (const Rational& s : shift)
      if (!s.is_zero()) return false;
    return true;
  }
  SimilarityTransform then(const SimilarityTransform& o) const {
    SimilarityTransform out = *this;
    for (size_t i = 0; i < shift.size(); ++i) out.shift[i] += o.shift[i];
    return out;
  }
};

/// Adjacency graph of a square Puiseux matrix: arc j -> i of weight
/// ϑ(Y_{i,j}) for each nonzero entry.
WeightedDigraph adjacency_graph(const PuiseuxMatrix& Y);

/// Subgraph with arcs of weight > mu removed.
WeightedDigraph truncate_graph(const WeightedDigraph& G, const Trop& mu);

/// Leading term: truncation at s(G).
WeightedDigraph graph_leading_term(const WeightedDigraph& G);

/// Quotient by connectivity (resp. strong connectivity) of the leading term.
/// Quotient arcs join distinct classes with the min representative weight.
std::pair<WeightedDigraph, GraphMorphism> condense(const WeightedDigraph& G);
std::pair<WeightedDigraph, GraphMorphism> strong_condense(const WeightedDigraph& G);

/// Shift outgoing arcs of each node by +shift and incoming by -shift; loops
/// are unchanged. Throws UnknownNode for out-of-range moves.
WeightedDigraph similarity_translate(const WeightedDigraph& G, const SimilarityTransform& S);
WeightedDigraph similarity_translate(const WeightedDigraph& G,
                                     const std::vector<std::pair<int, Rational>>& moves);

/// Pull a transform on the target of f back to the source: every preimage of
/// node i inherits i's shift.
SimilarityTransform pull_back(const SimilarityTransform& S, const GraphMorphism& f);

/// Every weak component of the leading term is strongly connected.
bool is_flat_slanted(const WeightedDigraph& G);

/// The leading term is an E-forest: components acyclic, each containing one
/// E-node which is its unique maximal node.
bool is_E_forest(const WeightedDigraph& G, const std::vector<int>& E);

/// Similarity transform to a flat-slanted graph: tropical row-min scaling
/// followed by an epsilon-separation of the strong-condensation forest order.
/// Requires G strongly connected. epsilon: explicit value (validated, throws
/// DeltaTooLarge) or certified default.
std::pair<WeightedDigraph, SimilarityTransform> flat_slanted_form(
    const WeightedDigraph& G, std::optional<Rational> epsilon = std::nullopt);

/// Similarity transform of a flat-slanted, loop-free-on-processed-components
/// graph into an E-gently-slanted one: s drops by exactly delta, the leading
/// term becomes an E-forest. Components fully inside E are untouched.
std::pair<WeightedDigraph, SimilarityTransform> gently_slanted_form(
    const WeightedDigraph& H, const std::vector<int>& E,
    std::optional<Rational> delta = std::nullopt);

/// Certified "sufficiently small" bound: (gap to the second-smallest distinct
/// arc weight) / (2N).
std::optional<Rational> separation_bound(const WeightedDigraph& G);

/// DOT-format text export; weights printed as exact rationals.
std::string to_dot(const WeightedDigraph& G);

/// Weak components of the leading term (ids ordered by smallest node).
std::pair<std::vector<int>, int> leading_components(const WeightedDigraph& G);

bool is_strongly_connected(const WeightedDigraph& G);

}  // namespace perron
