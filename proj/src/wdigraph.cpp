#include "perron/wdigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "perron/errors.hpp"
#include "perron/scc.hpp"

namespace perron {

WeightedDigraph::WeightedDigraph(int n, std::vector<std::string> labels)
    : n_(n), w_(n, n), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i + 1));
  }
}

WeightedDigraph WeightedDigraph::from_adjacency_matrix(const TropicalMatrix& C,
                                                       std::vector<std::string> labels) {
  if (C.rows() != C.cols()) throw DimensionMismatch("from_adjacency_matrix");
  WeightedDigraph G(C.rows(), std::move(labels));
  G.w_ = C;
  return G;
}

Trop WeightedDigraph::smallest_weight() const {
  Trop s = Trop::infinity();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s = min(s, w_(i, j));
  return s;
}

std::vector<WeightedDigraph::Arc> WeightedDigraph::arcs() const {
  std::vector<Arc> out;
  for (int src = 0; src < n_; ++src)
    for (int dst = 0; dst < n_; ++dst)
      if (has_arc(src, dst)) out.push_back({src, dst, weight(src, dst).finite()});
  return out;
}

bool is_homomorphism(const WeightedDigraph& G, const WeightedDigraph& H,
                     const GraphMorphism& f) {
  if (static_cast<int>(f.map.size()) != G.size() || f.target_size != H.size()) return false;
  for (const auto& a : G.arcs()) {
    int fi = f.map[a.src], fj = f.map[a.dst];
    if (fi == fj) continue;
    if (!H.has_arc(fi, fj)) return false;
    if (!(Trop(a.weight) >= H.weight(fi, fj))) return false;
  }
  return true;
}

WeightedDigraph adjacency_graph(const PuiseuxMatrix& Y) {
  if (Y.rows() != Y.cols()) throw DimensionMismatch("adjacency_graph: square matrix required");
  WeightedDigraph G(Y.rows());
  for (int i = 0; i < Y.rows(); ++i)
    for (int j = 0; j < Y.cols(); ++j) {
      Trop v = Y(i, j).val();
      if (v.is_finite()) G.set_arc(j, i, v.finite());
    }
  return G;
}

WeightedDigraph truncate_graph(const WeightedDigraph& G, const Trop& mu) {
  WeightedDigraph out(G.size(), G.labels());
  for (const auto& a : G.arcs())
    if (Trop(a.weight) <= mu) out.set_arc(a.src, a.dst, a.weight);
  return out;
}

WeightedDigraph graph_leading_term(const WeightedDigraph& G) {
  return truncate_graph(G, G.smallest_weight());
}

namespace {

std::vector<std::vector<int>> arc_lists(const WeightedDigraph& G) {
  std::vector<std::vector<int>> adj(G.size());
  for (const auto& a : G.arcs()) adj[a.src].push_back(a.dst);
  return adj;
}

/// Renumber component ids so classes are ordered by their smallest node.
std::pair<std::vector<int>, int> canonical_ids(std::vector<int> comp, int ncomp) {
  std::vector<int> remap(ncomp, -1);
  int next = 0;
  for (int v = 0; v < static_cast<int>(comp.size()); ++v)
    if (remap[comp[v]] == -1) remap[comp[v]] = next++;
  for (int& id : comp) id = remap[id];
  return {comp, ncomp};
}

std::pair<WeightedDigraph, GraphMorphism> quotient_by(const WeightedDigraph& G,
                                                      const std::vector<int>& comp, int ncomp) {
  std::vector<std::string> labels(ncomp);
  for (int v = 0; v < G.size(); ++v) {
    if (!labels[comp[v]].empty()) labels[comp[v]] += ",";
    labels[comp[v]] += G.label(v);
  }
  for (std::string& l : labels) l = "{" + l + "}";
  WeightedDigraph Q(ncomp, labels);
  for (const auto& a : G.arcs()) {
    int x = comp[a.src], y = comp[a.dst];
    if (x == y) continue;
    if (!Q.has_arc(x, y) || Trop(a.weight) < Q.weight(x, y)) Q.set_arc(x, y, a.weight);
  }
  return {Q, GraphMorphism{comp, ncomp}};
}

}  // namespace

std::pair<WeightedDigraph, GraphMorphism> condense(const WeightedDigraph& G) {
  auto [comp, ncomp] = weak_components(arc_lists(graph_leading_term(G)));
  auto [c, n] = canonical_ids(comp, ncomp);
  return quotient_by(G, c, n);
}

std::pair<WeightedDigraph, GraphMorphism> strong_condense(const WeightedDigraph& G) {
  auto [comp, ncomp] = strongly_connected_components(arc_lists(graph_leading_term(G)));
  auto [c, n] = canonical_ids(comp, ncomp);
  return quotient_by(G, c, n);
}

WeightedDigraph similarity_translate(const WeightedDigraph& G, const SimilarityTransform& S) {
  if (static_cast<int>(S.shift.size()) != G.size())
    throw UnknownNode("similarity_translate: transform size mismatch");
  WeightedDigraph out(G.size(), G.labels());
  for (const auto& a : G.arcs())
    out.set_arc(a.src, a.dst, a.weight + S.shift[a.src] - S.shift[a.dst]);
  return out;
}

WeightedDigraph similarity_translate(const WeightedDigraph& G,
                                     const std::vector<std::pair<int, Rational>>& moves) {
  SimilarityTransform S = SimilarityTransform::identity(G.size());
  for (const auto& [node, nu] : moves) {
    if (node < 0 || node >= G.size())
      throw UnknownNode("similarity_translate: node " + std::to_string(node + 1));
    S.shift[node] += nu;
  }
  return similarity_translate(G, S);
}

SimilarityTransform pull_back(const SimilarityTransform& S, const GraphMorphism& f) {
  if (static_cast<int>(S.shift.size()) != f.target_size)
    throw UnknownNode("pull_back: transform does not match morphism target");
  SimilarityTransform out;
  out.shift.resize(f.map.size());
  for (size_t v = 0; v < f.map.size(); ++v) {
    if (f.map[v] < 0 || f.map[v] >= f.target_size) throw UnknownNode("pull_back: bad morphism");
    out.shift[v] = S.shift[f.map[v]];
  }
  return out;
}

std::pair<std::vector<int>, int> leading_components(const WeightedDigraph& G) {
  return weak_components(arc_lists(graph_leading_term(G)));
}

bool is_strongly_connected(const WeightedDigraph& G) {
  auto [comp, ncomp] = strongly_connected_components(arc_lists(G));
  (void)comp;
  return ncomp <= 1;
}

bool is_flat_slanted(const WeightedDigraph& G) {
  WeightedDigraph lead = graph_leading_term(G);
  auto adj = arc_lists(lead);
  auto [weak, nweak] = weak_components(adj);
  auto [strong, nstrong] = strongly_connected_components(adj);
  (void)weak;
  // Each weak component is strongly connected iff the two partitions agree.
  return nweak == nstrong;
}

bool is_E_forest(const WeightedDigraph& G, const std::vector<int>& E) {
  WeightedDigraph lead = graph_leading_term(G);
  auto adj = arc_lists(lead);
  const int n = G.size();
  std::vector<bool> inE(n, false);
  for (int e : E) {
    if (e < 0 || e >= n) throw UnknownNode("is_E_forest: node out of range");
    inE[e] = true;
  }
  // Acyclic: every strongly connected component is a single loop-free node.
  auto [strong, nstrong] = strongly_connected_components(adj);
  (void)strong;
  if (nstrong != n) return false;
  for (int v = 0; v < n; ++v)
    if (lead.has_arc(v, v)) return false;

  auto [weak, nweak] = weak_components(adj);
  std::vector<int> e_count(nweak, 0), sources(nweak, 0);
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) ++indeg[w];
  std::vector<int> source_node(nweak, -1);
  for (int v = 0; v < n; ++v) {
    if (inE[v]) ++e_count[weak[v]];
    if (indeg[v] == 0) {
      ++sources[weak[v]];
      source_node[weak[v]] = v;
    }
  }
  for (int c = 0; c < nweak; ++c) {
    if (e_count[c] != 1 || sources[c] != 1) return false;
    if (!inE[source_node[c]]) return false;
  }
  return true;
}

std::optional<Rational> separation_bound(const WeightedDigraph& G) {
  std::set<Rational> weights;
  for (const auto& a : G.arcs()) weights.insert(a.weight);
  if (weights.size() < 2) return std::nullopt;
  auto it = weights.begin();
  Rational lo = *it++;
  Rational gap = *it - lo;
  return gap / Rational(2 * G.size());
}

namespace {

/// Epsilon-separation stage: spread the strong-condensation classes of the
/// leading term along the forest order so only intra-class leading arcs stay
/// minimal.
SimilarityTransform separation_shifts(const WeightedDigraph& J, const Rational& eps) {
  WeightedDigraph lead = graph_leading_term(J);
  auto [cls, ncls] = strongly_connected_components(arc_lists(lead));

  // Forest order on classes: x > y when the leading term has an arc x -> y.
  std::vector<std::set<int>> out(ncls), in(ncls);
  for (const auto& a : lead.arcs()) {
    int x = cls[a.src], y = cls[a.dst];
    if (x == y) continue;
    out[x].insert(y);
    in[y].insert(x);
  }
  // Sinks-first numbering (order-preserving bijection), ties by smallest node.
  std::vector<int> smallest(ncls, J.size());
  for (int v = 0; v < J.size(); ++v) smallest[cls[v]] = std::min(smallest[cls[v]], v);
  std::vector<int> phi(ncls, 0);
  std::vector<int> pending(ncls);
  for (int c = 0; c < ncls; ++c) pending[c] = static_cast<int>(out[c].size());
  auto cmp = [&](int a, int b) { return smallest[a] > smallest[b]; };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int c = 0; c < ncls; ++c)
    if (pending[c] == 0) ready.push(c);
  int next = 1;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    phi[c] = next++;
    for (int p : in[c])
      if (--pending[p] == 0) ready.push(p);
  }

  SimilarityTransform S = SimilarityTransform::identity(J.size());
  for (int v = 0; v < J.size(); ++v) S.shift[v] = eps * Rational(phi[cls[v]] - 1);
  return S;
}

}  // namespace

std::pair<WeightedDigraph, SimilarityTransform> flat_slanted_form(
    const WeightedDigraph& G, std::optional<Rational> epsilon) {
  if (!is_strongly_connected(G)) throw NotStronglyConnected("flat_slanted_form");
  SimilarityTransform total = SimilarityTransform::identity(G.size());
  if (is_flat_slanted(G)) return {G, total};

  // Row-min scaling: after translating by a tropical eigenvector every node
  // has an outgoing arc of weight Λ(G) and no lighter arc exists.
  std::vector<Rational> gamma = row_min_scaling(G.adjacency_matrix());
  SimilarityTransform scale{gamma};
  WeightedDigraph J = similarity_translate(G, scale);
  total = total.then(scale);
  if (is_flat_slanted(J)) return {J, total};

  std::optional<Rational> bound = separation_bound(J);
  if (!bound) throw NotFlatSlanted("flat_slanted_form: no separation gap");
  Rational eps = epsilon.value_or(*bound / Rational(2));
  const Trop s = J.smallest_weight();
  for (int attempt = 0; attempt < 64; ++attempt) {
    SimilarityTransform sep = separation_shifts(J, eps);
    WeightedDigraph H = similarity_translate(J, sep);
    if (is_flat_slanted(H) && H.smallest_weight() == s) return {H, total.then(sep)};
    if (epsilon) throw DeltaTooLarge("flat_slanted_form: epsilon " + epsilon->str());
    eps = eps / Rational(2);
  }
  throw DeltaTooLarge("flat_slanted_form: could not certify epsilon");
}

std::pair<WeightedDigraph, SimilarityTransform> gently_slanted_form(
    const WeightedDigraph& H, const std::vector<int>& E, std::optional<Rational> delta) {
  const int n = H.size();
  if (!is_flat_slanted(H)) throw NotFlatSlanted("gently_slanted_form: input not flat-slanted");
  std::vector<bool> inE(n, false);
  for (int e : E) {
    if (e < 0 || e >= n) throw UnknownNode("gently_slanted_form: node out of range");
    inE[e] = true;
  }
  if (E.empty() || static_cast<int>(E.size()) >= n)
    throw BadE("gently_slanted_form: E must be a proper nonempty subset");

  WeightedDigraph lead = graph_leading_term(H);
  auto [comp, ncomp] = leading_components(H);
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  // Components fully inside E stay untouched; the rest get the layered shift.
  std::vector<std::vector<int>> processed;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> eloc;
    for (int v : members[c])
      if (inE[v]) eloc.push_back(v);
    if (eloc.empty()) throw BadE("gently_slanted_form: E misses component of node " +
                                 H.label(members[c].front()));
    if (eloc.size() == members[c].size()) continue;
    for (int v : members[c])
      if (H.has_arc(v, v))
        throw BadE("gently_slanted_form: processed component has a simple loop at " +
                   H.label(v));
    processed.push_back(members[c]);
  }
  if (processed.empty()) return {H, SimilarityTransform::identity(n)};

  // BFS-layer function d per processed component: E-nodes at (k-1)/e by label
  // order, other nodes at (shortest leading-arc distance from E) plus the
  // originating offset.
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp_nodes : processed) {
    std::vector<int> eloc;
    for (int v : comp_nodes)
      if (inE[v]) eloc.push_back(v);
    std::sort(eloc.begin(), eloc.end());
    const Rational e_count(static_cast<std::int64_t>(eloc.size()));
    std::map<int, Rational> dist;
    using Item = std::pair<Rational, int>;
    auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    for (size_t k = 0; k < eloc.size(); ++k) {
      Rational d0 = Rational(static_cast<std::int64_t>(k)) / e_count;
      dist[eloc[k]] = d0;
      pq.push({d0, eloc[k]});
    }
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (dist.count(v) && dist[v] < dv) continue;
      for (int w : comp_nodes) {
        if (!lead.has_arc(v, w)) continue;
        Rational cand = dv + Rational(1);
        if (!dist.count(w) || cand < dist[w]) {
          dist[w] = cand;
          pq.push({cand, w});
        }
      }
    }
    for (int v : comp_nodes) d[v] = dist.at(v);
  }

  std::optional<Rational> bound = separation_bound(H);
  if (!bound) throw DeltaTooLarge("gently_slanted_form: no weight gap to separate");
  Rational del = delta.value_or(*bound / Rational(2));
  const Trop s = H.smallest_weight();
  for (int attempt = 0; attempt < 64; ++attempt) {
    SimilarityTransform S = SimilarityTransform::identity(n);
    for (int v = 0; v < n; ++v) S.shift[v] = d[v] * del;
    WeightedDigraph F = similarity_translate(H, S);
    if (is_E_forest(F, E) && F.smallest_weight() == s - del) return {F, S};
    if (delta) throw DeltaTooLarge("gently_slanted_form: delta " + delta->str());
    del = del / Rational(2);
  }
  throw DeltaTooLarge("gently_slanted_form: could not certify delta");
}

std::string to_dot(const WeightedDigraph& G) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 0; v < G.size(); ++v) os << "  \"" << G.label(v) << "\";\n";
  for (const auto& a : G.arcs())
    os << "  \"" << G.label(a.src) << "\" -> \"" << G.label(a.dst) << "\" [weight=\""
       << a.weight.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace perron
