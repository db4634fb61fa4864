#include "perron/tropical.hpp"

#include <algorithm>

#include "perron/scc.hpp"

namespace perron {

TropicalMatrix trop_product(const TropicalMatrix& C, const TropicalMatrix& D) {
  if (C.cols() != D.rows()) throw DimensionMismatch("trop_product: inner dimensions disagree");
  TropicalMatrix X(C.rows(), D.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) {
      Trop m = Trop::infinity();
      for (int k = 0; k < C.cols(); ++k) m = min(m, C(i, k) + D(k, j));
      X(i, j) = m;
    }
  return X;
}

TropicalMatrix trop_scale(const Trop& a, const TropicalMatrix& C) {
  TropicalMatrix X(C.rows(), C.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j) X(i, j) = a + C(i, j);
  return X;
}

TropicalMatrix kleene_star(const TropicalMatrix& C) {
  const int n = C.rows();
  TropicalMatrix D = C;
  // Floyd-Warshall; entry (i,j) ends as the least weight of a nonempty path
  // j -> i, then the diagonal is clipped at 0 (empty path).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) D(i, j) = min(D(i, j), D(i, k) + D(k, j));
  for (int i = 0; i < n; ++i) D(i, i) = min(D(i, i), Trop(Rational(0)));
  return D;
}

namespace {

std::vector<std::vector<int>> adjacency_lists(const TropicalMatrix& C) {
  // Arc j -> i for each finite C_{i,j}.
  std::vector<std::vector<int>> adj(C.rows());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      if (C(i, j).is_finite()) adj[j].push_back(i);
  return adj;
}

/// Karp's minimum cycle mean on one strongly connected node set.
Trop karp_cycle_mean(const TropicalMatrix& C, const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  std::vector<int> pos(C.rows(), -1);
  for (int k = 0; k < m; ++k) pos[nodes[k]] = k;

  // D[k][v] = least weight of a walk of length exactly k from nodes[0] to v.
  std::vector<std::vector<Trop>> D(m + 1, std::vector<Trop>(m, Trop::infinity()));
  D[0][0] = Trop(Rational(0));
  bool any_arc = false;
  for (int k = 1; k <= m; ++k)
    for (int vi = 0; vi < m; ++vi)
      for (int ui = 0; ui < m; ++ui) {
        const Trop& w = C(nodes[vi], nodes[ui]);  // arc u -> v
        if (w.is_inf()) continue;
        any_arc = true;
        D[k][vi] = min(D[k][vi], D[k - 1][ui] + w);
      }
  if (!any_arc) return Trop::infinity();

  Trop best = Trop::infinity();
  for (int vi = 0; vi < m; ++vi) {
    if (D[m][vi].is_inf()) continue;
    bool have = false;
    Rational worst;
    for (int k = 0; k < m; ++k) {
      if (D[k][vi].is_inf()) continue;
      Rational mean = (D[m][vi].finite() - D[k][vi].finite()) / Rational(m - k);
      if (!have || mean > worst) { worst = mean; have = true; }
    }
    if (have) best = min(best, Trop(worst));
  }
  return best;
}

}  // namespace

Trop trop_eigenvalue(const TropicalMatrix& C) {
  if (C.rows() != C.cols()) throw DimensionMismatch("trop_eigenvalue: square matrix required");
  const int n = C.rows();
  auto [comp, ncomp] = strongly_connected_components(adjacency_lists(C));
  Trop best = Trop::infinity();
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) nodes.push_back(v);
    // Single node without a loop contributes no cycle.
    if (nodes.size() == 1 && C(nodes[0], nodes[0]).is_inf()) continue;
    best = min(best, karp_cycle_mean(C, nodes));
  }
  return best;
}

std::vector<int> critical_nodes(const TropicalMatrix& C, const Trop& lambda) {
  if (lambda.is_inf()) return {};
  const int n = C.rows();
  TropicalMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = C(i, j) - lambda.finite();
  TropicalMatrix plus = trop_product(A, kleene_star(A));
  std::vector<int> crit;
  for (int j = 0; j < n; ++j)
    if (plus(j, j) == Trop(Rational(0))) crit.push_back(j);
  return crit;
}

std::vector<Trop> trop_eigenvector_at(const TropicalMatrix& C, const Trop& lambda,
                                      int critical_node) {
  const int n = C.rows();
  if (lambda.is_inf()) throw NotIrreducible("trop_eigenvector: infinite eigenvalue");
  TropicalMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = C(i, j) - lambda.finite();
  TropicalMatrix star = kleene_star(A);
  std::vector<Trop> V(n);
  for (int i = 0; i < n; ++i) V[i] = star(i, critical_node);
  if (!is_trop_eigenvector(C, lambda, V))
    throw NotIrreducible("trop_eigenvector: no eigenvector at node " +
                         std::to_string(critical_node + 1));
  return V;
}

std::vector<Trop> trop_eigenvector(const TropicalMatrix& C, const Trop& lambda) {
  std::vector<int> crit = critical_nodes(C, lambda);
  if (crit.empty()) throw NotIrreducible("trop_eigenvector: no critical node");
  return trop_eigenvector_at(C, lambda, crit.front());
}

bool is_trop_eigenvector(const TropicalMatrix& C, const Trop& lambda,
                         const std::vector<Trop>& V) {
  const int n = C.rows();
  bool some_finite = false;
  for (const Trop& v : V) some_finite |= v.is_finite();
  if (!some_finite) return false;
  for (int i = 0; i < n; ++i) {
    Trop row = Trop::infinity();
    for (int j = 0; j < n; ++j) row = min(row, C(i, j) + V[j]);
    if (row != lambda + V[i]) return false;
  }
  return true;
}

std::vector<Rational> row_min_scaling(const TropicalMatrix& C) {
  const int n = C.rows();
  auto [comp, ncomp] = strongly_connected_components(adjacency_lists(C));
  if (ncomp != 1) throw NotIrreducible("row_min_scaling: adjacency graph not strongly connected");
  Trop lambda = trop_eigenvalue(C);
  if (lambda.is_inf()) throw NotIrreducible("row_min_scaling: matrix is (+inf)");
  // Already row-min scaled: any constant diagonal works.
  bool scaled = true;
  for (int i = 0; i < n && scaled; ++i) {
    Trop row = Trop::infinity();
    for (int j = 0; j < n; ++j) row = min(row, C(i, j));
    scaled = (row == lambda);
  }
  if (scaled) return std::vector<Rational>(n, Rational(0));
  std::vector<Trop> V = trop_eigenvector(C, lambda);
  std::vector<Rational> gamma(n);
  for (int i = 0; i < n; ++i) {
    if (V[i].is_inf()) throw NotIrreducible("row_min_scaling: infinite eigenvector entry");
    gamma[i] = V[i].finite();
  }
  return gamma;
}

}  // namespace perron
