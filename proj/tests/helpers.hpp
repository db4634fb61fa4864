#pragma once

#include <random>
#include <vector>

#include "perron/puiseux.hpp"
#include "perron/rational.hpp"
#include "perron/trop.hpp"
#include "perron/wdigraph.hpp"

namespace perron::testing {

inline Rational Q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline PuiseuxSeries S(std::initializer_list<std::pair<Rational, double>> terms,
                       Trop trunc = Trop::infinity()) {
  std::vector<Term> ts;
  for (const auto& [e, c] : terms) ts.push_back({e, c});
  return PuiseuxSeries::from_terms(ts, trunc);
}

/// All simple cycles of G as node lists, each with total weight. Exhaustive;
/// only for small graphs.
struct Cycle {
  std::vector<int> nodes;
  Rational weight;
};

inline void cycle_search(const WeightedDigraph& G, int start, int v, Rational w,
                         std::vector<bool>& used, std::vector<int>& path,
                         std::vector<Cycle>& out) {
  for (int u = 0; u < G.size(); ++u) {
    if (!G.has_arc(v, u)) continue;
    Rational w2 = w + G.weight(v, u).finite();
    if (u == start) {
      out.push_back({path, w2});
      continue;
    }
    if (u < start || used[u]) continue;  // canonical start = smallest node
    used[u] = true;
    path.push_back(u);
    cycle_search(G, start, u, w2, used, path, out);
    path.pop_back();
    used[u] = false;
  }
}

inline std::vector<Cycle> all_simple_cycles(const WeightedDigraph& G) {
  std::vector<Cycle> out;
  for (int s = 0; s < G.size(); ++s) {
    std::vector<bool> used(G.size(), false);
    used[s] = true;
    std::vector<int> path{s};
    cycle_search(G, s, s, Rational(0), used, path, out);
  }
  return out;
}

/// Minimum cycle mean by exhaustive enumeration; +inf when acyclic.
inline Trop min_cycle_mean_exhaustive(const WeightedDigraph& G) {
  Trop best = Trop::infinity();
  for (const Cycle& c : all_simple_cycles(G))
    best = min(best, Trop(c.weight / Rational((std::int64_t)c.nodes.size())));
  return best;
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 8, int max_den = 4) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Random strongly connected weighted digraph: a random Hamiltonian-ish cycle
/// plus extra arcs.
inline WeightedDigraph random_strongly_connected(std::mt19937_64& rng, int n) {
  WeightedDigraph G(n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i) {
    Rational w = random_rational(rng);
    G.set_arc(perm[i], perm[(i + 1) % n], w);
  }
  std::uniform_int_distribution<int> node(0, n - 1);
  std::uniform_int_distribution<int> extra(0, 2 * n);
  int m = extra(rng);
  for (int k = 0; k < m; ++k) G.set_arc(node(rng), node(rng), random_rational(rng));
  return G;
}

}  // namespace perron::testing
