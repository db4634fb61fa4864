#include "perron/scc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace perron {

std::pair<std::vector<int>, int> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0, ncomp = 0;

  // Iterative Tarjan.
  struct Frame { int v; size_t child; };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    while (!call.empty()) {
      Frame& f = call.back();
      int v = f.v;
      if (f.child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (f.child < adj[v].size()) {
        int w = adj[v][f.child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }
  return {comp, ncomp};
}

std::pair<std::vector<int>, int> weak_components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) {
      int a = find(v), b = find(w);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (comp[r] == -1) comp[r] = ncomp++;
    comp[v] = comp[r];
  }
  return {comp, ncomp};
}

}  // namespace perron
