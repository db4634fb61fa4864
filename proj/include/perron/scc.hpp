#pragma once

#include <vector>

namespace perron {

/// Strongly connected components of a digraph given as adjacency lists.
/// Returns (component id per node, component count); ids are assigned in
/// reverse topological order of the condensation.
std::pair<std::vector<int>, int> strongly_connected_components(
    const std::vector<std::vector<int>>& adj);

/// Weakly connected components (undirected closure), ids ordered by smallest
/// member.
std::pair<std::vector<int>, int> weak_components(const std::vector<std::vector<int>>& adj);

}  // namespace perron
