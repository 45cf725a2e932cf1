#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdcm/simplifier.hpp"

namespace pdcm {

struct ComponentSummary {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> sizes;  // descending
  double largest_relative = 0.0;     // 0 only for the empty graph
  /// size -> count over all components except one largest.
  std::map<std::uint64_t, std::uint64_t> small_component_histogram;
};

/// Strongly connected component id per vertex. Undirected edges are traversable in
/// both directions. Iterative Tarjan, O(n + m), no recursion. Ids are numbered in
/// the order components are completed.
std::vector<std::uint32_t> scc_labels(const SimpleGraph& g);

ComponentSummary strongly_connected_components(const SimpleGraph& g);

/// "size,count" header, one row per histogram entry, then "# n=<n> largest_relative=<x>".
std::string to_csv(const ComponentSummary& summary);

}  // namespace pdcm
