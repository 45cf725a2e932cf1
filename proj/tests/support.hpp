#pragma once

// Helpers shared by the unit tests: hand-built multigraphs and brute-force reference
// implementations that the library is checked against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pdcm/generator.hpp"
#include "pdcm/simplifier.hpp"

namespace pdcm::testing {

/// Builds a MultiGraph whose source degrees are exactly the stubs it uses plus the
/// listed leftovers. Ids are 0-based.
inline MultiGraph make_multigraph(std::size_t n, std::vector<VertexPair> arcs, std::vector<VertexPair> und,
                                  std::vector<VertexId> unmatched_in = {}, std::vector<VertexId> unmatched_out = {},
                                  std::vector<VertexId> unmatched_und = {}) {
  std::vector<DegreeTriple> deg(n);
  for (auto [t, h] : arcs) {
    ++deg[t].out;
    ++deg[h].in;
  }
  for (auto [u, v] : und) {
    ++deg[u].und;
    ++deg[v].und;
  }
  for (auto v : unmatched_in) ++deg[v].in;
  for (auto v : unmatched_out) ++deg[v].out;
  for (auto v : unmatched_und) ++deg[v].und;
  MultiGraph mg;
  mg.n = n;
  mg.arcs = std::move(arcs);
  mg.und_edges = std::move(und);
  mg.unmatched_in = std::move(unmatched_in);
  mg.unmatched_out = std::move(unmatched_out);
  mg.unmatched_und = std::move(unmatched_und);
  mg.source_degrees = DegreeSequence(std::move(deg));
  return mg;
}

/// Straightforward set-based rendering of the erasure rules, used as a reference.
inline SimplifyResult reference_simplify(const MultiGraph& mg) {
  SimplifyResult out;
  auto& r = out.report;
  r.unconnected_und = mg.unmatched_und.size();
  r.unconnected_dir = mg.unmatched_in.size() + mg.unmatched_out.size();

  std::multiset<VertexPair> arcs, und;
  for (auto a : mg.arcs) {
    if (a.first == a.second) {
      ++r.self_loops_dir;
    } else {
      arcs.insert(a);
    }
  }
  for (auto [u, v] : mg.und_edges) {
    if (u == v) {
      ++r.self_loops_und;
    } else {
      und.insert({std::min(u, v), std::max(u, v)});
    }
  }
  std::set<VertexPair> arc_set(arcs.begin(), arcs.end());
  std::set<VertexPair> und_set(und.begin(), und.end());
  r.parallel_dir = arcs.size() - arc_set.size();
  r.parallel_und = und.size() - und_set.size();

  std::set<VertexPair> kept;
  for (auto [t, h] : arc_set) {
    if (und_set.contains({std::min(t, h), std::max(t, h)})) {
      ++r.dir_parallel_to_und;
    } else {
      kept.insert({t, h});
    }
  }
  for (auto [t, h] : kept) {
    if (kept.contains({h, t})) {
      if (t < h) {
        ++r.reciprocal_pairs_converted;
        und_set.insert({t, h});
      }
    } else {
      out.graph.directed.push_back({t, h});
    }
  }
  out.graph.n = mg.n;
  out.graph.undirected.assign(und_set.begin(), und_set.end());

  const auto fin = final_degrees(out.graph);
  for (std::size_t v = 0; v < mg.n; ++v) {
    if (fin[v] != mg.source_degrees[v]) ++r.modified_vertices;
  }
  return out;
}

/// Canonical form of a vertex partition: sorted list of sorted blocks.
inline std::vector<std::vector<std::uint32_t>> partition_of(const std::vector<std::uint32_t>& labels) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t v = 0; v < labels.size(); ++v) blocks[labels[v]].push_back(v);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [_, b] : blocks) out.push_back(std::move(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdcm::testing
