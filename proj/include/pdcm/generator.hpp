#pragma once

#include <cstdint>
#include <vector>

#include "pdcm/types.hpp"

namespace pdcm {

/// Raw stub-matching output before simplification. May contain self-loops and
/// parallel edges. Unconnected stubs are kept with their owning vertex.
struct MultiGraph {
  std::size_t n = 0;
  std::vector<VertexPair> arcs;       // (tail, head)
  std::vector<VertexPair> und_edges;  // unordered, as matched
  std::vector<VertexId> unmatched_in;
  std::vector<VertexId> unmatched_out;
  std::vector<VertexId> unmatched_und;  // at most one entry
  DegreeSequence source_degrees;

  std::uint64_t leftover_in() const noexcept { return unmatched_in.size(); }
  std::uint64_t leftover_out() const noexcept { return unmatched_out.size(); }
  std::uint64_t leftover_und() const noexcept { return unmatched_und.size(); }
};

/// Connects undirected stubs pairwise and in-stubs to out-stubs, uniformly at random.
/// Undirected stubs are matched first, then directed stubs. Every matching of the
/// paired portion is equally likely, as is the set of unconnected stubs.
/// Deterministic in (seq, seed).
MultiGraph match_stubs(const DegreeSequence& seq, std::uint64_t seed);

/// True when the stub-conservation identities hold against mg.source_degrees:
/// per vertex, arc endpoints plus unmatched stubs equal the drawn in/out degree,
/// and undirected endpoints plus unmatched undirected stubs equal the undirected degree.
bool stubs_conserved(const MultiGraph& mg);

}  // namespace pdcm
