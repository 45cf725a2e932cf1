#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdcm/generator.hpp"
#include "pdcm/types.hpp"

namespace pdcm {

/// Simple partially directed graph. Both edge lists are sorted and duplicate free;
/// undirected pairs are stored with u < v.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<VertexPair> directed;    // (tail, head)
  std::vector<VertexPair> undirected;  // (u, v), u < v

  std::size_t edge_count() const noexcept { return directed.size() + undirected.size(); }
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

/// Describes the first violated simplicity invariant, or nullopt when g is simple:
/// no self-loops, no duplicates, no reciprocal arcs, no arc parallel to an undirected edge.
std::optional<std::string> find_violation(const SimpleGraph& g);

/// Per-vertex (in, out, undirected) degrees of g.
std::vector<DegreeTriple> final_degrees(const SimpleGraph& g);

/// Everything the erasure rules removed or converted.
struct ErasureReport {
  std::uint64_t unconnected_und = 0;
  std::uint64_t unconnected_dir = 0;
  std::uint64_t self_loops_dir = 0;
  std::uint64_t self_loops_und = 0;
  std::uint64_t parallel_dir = 0;
  std::uint64_t parallel_und = 0;
  std::uint64_t dir_parallel_to_und = 0;
  std::uint64_t reciprocal_pairs_converted = 0;
  std::uint64_t modified_vertices = 0;

  friend bool operator==(const ErasureReport&, const ErasureReport&) = default;
};

/// Report fields in declaration order, paired with their serialized names.
std::vector<std::pair<std::string, std::uint64_t>> report_fields(const ErasureReport& r);

/// Flat JSON object with the nine report fields.
std::string to_json(const ErasureReport& r);

struct SimplifyResult {
  SimpleGraph graph;
  ErasureReport report;
};

/// Makes mg simple. Rules, in this order:
///   (a) drop unconnected stubs
///   (b) drop directed and undirected self-loops
///   (c) keep one copy of identical parallel edges
///   (d) drop arcs parallel to an undirected edge
///   (e) replace each reciprocal arc pair by one undirected edge
SimplifyResult simplify(const MultiGraph& mg);

/// Arc and undirected-edge accounting identities between mg and its simplification.
bool bookkeeping_holds(const MultiGraph& mg, const SimplifyResult& result);

}  // namespace pdcm
