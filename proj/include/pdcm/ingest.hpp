#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdcm/simplifier.hpp"

namespace pdcm {

/// Arcs of an edge-list file with ids densified to 0..n-1 in order of first appearance.
struct RawArcList {
  std::vector<VertexPair> arcs;       // file order
  std::vector<std::int64_t> node_ids;  // dense id -> original id
};

/// Parses a SNAP-style edge list: "source target" per line, '#' comments, blank lines ignored.
/// Throws ParseError (with line number) on a non-integer token or a wrong token count.
RawArcList parse_edge_list(std::istream& in);

struct IngestStats {
  std::uint64_t n = 0;
  std::uint64_t directed = 0;
  std::uint64_t undirected = 0;
  std::optional<double> proportion_directed;  // absent for an edgeless graph
  std::uint64_t dropped_self_arcs = 0;
  std::uint64_t dropped_duplicates = 0;
};

std::string to_json(const IngestStats& stats);

struct IngestResult {
  SimpleGraph graph;
  IngestStats stats;
};

/// Drops self-arcs, removes duplicate arcs, then turns each reciprocal pair into one
/// undirected edge. A doubled (u, v) without (v, u) stays a single arc.
IngestResult to_partially_directed(const RawArcList& raw);

}  // namespace pdcm
