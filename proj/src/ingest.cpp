#include "pdcm/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <string_view>
#include <unordered_map>

#include "json.hpp"
#include "pdcm/graph_io.hpp"

namespace pdcm {

namespace {

// Parses the next whitespace-delimited integer at pos; returns false at end of line.
bool next_id(std::string_view line, std::size_t& pos, std::size_t line_no, std::int64_t& value) {
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  if (pos == line.size()) return false;
  std::size_t end = pos;
  while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
  const auto res = std::from_chars(line.data() + pos, line.data() + end, value);
  if (res.ec != std::errc{} || res.ptr != line.data() + end) {
    throw ParseError(line_no, "expected an integer node id, got '" + std::string(line.substr(pos, end - pos)) + "'");
  }
  pos = end;
  return true;
}

}  // namespace

RawArcList parse_edge_list(std::istream& in) {
  RawArcList raw;
  std::unordered_map<std::int64_t, VertexId> dense;
  auto densify = [&](std::int64_t id) {
    const auto [it, inserted] = dense.try_emplace(id, static_cast<VertexId>(raw.node_ids.size()));
    if (inserted) {
      if (raw.node_ids.size() == std::numeric_limits<VertexId>::max()) {
        throw std::length_error("edge list has more than 2^32 - 1 distinct nodes");
      }
      raw.node_ids.push_back(id);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;

    std::size_t pos = 0;
    std::int64_t source = 0;
    std::int64_t target = 0;
    std::int64_t extra = 0;
    if (!next_id(view, pos, line_no, source) || !next_id(view, pos, line_no, target)) {
      throw ParseError(line_no, "expected two node ids");
    }
    if (next_id(view, pos, line_no, extra)) throw ParseError(line_no, "expected two node ids, found more");
    const VertexId s = densify(source);
    const VertexId t = densify(target);
    raw.arcs.emplace_back(s, t);
  }
  return raw;
}

IngestResult to_partially_directed(const RawArcList& raw) {
  IngestResult result;
  IngestStats& stats = result.stats;
  SimpleGraph& g = result.graph;
  g.n = raw.node_ids.size();

  std::vector<VertexPair> arcs;
  arcs.reserve(raw.arcs.size());
  for (const auto& arc : raw.arcs) {
    if (arc.first == arc.second) {
      ++stats.dropped_self_arcs;
    } else {
      arcs.push_back(arc);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  const auto unique_end = std::unique(arcs.begin(), arcs.end());
  stats.dropped_duplicates = static_cast<std::uint64_t>(arcs.end() - unique_end);
  arcs.erase(unique_end, arcs.end());

  for (const auto& [u, v] : arcs) {
    if (std::binary_search(arcs.begin(), arcs.end(), VertexPair{v, u})) {
      if (u < v) g.undirected.emplace_back(u, v);
    } else {
      g.directed.emplace_back(u, v);
    }
  }

  stats.n = g.n;
  stats.directed = g.directed.size();
  stats.undirected = g.undirected.size();
  if (g.edge_count() > 0) {
    stats.proportion_directed = static_cast<double>(stats.directed) / static_cast<double>(g.edge_count());
  }
  return result;
}

std::string to_json(const IngestStats& stats) {
  nlohmann::ordered_json j;
  j["n"] = stats.n;
  j["edges"] = stats.directed + stats.undirected;
  j["directed"] = stats.directed;
  j["undirected"] = stats.undirected;
  if (stats.proportion_directed) {
    j["proportion_directed"] = *stats.proportion_directed;
  } else {
    j["proportion_directed"] = nullptr;
  }
  j["dropped_self_arcs"] = stats.dropped_self_arcs;
  j["dropped_duplicates"] = stats.dropped_duplicates;
  return j.dump(2);
}

}  // namespace pdcm
