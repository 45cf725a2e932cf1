#include "pdcm/simplifier.hpp"

#include <algorithm>
#include <iterator>

#include "json.hpp"

namespace pdcm {

namespace {

using Key = std::uint64_t;

constexpr Key pack(VertexId a, VertexId b) noexcept { return (Key{a} << 32) | b; }
constexpr VertexPair unpack(Key k) noexcept {
  return {static_cast<VertexId>(k >> 32), static_cast<VertexId>(k & 0xFFFFFFFFULL)};
}

// Sorts keys and removes duplicates; returns how many were removed.
std::uint64_t sort_unique(std::vector<Key>& keys) {
  std::sort(keys.begin(), keys.end());
  const auto before = keys.size();
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return before - keys.size();
}

bool contains(const std::vector<Key>& sorted, Key k) {
  return std::binary_search(sorted.begin(), sorted.end(), k);
}

}  // namespace

std::optional<std::string> find_violation(const SimpleGraph& g) {
  auto describe = [](const char* what, VertexPair p) {
    return std::string(what) + " (" + std::to_string(p.first + 1) + ", " + std::to_string(p.second + 1) + ")";
  };
  for (std::size_t i = 0; i < g.directed.size(); ++i) {
    const auto& arc = g.directed[i];
    if (arc.first >= g.n || arc.second >= g.n) return describe("arc endpoint out of range", arc);
    if (arc.first == arc.second) return describe("directed self-loop", arc);
    if (i > 0 && !(g.directed[i - 1] < arc)) return describe("arcs unsorted or duplicated at", arc);
  }
  for (std::size_t i = 0; i < g.undirected.size(); ++i) {
    const auto& e = g.undirected[i];
    if (e.first >= g.n || e.second >= g.n) return describe("undirected endpoint out of range", e);
    if (e.first == e.second) return describe("undirected self-loop", e);
    if (e.first > e.second) return describe("undirected edge not normalized", e);
    if (i > 0 && !(g.undirected[i - 1] < e)) return describe("undirected edges unsorted or duplicated at", e);
  }
  for (const auto& arc : g.directed) {
    const VertexPair reverse{arc.second, arc.first};
    if (std::binary_search(g.directed.begin(), g.directed.end(), reverse)) return describe("reciprocal arcs", arc);
    const VertexPair as_und = std::minmax(arc.first, arc.second);
    if (std::binary_search(g.undirected.begin(), g.undirected.end(), as_und)) {
      return describe("arc parallel to undirected edge", arc);
    }
  }
  return std::nullopt;
}

std::vector<DegreeTriple> final_degrees(const SimpleGraph& g) {
  std::vector<DegreeTriple> degrees(g.n);
  for (const auto& [tail, head] : g.directed) {
    ++degrees[tail].out;
    ++degrees[head].in;
  }
  for (const auto& [u, v] : g.undirected) {
    ++degrees[u].und;
    ++degrees[v].und;
  }
  return degrees;
}

std::vector<std::pair<std::string, std::uint64_t>> report_fields(const ErasureReport& r) {
  return {
      {"unconnected_und", r.unconnected_und},
      {"unconnected_dir", r.unconnected_dir},
      {"self_loops_dir", r.self_loops_dir},
      {"self_loops_und", r.self_loops_und},
      {"parallel_dir", r.parallel_dir},
      {"parallel_und", r.parallel_und},
      {"dir_parallel_to_und", r.dir_parallel_to_und},
      {"reciprocal_pairs_converted", r.reciprocal_pairs_converted},
      {"modified_vertices", r.modified_vertices},
  };
}

std::string to_json(const ErasureReport& r) {
  nlohmann::ordered_json j;
  for (const auto& [name, value] : report_fields(r)) j[name] = value;
  return j.dump(2);
}

SimplifyResult simplify(const MultiGraph& mg) {
  SimplifyResult result;
  ErasureReport& report = result.report;

  // (a)
  report.unconnected_und = mg.leftover_und();
  report.unconnected_dir = mg.leftover_in() + mg.leftover_out();

  // (b)
  std::vector<Key> arcs;
  arcs.reserve(mg.arcs.size());
  for (const auto& [tail, head] : mg.arcs) {
    if (tail == head) {
      ++report.self_loops_dir;
    } else {
      arcs.push_back(pack(tail, head));
    }
  }
  std::vector<Key> und;
  und.reserve(mg.und_edges.size());
  for (const auto& [u, v] : mg.und_edges) {
    if (u == v) {
      ++report.self_loops_und;
    } else {
      und.push_back(pack(std::min(u, v), std::max(u, v)));
    }
  }

  // (c)
  report.parallel_dir = sort_unique(arcs);
  report.parallel_und = sort_unique(und);

  // (d)
  std::erase_if(arcs, [&](Key k) {
    const auto [tail, head] = unpack(k);
    const bool parallel = contains(und, pack(std::min(tail, head), std::max(tail, head)));
    report.dir_parallel_to_und += parallel ? 1 : 0;
    return parallel;
  });

  // (e) After (c) and (d) a converted pair cannot collide with an existing undirected edge.
  std::vector<Key> converted;
  std::vector<Key> kept;
  kept.reserve(arcs.size());
  for (Key k : arcs) {
    const auto [tail, head] = unpack(k);
    if (contains(arcs, pack(head, tail))) {
      if (tail < head) converted.push_back(k);
    } else {
      kept.push_back(k);
    }
  }
  report.reciprocal_pairs_converted = converted.size();
  std::vector<Key> merged;
  merged.reserve(und.size() + converted.size());
  std::merge(und.begin(), und.end(), converted.begin(), converted.end(), std::back_inserter(merged));

  SimpleGraph& g = result.graph;
  g.n = mg.n;
  g.directed.reserve(kept.size());
  for (Key k : kept) g.directed.push_back(unpack(k));
  g.undirected.reserve(merged.size());
  for (Key k : merged) g.undirected.push_back(unpack(k));

  const auto degrees = final_degrees(g);
  for (std::size_t v = 0; v < g.n; ++v) {
    if (degrees[v] != mg.source_degrees[v]) ++report.modified_vertices;
  }
  return result;
}

bool bookkeeping_holds(const MultiGraph& mg, const SimplifyResult& result) {
  const auto& r = result.report;
  const auto& g = result.graph;
  const bool arcs_ok = mg.arcs.size() == g.directed.size() + r.self_loops_dir + r.parallel_dir +
                                             r.dir_parallel_to_und + 2 * r.reciprocal_pairs_converted;
  const bool und_ok =
      mg.und_edges.size() + r.reciprocal_pairs_converted == g.undirected.size() + r.self_loops_und + r.parallel_und;
  const bool leftovers_ok =
      r.unconnected_und == mg.leftover_und() && r.unconnected_dir == mg.leftover_in() + mg.leftover_out();
  return arcs_ok && und_ok && leftovers_ok;
}

}  // namespace pdcm
