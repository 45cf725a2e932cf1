#include "pdcm/components.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "pdcm/format.hpp"

namespace pdcm {

namespace {

// Outgoing adjacency in CSR form; each undirected edge contributes both directions.
struct Adjacency {
  std::vector<std::uint64_t> offsets;
  std::vector<VertexId> targets;
};

Adjacency build_adjacency(const SimpleGraph& g) {
  Adjacency adj;
  adj.offsets.assign(g.n + 1, 0);
  for (const auto& [tail, head] : g.directed) ++adj.offsets[tail + 1];
  for (const auto& [u, v] : g.undirected) {
    ++adj.offsets[u + 1];
    ++adj.offsets[v + 1];
  }
  for (std::size_t v = 0; v < g.n; ++v) adj.offsets[v + 1] += adj.offsets[v];

  adj.targets.resize(adj.offsets[g.n]);
  std::vector<std::uint64_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [tail, head] : g.directed) adj.targets[fill[tail]++] = head;
  for (const auto& [u, v] : g.undirected) {
    adj.targets[fill[u]++] = v;
    adj.targets[fill[v]++] = u;
  }
  return adj;
}

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<std::uint32_t> scc_labels(const SimpleGraph& g) {
  const Adjacency adj = build_adjacency(g);
  const std::size_t n = g.n;

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> label(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;

  struct Frame {
    VertexId v;
    std::uint64_t next;
  };
  std::vector<Frame> frames;

  std::uint32_t counter = 0;
  std::uint32_t components = 0;

  auto open = [&](VertexId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    frames.push_back({v, adj.offsets[v]});
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    open(static_cast<VertexId>(root));
    while (!frames.empty()) {
      const VertexId v = frames.back().v;
      if (frames.back().next < adj.offsets[v + 1]) {
        const VertexId w = adj.targets[frames.back().next++];
        if (index[w] == kUnvisited) {
          open(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = components;
        } while (w != v);
        ++components;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const VertexId parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return label;
}

ComponentSummary strongly_connected_components(const SimpleGraph& g) {
  ComponentSummary summary;
  summary.n = g.n;
  if (g.n == 0) return summary;

  const auto labels = scc_labels(g);
  const auto count = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::uint64_t> sizes(count, 0);
  for (auto l : labels) ++sizes[l];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());

  summary.largest_relative = static_cast<double>(sizes.front()) / static_cast<double>(g.n);
  for (std::size_t i = 1; i < sizes.size(); ++i) ++summary.small_component_histogram[sizes[i]];
  summary.sizes = std::move(sizes);
  return summary;
}

std::string to_csv(const ComponentSummary& summary) {
  std::ostringstream out;
  out << "size,count\n";
  for (const auto& [size, count] : summary.small_component_histogram) out << size << ',' << count << '\n';
  out << "# n=" << summary.n << " largest_relative=" << format_double(summary.largest_relative) << '\n';
  return out.str();
}

}  // namespace pdcm
