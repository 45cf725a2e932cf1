#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace pdcm {

// Vertex ids are dense and 0-based inside the library. Text formats use 1-based ids.
using VertexId = std::uint32_t;
using Degree = std::uint32_t;

/// One vertex's stub counts: in-stubs, out-stubs and undirected stubs.
struct DegreeTriple {
  Degree in = 0;
  Degree out = 0;
  Degree und = 0;

  std::uint64_t total() const noexcept {
    return std::uint64_t{in} + out + und;
  }

  friend auto operator<=>(const DegreeTriple&, const DegreeTriple&) = default;
};

struct DegreeTripleHash {
  std::size_t operator()(const DegreeTriple& d) const noexcept {
    std::uint64_t h = d.in;
    h = h * 0x9E3779B97F4A7C15ULL + d.out;
    h = h * 0x9E3779B97F4A7C15ULL + d.und;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

/// Arc (tail, head) or undirected edge (u, v).
using VertexPair = std::pair<VertexId, VertexId>;

struct StubTotals {
  std::uint64_t in = 0;
  std::uint64_t out = 0;
  std::uint64_t und = 0;
};

/// An ordered list of degree triples, one per vertex.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<DegreeTriple> triples) : triples_(std::move(triples)) {}

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const DegreeTriple& operator[](std::size_t i) const { return triples_[i]; }
  const std::vector<DegreeTriple>& triples() const noexcept { return triples_; }

  auto begin() const noexcept { return triples_.begin(); }
  auto end() const noexcept { return triples_.end(); }

  StubTotals totals() const noexcept {
    StubTotals s;
    for (const auto& d : triples_) {
      s.in += d.in;
      s.out += d.out;
      s.und += d.und;
    }
    return s;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<DegreeTriple> triples_;
};

}  // namespace pdcm
