#include "pdcm/generator.hpp"

#include <limits>
#include <span>
#include <stdexcept>

#include "pdcm/random.hpp"

namespace pdcm {

namespace {

template <typename Member>
std::vector<VertexId> expand_stubs(const DegreeSequence& seq, Member member, std::uint64_t total) {
  std::vector<VertexId> stubs;
  stubs.reserve(total);
  for (std::size_t v = 0; v < seq.size(); ++v) {
    stubs.insert(stubs.end(), seq[v].*member, static_cast<VertexId>(v));
  }
  return stubs;
}

}  // namespace

MultiGraph match_stubs(const DegreeSequence& seq, std::uint64_t seed) {
  if (seq.size() > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("match_stubs: vertex count exceeds 32-bit ids");
  }
  Rng rng(seed);
  const StubTotals totals = seq.totals();

  MultiGraph mg;
  mg.n = seq.size();
  mg.source_degrees = seq;

  // Undirected: a uniform permutation paired consecutively is a uniform perfect
  // matching; an odd stub at the end stays unconnected.
  {
    auto stubs = expand_stubs(seq, &DegreeTriple::und, totals.und);
    rng.shuffle(std::span(stubs));
    mg.und_edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) mg.und_edges.emplace_back(stubs[i], stubs[i + 1]);
    if (stubs.size() % 2 == 1) mg.unmatched_und.push_back(stubs.back());
  }

  // Directed: permute the longer list so that which stubs stay unconnected is also uniform.
  {
    auto in_stubs = expand_stubs(seq, &DegreeTriple::in, totals.in);
    auto out_stubs = expand_stubs(seq, &DegreeTriple::out, totals.out);
    if (in_stubs.size() > out_stubs.size()) {
      rng.shuffle(std::span(in_stubs));
    } else {
      rng.shuffle(std::span(out_stubs));
    }
    const std::size_t paired = std::min(in_stubs.size(), out_stubs.size());
    mg.arcs.reserve(paired);
    for (std::size_t i = 0; i < paired; ++i) mg.arcs.emplace_back(out_stubs[i], in_stubs[i]);
    mg.unmatched_in.assign(in_stubs.begin() + static_cast<std::ptrdiff_t>(paired), in_stubs.end());
    mg.unmatched_out.assign(out_stubs.begin() + static_cast<std::ptrdiff_t>(paired), out_stubs.end());
  }
  return mg;
}

bool stubs_conserved(const MultiGraph& mg) {
  const auto& seq = mg.source_degrees;
  if (seq.size() != mg.n) return false;
  std::vector<DegreeTriple> seen(mg.n);
  for (const auto& [tail, head] : mg.arcs) {
    if (tail >= mg.n || head >= mg.n) return false;
    ++seen[tail].out;
    ++seen[head].in;
  }
  for (const auto& [u, v] : mg.und_edges) {
    if (u >= mg.n || v >= mg.n) return false;
    ++seen[u].und;
    ++seen[v].und;
  }
  for (VertexId v : mg.unmatched_in) ++seen[v].in;
  for (VertexId v : mg.unmatched_out) ++seen[v].out;
  for (VertexId v : mg.unmatched_und) ++seen[v].und;

  const StubTotals t = seq.totals();
  if (mg.arcs.size() != std::min(t.in, t.out)) return false;
  if (mg.unmatched_und.size() > 1 || mg.und_edges.size() != t.und / 2) return false;
  for (std::size_t v = 0; v < mg.n; ++v) {
    if (seen[v] != seq[v]) return false;
  }
  return true;
}

}  // namespace pdcm
