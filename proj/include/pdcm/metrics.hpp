#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdcm/degree_model.hpp"
#include "pdcm/simplifier.hpp"

namespace pdcm {

/// Number of vertices carrying each degree triple.
struct DegreeCensus {
  std::map<DegreeTriple, std::uint64_t> counts;
  std::uint64_t n = 0;

  double frequency(const DegreeTriple& d) const;
};

DegreeCensus degree_census(const SimpleGraph& g);
DegreeCensus degree_census(std::span<const DegreeTriple> degrees);

/// 1/2 * sum_d |p_d - N_d / n| over all triples d. Mass of dist outside the census
/// support enters as 1 - (dist mass on the census support), so no truncation is involved.
/// Throws std::invalid_argument when census.n == 0.
double total_variation(const DegreeCensus& census, const JointDegreeDistribution& dist);

/// Each report field divided by n, in report order.
std::vector<std::pair<std::string, double>> erased_per_vertex(const ErasureReport& report, std::uint64_t n);

/// |directed| / (|directed| + |undirected|). Throws std::invalid_argument on an edgeless graph.
double proportion_directed(const SimpleGraph& g);

}  // namespace pdcm
