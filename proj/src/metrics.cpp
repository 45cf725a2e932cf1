#include "pdcm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdcm {

namespace {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double DegreeCensus::frequency(const DegreeTriple& d) const {
  if (n == 0) return 0.0;
  const auto it = counts.find(d);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
}

DegreeCensus degree_census(std::span<const DegreeTriple> degrees) {
  DegreeCensus census;
  census.n = degrees.size();
  for (const auto& d : degrees) ++census.counts[d];
  return census;
}

DegreeCensus degree_census(const SimpleGraph& g) {
  const auto degrees = final_degrees(g);
  return degree_census(std::span<const DegreeTriple>(degrees));
}

double total_variation(const DegreeCensus& census, const JointDegreeDistribution& dist) {
  if (census.n == 0) throw std::invalid_argument("total_variation: empty census");
  const double n = static_cast<double>(census.n);
  CompensatedSum abs_diff;
  CompensatedSum covered_mass;
  for (const auto& [d, count] : census.counts) {
    const double p = dist.probability(d);
    abs_diff.add(std::abs(p - static_cast<double>(count) / n));
    covered_mass.add(p);
  }
  const double uncovered = std::max(0.0, 1.0 - covered_mass.value());
  return std::clamp(0.5 * (abs_diff.value() + uncovered), 0.0, 1.0);
}

std::vector<std::pair<std::string, double>> erased_per_vertex(const ErasureReport& report, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("erased_per_vertex: n must be >= 1");
  std::vector<std::pair<std::string, double>> rates;
  for (const auto& [name, count] : report_fields(report)) {
    rates.emplace_back(name, static_cast<double>(count) / static_cast<double>(n));
  }
  return rates;
}

double proportion_directed(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("proportion_directed: graph has no edges");
  return static_cast<double>(g.directed.size()) / static_cast<double>(g.edge_count());
}

}  // namespace pdcm
