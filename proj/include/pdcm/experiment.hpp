#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pdcm/degree_model.hpp"
#include "pdcm/generator.hpp"
#include "pdcm/simplifier.hpp"

namespace pdcm {

/// Command-line level description of a degree distribution.
struct ModelSpec {
  std::string model = "poisson";  // poisson | scale-free | empirical
  double lambda = 7.0;
  double gamma = 2.5;
  std::filesystem::path degrees;  // degree file or pdgraph file, empirical only
  Coupling coupling = Coupling::Independent;
};

JointDegreeDistribution make_distribution(const ModelSpec& spec);

/// One full pipeline run: sample degrees, match stubs, simplify.
struct GeneratedGraph {
  MultiGraph multigraph;
  SimplifyResult simple;
};

/// Degrees are drawn with `seed`; stubs are matched with derive_seed(seed, 1).
GeneratedGraph generate_graph(const JointDegreeDistribution& dist, std::size_t n, std::uint64_t seed);

struct ExperimentConfig {
  ModelSpec model;
  std::vector<std::uint64_t> sizes;
  std::uint64_t replicates = 100;
  std::uint64_t base_seed = 1;
  std::filesystem::path output;
  unsigned jobs = 1;
};

/// Throws std::invalid_argument unless replicates >= 1 and sizes are non-empty,
/// positive and strictly increasing.
void validate(const ExperimentConfig& config);

/// Seed of replicate r at size index s: base XOR splitmix64((s << 32) | r).
std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t size_index, std::uint64_t replicate);

struct ExperimentRow {
  std::string model;
  Coupling coupling = Coupling::Independent;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double d_tv = 0;
  double modified_per_vertex = 0;
  std::vector<std::pair<std::string, double>> erasure_rates;  // report order
  std::optional<double> prop_directed;                        // absent when no edges survive
};

ExperimentRow measure(const JointDegreeDistribution& dist, std::size_t n, std::uint64_t seed);

/// model,coupling,n,seed,d_tv,modified_per_vertex,<nine erasure rates>,prop_directed
std::string csv_header();
std::string csv_line(const ExperimentRow& row);

struct ExperimentSummary {
  std::uint64_t rows_written = 0;
  std::uint64_t rows_skipped = 0;
};

/// Writes every (size, replicate) row to config.output, ordered by (size index, replicate).
/// Rows already present in an existing output file with the same header are kept and skipped.
/// Throws std::runtime_error when the output cannot be written.
ExperimentSummary run_experiment(const ExperimentConfig& config);

}  // namespace pdcm
