#include "pdcm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pdcm/format.hpp"
#include "pdcm/graph_io.hpp"
#include "pdcm/metrics.hpp"
#include "pdcm/random.hpp"

namespace pdcm {

JointDegreeDistribution make_distribution(const ModelSpec& spec) {
  if (spec.model == "poisson") return JointDegreeDistribution::poisson(spec.lambda, spec.coupling);
  if (spec.model == "scale-free") return JointDegreeDistribution::scale_free(spec.gamma, spec.coupling);
  if (spec.model == "empirical") {
    if (spec.degrees.empty()) throw std::invalid_argument("empirical model needs a degree file");
    return JointDegreeDistribution::empirical(load_degree_triples(spec.degrees), spec.coupling);
  }
  throw std::invalid_argument("unknown model '" + spec.model + "'");
}

GeneratedGraph generate_graph(const JointDegreeDistribution& dist, std::size_t n, std::uint64_t seed) {
  GeneratedGraph out;
  out.multigraph = match_stubs(sample_sequence(dist, n, seed), derive_seed(seed, 1));
  out.simple = simplify(out.multigraph);
  return out;
}

void validate(const ExperimentConfig& config) {
  if (config.replicates == 0) throw std::invalid_argument("replicates must be >= 1");
  if (config.sizes.empty()) throw std::invalid_argument("at least one graph size is required");
  if (config.sizes.front() == 0) throw std::invalid_argument("graph sizes must be positive");
  if (std::adjacent_find(config.sizes.begin(), config.sizes.end(), std::greater_equal<>()) != config.sizes.end()) {
    throw std::invalid_argument("graph sizes must be strictly increasing");
  }
}

std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t size_index, std::uint64_t replicate) {
  return base_seed ^ splitmix64((size_index << 32) | (replicate & 0xFFFFFFFFULL));
}

ExperimentRow measure(const JointDegreeDistribution& dist, std::size_t n, std::uint64_t seed) {
  const GeneratedGraph gen = generate_graph(dist, n, seed);
  const auto& g = gen.simple.graph;

  ExperimentRow row;
  row.model = std::string(dist.model_name());
  row.coupling = dist.coupling();
  row.n = n;
  row.seed = seed;
  row.d_tv = total_variation(degree_census(g), dist);
  row.modified_per_vertex = static_cast<double>(gen.simple.report.modified_vertices) / static_cast<double>(n);
  row.erasure_rates = erased_per_vertex(gen.simple.report, n);
  if (g.edge_count() > 0) row.prop_directed = proportion_directed(g);
  return row;
}

std::string csv_header() {
  std::string header = "model,coupling,n,seed,d_tv,modified_per_vertex";
  for (const auto& [name, value] : report_fields(ErasureReport{})) header += "," + name;
  header += ",prop_directed";
  return header;
}

std::string csv_line(const ExperimentRow& row) {
  std::string line = row.model + "," + std::string(to_string(row.coupling)) + "," + std::to_string(row.n) + "," +
                     std::to_string(row.seed) + "," + format_double(row.d_tv) + "," +
                     format_double(row.modified_per_vertex);
  for (const auto& [name, rate] : row.erasure_rates) line += "," + format_double(rate);
  line += "," + (row.prop_directed ? format_double(*row.prop_directed) : std::string("nan"));
  return line;
}

namespace {

struct Task {
  std::uint64_t n;
  std::uint64_t seed;
};

// Reads finished rows of an earlier run and returns their (n, seed) keys. A trailing
// partial line from an interrupted run is cut off.
std::set<std::pair<std::uint64_t, std::uint64_t>> completed_rows(const ExperimentConfig& config,
                                                                 const JointDegreeDistribution& dist) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> done;
  std::ifstream in(config.output, std::ios::binary);
  if (!in) return done;
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  if (content.empty()) return done;

  const auto last_newline = content.rfind('\n');
  const std::size_t complete = last_newline == std::string::npos ? 0 : last_newline + 1;
  if (complete != content.size()) {
    content.resize(complete);
    std::ofstream rewrite(config.output, std::ios::binary | std::ios::trunc);
    rewrite << content;
    if (!rewrite) throw std::runtime_error("cannot rewrite '" + config.output.string() + "'");
  }

  std::istringstream lines(content);
  std::string line;
  if (!std::getline(lines, line)) return done;
  if (line != csv_header()) {
    throw std::runtime_error("'" + config.output.string() + "' exists with a different header");
  }
  const std::string prefix = std::string(dist.model_name()) + "," + std::string(to_string(dist.coupling())) + ",";
  while (std::getline(lines, line)) {
    if (!line.starts_with(prefix)) {
      throw std::runtime_error("'" + config.output.string() + "' holds rows of a different model or coupling");
    }
    std::istringstream fields(line.substr(prefix.size()));
    std::string n_text, seed_text;
    std::getline(fields, n_text, ',');
    std::getline(fields, seed_text, ',');
    done.emplace(std::stoull(n_text), std::stoull(seed_text));
  }
  return done;
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  validate(config);
  const JointDegreeDistribution dist = make_distribution(config.model);
  const auto done = completed_rows(config, dist);

  ExperimentSummary summary;
  std::vector<Task> tasks;
  for (std::uint64_t s = 0; s < config.sizes.size(); ++s) {
    for (std::uint64_t r = 0; r < config.replicates; ++r) {
      const Task task{config.sizes[s], replicate_seed(config.base_seed, s, r)};
      if (done.contains({task.n, task.seed})) {
        ++summary.rows_skipped;
      } else {
        tasks.push_back(task);
      }
    }
  }

  const bool need_header = !std::filesystem::exists(config.output) || std::filesystem::file_size(config.output) == 0;
  std::ofstream out(config.output, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot write '" + config.output.string() + "'");
  if (need_header) out << csv_header() << '\n';

  // Rows are computed in parallel batches and appended in task order, so the file is
  // identical for any job count and an interrupted run loses at most one batch.
  const unsigned jobs = std::max(1u, config.jobs);
  const std::size_t batch = static_cast<std::size_t>(jobs) * 4;
  for (std::size_t begin = 0; begin < tasks.size(); begin += batch) {
    const std::size_t end = std::min(tasks.size(), begin + batch);
    std::vector<std::string> lines(end - begin);
    std::atomic<std::size_t> next{begin};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < end; i = next++) {
          lines[i - begin] = csv_line(measure(dist, tasks[i].n, tasks[i].seed));
        }
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    for (const auto& line : lines) out << line << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write to '" + config.output.string() + "' failed");
    summary.rows_written += lines.size();
  }
  return summary;
}

}  // namespace pdcm
