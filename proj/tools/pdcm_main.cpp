// pdcm: command-line front end for the partially directed configuration model.
//
// Exit codes: 0 success, 1 runtime failure (I/O, malformed input), 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdcm/components.hpp"
#include "pdcm/experiment.hpp"
#include "pdcm/graph_io.hpp"
#include "pdcm/ingest.hpp"
#include "pdcm/oracle.hpp"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

void add_model_options(CLI::App& cmd, pdcm::ModelSpec& spec, std::string& coupling) {
  cmd.add_option("--model", spec.model, "Degree distribution")
      ->check(CLI::IsMember({"poisson", "scale-free", "empirical"}))
      ->capture_default_str();
  cmd.add_option("--lambda", spec.lambda, "Poisson parameter")->capture_default_str();
  cmd.add_option("--gamma", spec.gamma, "Scale-free exponent")->capture_default_str();
  cmd.add_option("--degrees", spec.degrees, "Degree file or pdgraph file for the empirical model");
  cmd.add_option("--coupling", coupling, "independent or dependent")
      ->check(CLI::IsMember({"independent", "dependent"}))
      ->capture_default_str();
}

pdcm::JointDegreeDistribution build_distribution(pdcm::ModelSpec spec, const std::string& coupling) {
  spec.coupling = pdcm::parse_coupling(coupling);
  try {
    return pdcm::make_distribution(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Fills options not given on the command line from "key=value" lines ('#' comments).
void apply_config_file(CLI::App& cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    const std::string key = CLI::detail::trim_copy(line.substr(0, eq));
    const std::string value = CLI::detail::trim_copy(line.substr(eq + 1));
    CLI::Option* opt = key == "config" ? nullptr : cmd.get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partially directed configuration model: generation, ingestion and analysis"};
  app.require_subcommand(1);

  // generate
  pdcm::ModelSpec gen_model;
  std::string gen_coupling = "independent";
  std::uint64_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_output, gen_report, gen_multigraph;
  auto* generate = app.add_subcommand("generate", "Sample degrees, match stubs, simplify, write the graph");
  add_model_options(*generate, gen_model, gen_coupling);
  generate->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  generate->add_option("--output", gen_output, "pdgraph output path ('-' for stdout)")->required();
  generate->add_option("--report", gen_report, "Erasure report JSON path (default: stdout)");
  generate->add_option("--multigraph", gen_multigraph, "Also dump the raw multigraph here");

  // ingest
  std::string ing_input, ing_output, ing_stats;
  auto* ingest = app.add_subcommand("ingest", "Read a SNAP edge list as a partially directed graph");
  ingest->add_option("--input", ing_input, "Edge list path")->required();
  ingest->add_option("--output", ing_output, "pdgraph output path");
  ingest->add_option("--stats", ing_stats, "Statistics JSON path (default: stdout)");

  // experiment
  pdcm::ExperimentConfig exp_config;
  std::string exp_coupling = "independent";
  std::string exp_output;
  exp_config.sizes = {100, 1000, 10000, 100000, 1000000};
  auto* experiment = app.add_subcommand("experiment", "Replicated runs over graph sizes, one CSV row per run");
  std::string exp_config_file;
  experiment->add_option("--config", exp_config_file, "key=value file mirroring the flag names; flags take precedence");
  add_model_options(*experiment, exp_config.model, exp_coupling);
  experiment->add_option("--n", exp_config.sizes, "Comma-separated, strictly increasing graph sizes")
      ->delimiter(',')
      ->capture_default_str();
  experiment->add_option("--replicates", exp_config.replicates, "Replicates per size")->capture_default_str();
  experiment->add_option("--seed", exp_config.base_seed, "Base seed")->capture_default_str();
  experiment->add_option("--output", exp_output, "CSV output path")->required();
  experiment->add_option("--jobs", exp_config.jobs, "Worker threads")->capture_default_str();

  // components
  std::string comp_input, comp_output;
  auto* components = app.add_subcommand("components", "Strongly connected component size statistics");
  components->add_option("--input", comp_input, "pdgraph path")->required();
  components->add_option("--output", comp_output, "CSV output path (default: stdout)");

  // oracle
  std::string orc_spec;
  std::uint64_t orc_replicates = 100000;
  std::uint64_t orc_seed = 1;
  auto* oracle = app.add_subcommand("oracle", "Exact vs simulated probability that vertex 1 keeps its degree");
  oracle->add_option("--spec", orc_spec, "Degree triples, first line is vertex 1")->required();
  oracle->add_option("--replicates", orc_replicates, "Monte Carlo replicates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_option("--seed", orc_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*generate) {
      const auto dist = build_distribution(gen_model, gen_coupling);
      const auto gen = pdcm::generate_graph(dist, gen_n, gen_seed);
      std::ostringstream graph;
      pdcm::write_pdgraph(graph, gen.simple.graph);
      emit(gen_output, graph.str());
      if (!gen_multigraph.empty()) {
        std::ostringstream raw;
        pdcm::write_multigraph(raw, gen.multigraph);
        write_file(gen_multigraph, raw.str());
      }
      emit(gen_report, pdcm::to_json(gen.simple.report) + "\n");
    } else if (*ingest) {
      std::ifstream in(ing_input);
      if (!in) throw std::runtime_error("cannot open '" + ing_input + "'");
      const auto result = pdcm::to_partially_directed(pdcm::parse_edge_list(in));
      if (!ing_output.empty()) {
        std::ostringstream graph;
        pdcm::write_pdgraph(graph, result.graph);
        emit(ing_output, graph.str());
      }
      emit(ing_stats, pdcm::to_json(result.stats) + "\n");
    } else if (*experiment) {
      if (!exp_config_file.empty()) apply_config_file(*experiment, exp_config_file);
      exp_config.model.coupling = pdcm::parse_coupling(exp_coupling);
      exp_config.output = exp_output;
      try {
        pdcm::validate(exp_config);
        (void)pdcm::make_distribution(exp_config.model);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto summary = pdcm::run_experiment(exp_config);
      std::cerr << summary.rows_written << " rows written, " << summary.rows_skipped << " already present\n";
    } else if (*components) {
      const auto summary = pdcm::strongly_connected_components(pdcm::load_pdgraph(comp_input));
      emit(comp_output, pdcm::to_csv(summary));
    } else if (*oracle) {
      std::ifstream in(orc_spec);
      if (!in) throw std::runtime_error("cannot open '" + orc_spec + "'");
      const auto spec = pdcm::read_save_attempt_spec(in);
      nlohmann::ordered_json j;
      j["exact"] = pdcm::exact_save_probability(spec);
      const auto mc = pdcm::monte_carlo_save_frequency(spec, orc_replicates, orc_seed);
      j["frequency"] = mc.frequency;
      j["stderr"] = mc.standard_error;
      j["replicates"] = mc.replicates;
      std::cout << j.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
