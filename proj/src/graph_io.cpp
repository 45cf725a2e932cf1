#include "pdcm/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace pdcm {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  T value{};
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool is_blank_or_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

void write_pdgraph(std::ostream& out, const SimpleGraph& g) {
  out << "# pdgraph n=" << g.n << '\n';
  for (const auto& [tail, head] : g.directed) out << "D " << tail + 1 << ' ' << head + 1 << '\n';
  for (const auto& [u, v] : g.undirected) out << "U " << u + 1 << ' ' << v + 1 << '\n';
}

void write_multigraph(std::ostream& out, const MultiGraph& mg) {
  out << "# pdgraph n=" << mg.n << " multigraph\n";
  for (const auto& [tail, head] : mg.arcs) out << "D " << tail + 1 << ' ' << head + 1 << '\n';
  for (const auto& [u, v] : mg.und_edges) out << "U " << u + 1 << ' ' << v + 1 << '\n';
}

SimpleGraph read_pdgraph(std::istream& in) {
  SimpleGraph g;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!have_header) {
      const auto tokens = split_ws(line);
      if (tokens.empty()) continue;
      if (tokens.size() < 3 || tokens[0] != "#" || tokens[1] != "pdgraph" || !tokens[2].starts_with("n=")) {
        throw ParseError(line_no, "missing '# pdgraph n=<n>' header");
      }
      if (tokens.size() > 3) throw ParseError(line_no, "multigraph dumps cannot be read as simple graphs");
      g.n = parse_number<std::uint64_t>(tokens[2].substr(2), line_no);
      if (g.n > std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "vertex count exceeds 32 bits");
      have_header = true;
      continue;
    }
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 3 || (tokens[0] != "D" && tokens[0] != "U")) {
      throw ParseError(line_no, "expected 'D u v' or 'U u v'");
    }
    const auto u = parse_number<std::uint64_t>(tokens[1], line_no);
    const auto v = parse_number<std::uint64_t>(tokens[2], line_no);
    if (u == 0 || v == 0 || u > g.n || v > g.n) throw ParseError(line_no, "vertex id out of range 1..n");
    const VertexPair p{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)};
    if (tokens[0] == "D") {
      g.directed.push_back(p);
    } else {
      g.undirected.push_back(std::minmax(p.first, p.second));
    }
  }
  if (!have_header) throw ParseError(0, "empty pdgraph input");
  std::sort(g.directed.begin(), g.directed.end());
  std::sort(g.undirected.begin(), g.undirected.end());
  if (auto violation = find_violation(g)) throw ParseError(0, "graph is not simple: " + *violation);
  return g;
}

std::vector<DegreeTriple> read_degree_file(std::istream& in) {
  std::vector<DegreeTriple> triples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 3) throw ParseError(line_no, "expected three integers 'in out und'");
    triples.push_back({parse_number<Degree>(tokens[0], line_no), parse_number<Degree>(tokens[1], line_no),
                       parse_number<Degree>(tokens[2], line_no)});
  }
  return triples;
}

std::vector<DegreeTriple> load_degree_triples(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string first;
  while (std::getline(in, first) && split_ws(first).empty()) {
  }
  in.clear();
  in.seekg(0);
  if (first.starts_with("# pdgraph")) return final_degrees(read_pdgraph(in));
  return read_degree_file(in);
}

SimpleGraph load_pdgraph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_pdgraph(in);
}

}  // namespace pdcm
