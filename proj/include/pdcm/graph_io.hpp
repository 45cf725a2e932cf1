#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdcm/generator.hpp"
#include "pdcm/simplifier.hpp"

namespace pdcm {

/// Malformed input; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// pdgraph text format:
//   # pdgraph n=<n>
//   D <tail> <head>     one per arc, sorted
//   U <u> <v>           one per undirected edge, u < v, sorted
// Vertex ids are 1-based. All D lines precede all U lines.

void write_pdgraph(std::ostream& out, const SimpleGraph& g);

/// Raw matching output in file order, header "# pdgraph n=<n> multigraph". Debug only.
void write_multigraph(std::ostream& out, const MultiGraph& mg);

/// Reads a pdgraph file. Line order is free; the result is sorted and must be simple.
SimpleGraph read_pdgraph(std::istream& in);

/// Degree file: one vertex per line, "in out und" as non-negative integers, '#' comments.
std::vector<DegreeTriple> read_degree_file(std::istream& in);

/// Degree triples from either a degree file or a pdgraph file (detected by header).
std::vector<DegreeTriple> load_degree_triples(const std::filesystem::path& path);

SimpleGraph load_pdgraph(const std::filesystem::path& path);

}  // namespace pdcm
