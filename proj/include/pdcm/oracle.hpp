#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pdcm/types.hpp"

namespace pdcm {

/// Vertex 1 has degree `target`; vertices 2..n have degrees `others`.
struct SaveAttemptSpec {
  DegreeTriple target;
  std::vector<DegreeTriple> others;

  std::size_t n() const noexcept { return others.size() + 1; }
  DegreeSequence sequence() const;
};

/// Exact probability that vertex 1 keeps its drawn degree after matching and
/// simplification, given all degrees. Sums, over every save-attempt (each stub of
/// vertex 1 aimed at a distinct other vertex), the product of sequential matching
/// probabilities. Unconnected-stub pools (odd undirected stub, in/out imbalance) enter
/// the denominators; guard terms keep denominators positive when no attempt can succeed.
///
/// The tuple sum is evaluated with a dynamic program over vertices, since the
/// denominators depend only on stub positions and not on which vertex is chosen.
double exact_save_probability(const SaveAttemptSpec& spec);

struct SaveFrequency {
  double frequency = 0;
  double standard_error = 0;  // binomial, sqrt(f (1 - f) / replicates)
  std::uint64_t saved = 0;
  std::uint64_t replicates = 0;
};

/// Runs match_stubs + simplify on spec.sequence() `replicates` times and counts how
/// often vertex 1's final degree equals `target`. Replicate r uses derive_seed(seed, r).
SaveFrequency monte_carlo_save_frequency(const SaveAttemptSpec& spec, std::uint64_t replicates, std::uint64_t seed);

/// First non-comment line is the target, the remaining lines are the other vertices.
SaveAttemptSpec read_save_attempt_spec(std::istream& in);

}  // namespace pdcm
