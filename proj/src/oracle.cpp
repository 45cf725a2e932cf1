#include "pdcm/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "pdcm/generator.hpp"
#include "pdcm/graph_io.hpp"
#include "pdcm/random.hpp"
#include "pdcm/simplifier.hpp"

namespace pdcm {

DegreeSequence SaveAttemptSpec::sequence() const {
  std::vector<DegreeTriple> all;
  all.reserve(n());
  all.push_back(target);
  all.insert(all.end(), others.begin(), others.end());
  return DegreeSequence(std::move(all));
}

namespace {

// Sum over injective maps from vertex 1's stub positions into `others` of the product
// of matching-stub counts. An in-position needs an out-stub, an out-position an in-stub.
long double attempt_weight_sum(const DegreeTriple& t, const std::vector<DegreeTriple>& others) {
  const std::size_t A = t.in + 1, B = t.out + 1, C = t.und + 1;
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * B + b) * C + c; };
  std::vector<long double> dp(A * B * C, 0.0L);
  dp[at(0, 0, 0)] = 1.0L;

  for (const auto& x : others) {
    // Descending sweep so each vertex fills at most one position.
    for (std::size_t a = A; a-- > 0;) {
      for (std::size_t b = B; b-- > 0;) {
        for (std::size_t c = C; c-- > 0;) {
          long double add = 0.0L;
          if (a > 0) add += dp[at(a - 1, b, c)] * static_cast<long double>(t.in - (a - 1)) * x.out;
          if (b > 0) add += dp[at(a, b - 1, c)] * static_cast<long double>(t.out - (b - 1)) * x.in;
          if (c > 0) add += dp[at(a, b, c - 1)] * static_cast<long double>(t.und - (c - 1)) * x.und;
          dp[at(a, b, c)] += add;
        }
      }
    }
  }
  return dp[at(t.in, t.out, t.und)];
}

}  // namespace

double exact_save_probability(const SaveAttemptSpec& spec) {
  if (spec.others.empty()) throw std::invalid_argument("save-attempt spec needs at least two vertices");
  const DegreeTriple& t = spec.target;
  if (t.total() == 0) return 1.0;

  const long double numerator = attempt_weight_sum(t, spec.others);
  if (numerator == 0.0L) return 0.0;

  const StubTotals s = spec.sequence().totals();
  const auto s_in = static_cast<std::int64_t>(s.in);
  const auto s_out = static_cast<std::int64_t>(s.out);
  const auto s_und = static_cast<std::int64_t>(s.und);
  const std::int64_t w = s_in - s_out;
  const std::int64_t v = s_und % 2;
  const std::int64_t d_in = t.in, d_out = t.out, d_und = t.und;

  long double denominator = 1.0L;
  auto multiply = [&](std::int64_t factor) {
    if (factor <= 0) throw std::logic_error("save probability denominator is not positive");
    denominator *= static_cast<long double>(factor);
  };
  for (std::int64_t r = 1; r <= d_in; ++r) {
    multiply(s_out - r + 1 + (w > 0 ? w : 0) + (d_in > s_out ? d_in : 0));
  }
  for (std::int64_t r = 1; r <= d_out; ++r) {
    multiply(s_in - d_in - r + 1 - (w < 0 ? w : 0) + (d_out > s_in - d_in ? d_out + d_in : 0));
  }
  for (std::int64_t r = 1; r <= d_und; ++r) {
    multiply(s_und - 2 * r + 1 + v + (2 * d_und > s_und ? 2 * d_und : 0));
  }
  return static_cast<double>(numerator / denominator);
}

SaveFrequency monte_carlo_save_frequency(const SaveAttemptSpec& spec, std::uint64_t replicates, std::uint64_t seed) {
  if (replicates == 0) throw std::invalid_argument("replicates must be >= 1");
  if (spec.others.empty()) throw std::invalid_argument("save-attempt spec needs at least two vertices");
  const DegreeSequence seq = spec.sequence();

  SaveFrequency out;
  out.replicates = replicates;
  for (std::uint64_t r = 0; r < replicates; ++r) {
    const auto result = simplify(match_stubs(seq, derive_seed(seed, r)));
    if (final_degrees(result.graph)[0] == spec.target) ++out.saved;
  }
  const double f = static_cast<double>(out.saved) / static_cast<double>(replicates);
  out.frequency = f;
  out.standard_error = std::sqrt(f * (1.0 - f) / static_cast<double>(replicates));
  return out;
}

SaveAttemptSpec read_save_attempt_spec(std::istream& in) {
  auto triples = read_degree_file(in);
  if (triples.size() < 2) throw ParseError(0, "save-attempt spec needs a target line and at least one other vertex");
  SaveAttemptSpec spec;
  spec.target = triples.front();
  spec.others.assign(triples.begin() + 1, triples.end());
  return spec;
}

}  // namespace pdcm
