#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pdcm/random.hpp"
#include "pdcm/types.hpp"

namespace pdcm {

/// How the three components of a vertex degree are drawn.
///  Independent: each component from its own marginal.
///  Dependent:   whole empirical vertices, or one synthetic value X giving (X, X, X).
enum class Coupling { Independent, Dependent };

std::string_view to_string(Coupling c) noexcept;
Coupling parse_coupling(std::string_view text);

/// Discrete scale-free law with F(k) = 1 - ((k + d) / d)^-(gamma - 1),
/// d = (zeta(gamma) (gamma - 1))^(-1 / (gamma - 1)). Support is k >= 1 since F(0) = 0,
/// and the tail satisfies p_k ~ k^-gamma. The support is not truncated.
class ScaleFreeLaw {
 public:
  /// Accepts gamma > 1; gamma <= 2 is allowed for generation but has no finite mean.
  explicit ScaleFreeLaw(double gamma);

  double gamma() const noexcept { return gamma_; }
  double offset() const noexcept { return offset_; }
  bool has_finite_mean() const noexcept { return gamma_ > 2.0; }

  double cdf(std::uint64_t k) const;
  /// Upper tail 1 - F(k), computed without cancellation.
  double survival(std::uint64_t k) const;
  double pmf(std::uint64_t k) const;
  /// Smallest k with cdf(k) >= u, for u in [0, 1).
  std::uint64_t quantile(double u) const;
  std::optional<double> mean() const;

 private:
  double gamma_;
  double exponent_;  // gamma - 1
  double offset_;
};

/// Poisson law; inversion sampling supports lambda up to 700.
class PoissonLaw {
 public:
  explicit PoissonLaw(double lambda);

  double lambda() const noexcept { return lambda_; }
  double pmf(std::uint64_t k) const;
  std::uint64_t quantile(double u) const;

 private:
  double lambda_;
  double p0_;
};

/// Finite pool of empirical degree triples with precomputed joint and marginal frequencies.
class EmpiricalLaw {
 public:
  explicit EmpiricalLaw(std::vector<DegreeTriple> atoms);

  const std::vector<DegreeTriple>& atoms() const noexcept { return atoms_; }
  double joint(const DegreeTriple& d) const;
  double marginal_in(Degree k) const;
  double marginal_out(Degree k) const;
  double marginal_und(Degree k) const;

 private:
  std::vector<DegreeTriple> atoms_;
  std::unordered_map<DegreeTriple, double, DegreeTripleHash> joint_;
  std::unordered_map<Degree, double> in_, out_, und_;
};

struct DegreeMeans {
  double in = 0;
  double out = 0;
  double und = 0;
};

/// A samplable joint degree distribution F. Immutable after construction.
class JointDegreeDistribution {
 public:
  using Law = std::variant<EmpiricalLaw, ScaleFreeLaw, PoissonLaw>;

  static JointDegreeDistribution empirical(std::vector<DegreeTriple> atoms, Coupling coupling);
  static JointDegreeDistribution scale_free(double gamma, Coupling coupling);
  static JointDegreeDistribution poisson(double lambda, Coupling coupling);

  const Law& law() const noexcept { return law_; }
  Coupling coupling() const noexcept { return coupling_; }

  /// "empirical", "scale-free" or "poisson".
  std::string_view model_name() const noexcept;

  /// Exact probability p_d of the triple under this distribution and coupling.
  double probability(const DegreeTriple& d) const;

  DegreeTriple draw(Rng& rng) const;

 private:
  JointDegreeDistribution(Law law, Coupling coupling) : law_(std::move(law)), coupling_(coupling) {}

  Law law_;
  Coupling coupling_;
};

/// n i.i.d. triples from dist. Deterministic in (dist, n, seed).
DegreeSequence sample_sequence(const JointDegreeDistribution& dist, std::size_t n, std::uint64_t seed);

/// Component means; std::nullopt when the mean is not finite (scale-free, gamma <= 2).
std::optional<DegreeMeans> distribution_mean(const JointDegreeDistribution& dist);

double scale_free_cdf(double gamma, std::uint64_t k);
std::uint64_t scale_free_quantile(double gamma, double u);

}  // namespace pdcm
