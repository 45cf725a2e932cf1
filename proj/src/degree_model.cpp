#include "pdcm/degree_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pdcm/special_functions.hpp"

namespace pdcm {

std::string_view to_string(Coupling c) noexcept {
  return c == Coupling::Independent ? "independent" : "dependent";
}

Coupling parse_coupling(std::string_view text) {
  if (text == "independent") return Coupling::Independent;
  if (text == "dependent") return Coupling::Dependent;
  throw std::invalid_argument("unknown coupling '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// ScaleFreeLaw

ScaleFreeLaw::ScaleFreeLaw(double gamma) : gamma_(gamma), exponent_(gamma - 1.0) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("scale-free gamma must be > 1");
  }
  offset_ = std::pow(riemann_zeta(gamma_) * exponent_, -1.0 / exponent_);
}

double ScaleFreeLaw::survival(std::uint64_t k) const {
  return std::exp(-exponent_ * std::log1p(static_cast<double>(k) / offset_));
}

double ScaleFreeLaw::cdf(std::uint64_t k) const { return 1.0 - survival(k); }

double ScaleFreeLaw::pmf(std::uint64_t k) const {
  if (k == 0) return 0.0;
  // S(k-1) - S(k) = S(k) * ((k + d) / (k - 1 + d))^a - S(k)
  const double step = std::expm1(exponent_ * std::log1p(1.0 / (static_cast<double>(k - 1) + offset_)));
  return survival(k) * step;
}

std::uint64_t ScaleFreeLaw::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("quantile requires u in [0, 1)");

  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  // Support starts at 1, so the search never returns 0.
  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  while (cdf(hi) < u) {
    if (hi >= kLimit) throw std::overflow_error("scale-free quantile exceeds 2^62");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (cdf(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::optional<double> ScaleFreeLaw::mean() const {
  if (!has_finite_mean()) return std::nullopt;
  // E[X] = sum_{k>=0} S(k) = d^a * HurwitzZeta(a, d)
  return std::pow(offset_, exponent_) * hurwitz_zeta(exponent_, offset_);
}

// ---------------------------------------------------------------------------
// PoissonLaw

PoissonLaw::PoissonLaw(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("poisson lambda must be > 0");
  if (lambda > 700.0) throw std::invalid_argument("poisson lambda above 700 is not supported");
  p0_ = std::exp(-lambda_);
}

double PoissonLaw::pmf(std::uint64_t k) const {
  const double kd = static_cast<double>(k);
  return std::exp(-lambda_ + kd * std::log(lambda_) - std::lgamma(kd + 1.0));
}

std::uint64_t PoissonLaw::quantile(double u) const {
  std::uint64_t k = 0;
  double p = p0_;
  double cumulative = p;
  while (cumulative <= u) {
    ++k;
    p *= lambda_ / static_cast<double>(k);
    if (p == 0.0) break;
    cumulative += p;
  }
  return k;
}

// ---------------------------------------------------------------------------
// EmpiricalLaw

EmpiricalLaw::EmpiricalLaw(std::vector<DegreeTriple> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("empirical degree list must not be empty");
  const double w = 1.0 / static_cast<double>(atoms_.size());
  for (const auto& d : atoms_) {
    joint_[d] += w;
    in_[d.in] += w;
    out_[d.out] += w;
    und_[d.und] += w;
  }
}

namespace {
double lookup(const std::unordered_map<Degree, double>& table, Degree k) {
  const auto it = table.find(k);
  return it == table.end() ? 0.0 : it->second;
}
}  // namespace

double EmpiricalLaw::joint(const DegreeTriple& d) const {
  const auto it = joint_.find(d);
  return it == joint_.end() ? 0.0 : it->second;
}
double EmpiricalLaw::marginal_in(Degree k) const { return lookup(in_, k); }
double EmpiricalLaw::marginal_out(Degree k) const { return lookup(out_, k); }
double EmpiricalLaw::marginal_und(Degree k) const { return lookup(und_, k); }

// ---------------------------------------------------------------------------
// JointDegreeDistribution

JointDegreeDistribution JointDegreeDistribution::empirical(std::vector<DegreeTriple> atoms, Coupling coupling) {
  return {EmpiricalLaw(std::move(atoms)), coupling};
}

JointDegreeDistribution JointDegreeDistribution::scale_free(double gamma, Coupling coupling) {
  return {ScaleFreeLaw(gamma), coupling};
}

JointDegreeDistribution JointDegreeDistribution::poisson(double lambda, Coupling coupling) {
  return {PoissonLaw(lambda), coupling};
}

std::string_view JointDegreeDistribution::model_name() const noexcept {
  switch (law_.index()) {
    case 0: return "empirical";
    case 1: return "scale-free";
    default: return "poisson";
  }
}

double JointDegreeDistribution::probability(const DegreeTriple& d) const {
  if (const auto* emp = std::get_if<EmpiricalLaw>(&law_)) {
    if (coupling_ == Coupling::Dependent) return emp->joint(d);
    return emp->marginal_in(d.in) * emp->marginal_out(d.out) * emp->marginal_und(d.und);
  }
  auto univariate = [this](std::uint64_t k) {
    if (const auto* sf = std::get_if<ScaleFreeLaw>(&law_)) return sf->pmf(k);
    return std::get<PoissonLaw>(law_).pmf(k);
  };
  if (coupling_ == Coupling::Dependent) {
    if (d.in != d.out || d.out != d.und) return 0.0;
    return univariate(d.in);
  }
  return univariate(d.in) * univariate(d.out) * univariate(d.und);
}

namespace {
Degree checked_degree(std::uint64_t k) {
  if (k > std::numeric_limits<Degree>::max()) throw std::overflow_error("sampled degree exceeds 32 bits");
  return static_cast<Degree>(k);
}
}  // namespace

DegreeTriple JointDegreeDistribution::draw(Rng& rng) const {
  if (const auto* emp = std::get_if<EmpiricalLaw>(&law_)) {
    const auto& atoms = emp->atoms();
    if (coupling_ == Coupling::Dependent) return atoms[rng.below(atoms.size())];
    // Component of a uniformly chosen atom is a draw from that component's marginal.
    const Degree in = atoms[rng.below(atoms.size())].in;
    const Degree out = atoms[rng.below(atoms.size())].out;
    const Degree und = atoms[rng.below(atoms.size())].und;
    return {in, out, und};
  }
  auto one = [&] {
    const double u = rng.uniform01();
    if (const auto* sf = std::get_if<ScaleFreeLaw>(&law_)) return checked_degree(sf->quantile(u));
    return checked_degree(std::get<PoissonLaw>(law_).quantile(u));
  };
  if (coupling_ == Coupling::Dependent) {
    const Degree x = one();
    return {x, x, x};
  }
  const Degree in = one();
  const Degree out = one();
  const Degree und = one();
  return {in, out, und};
}

DegreeSequence sample_sequence(const JointDegreeDistribution& dist, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_sequence: n must be >= 1");
  Rng rng(seed);
  std::vector<DegreeTriple> triples;
  triples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) triples.push_back(dist.draw(rng));
  return DegreeSequence(std::move(triples));
}

std::optional<DegreeMeans> distribution_mean(const JointDegreeDistribution& dist) {
  const auto& law = dist.law();
  if (const auto* emp = std::get_if<EmpiricalLaw>(&law)) {
    // Integer sums first so the averages are exact up to one rounding.
    std::uint64_t si = 0, so = 0, su = 0;
    for (const auto& d : emp->atoms()) {
      si += d.in;
      so += d.out;
      su += d.und;
    }
    const double n = static_cast<double>(emp->atoms().size());
    return DegreeMeans{static_cast<double>(si) / n, static_cast<double>(so) / n, static_cast<double>(su) / n};
  }
  if (const auto* po = std::get_if<PoissonLaw>(&law)) {
    return DegreeMeans{po->lambda(), po->lambda(), po->lambda()};
  }
  const auto m = std::get<ScaleFreeLaw>(law).mean();
  if (!m) return std::nullopt;
  return DegreeMeans{*m, *m, *m};
}

double scale_free_cdf(double gamma, std::uint64_t k) { return ScaleFreeLaw(gamma).cdf(k); }

std::uint64_t scale_free_quantile(double gamma, double u) {
  return ScaleFreeLaw(gamma).quantile(u);
}

}  // namespace pdcm
