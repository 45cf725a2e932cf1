#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "pdcm/degree_model.hpp"
#include "pdcm/graph_io.hpp"
#include "pdcm/special_functions.hpp"

using namespace pdcm;

namespace {

// Reference values computed with mpmath at 30 digits.
constexpr double kZeta25 = 1.34148725725091717975676969335;
constexpr double kOffset25 = 0.627405217803380431527527907788;
constexpr double kCdf25At5 = 0.962772839998206378522510779381;
constexpr double kMean25 = 1.91634348466256166918816907213;

std::vector<DegreeTriple> degree_fixture() {
  std::ifstream in(std::string(PDCM_DATA_DIR) + "/degrees_10k.txt");
  if (!in) throw std::runtime_error("missing data/degrees_10k.txt");
  return read_degree_file(in);
}

// Pearson statistic of observed counts against expected probabilities. Cells with an
// expected count below 5 are pooled into one tail cell. Returns (statistic, dof).
std::pair<double, int> chi_square(const std::map<std::uint64_t, std::uint64_t>& observed,
                                  const std::map<std::uint64_t, double>& expected_p, std::uint64_t total) {
  double stat = 0, pooled_obs = 0, pooled_exp = 0;
  int cells = 0;
  for (const auto& [k, p] : expected_p) {
    const double e = p * static_cast<double>(total);
    const auto it = observed.find(k);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    if (e >= 5) {
      stat += (o - e) * (o - e) / e;
      ++cells;
    } else {
      pooled_obs += o;
      pooled_exp += e;
    }
  }
  for (const auto& [k, c] : observed) {
    if (!expected_p.contains(k)) pooled_obs += static_cast<double>(c);
  }
  if (pooled_exp > 0) {
    stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++cells;
  }
  return {stat, cells - 1};
}

double chi_square_critical(int dof, double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(dof), alpha));
}

}  // namespace

TEST(SpecialFunctions, MatchHighPrecisionValues) {
  EXPECT_NEAR(riemann_zeta(2.5), kZeta25, 1e-13);
  EXPECT_NEAR(riemann_zeta(4.0), 1.08232323371113819151600369654, 1e-13);
  EXPECT_NEAR(riemann_zeta(1.1), 10.5844484649508009509826043743, 1e-11);
  EXPECT_NEAR(hurwitz_zeta(3.0, 0.5), 8.41439832211715999779816713058, 1e-12);
  EXPECT_NEAR(hurwitz_zeta(1.5, kOffset25), 3.85612554778596739021405313642, 1e-12);
}

TEST(ScaleFree, OffsetAndCdfValues) {
  const ScaleFreeLaw law(2.5);
  EXPECT_NEAR(law.offset(), kOffset25, 1e-12);
  EXPECT_EQ(scale_free_cdf(2.5, 0), 0.0);
  EXPECT_NEAR(scale_free_cdf(2.5, 5), kCdf25At5, 1e-13);
}

TEST(ScaleFree, CdfIsMonotoneBoundedAndTendsToOne) {
  const ScaleFreeLaw law(2.5);
  double prev = 0.0;
  for (std::uint64_t k = 0; k < 100000; k += 1 + k / 10) {
    const double f = law.cdf(k);
    EXPECT_GE(f, prev);
    EXPECT_LT(f, 1.0);
    prev = f;
  }
  EXPECT_NEAR(law.cdf(1000000000ULL), 1.0, 1e-6);
  EXPECT_NEAR(law.cdf(1000) + law.survival(1000), 1.0, 1e-15);
}

TEST(ScaleFree, PmfTailFollowsPowerLaw) {
  const ScaleFreeLaw law(2.5);
  // p_k k^gamma tends to (gamma - 1) d^(gamma - 1) = 1 / zeta(gamma).
  const double limit = 1.0 / kZeta25;
  double prev_gap = 1.0;
  for (std::uint64_t k : {100ULL, 1000ULL, 10000ULL, 100000ULL}) {
    const double ratio = law.pmf(k) * std::pow(static_cast<double>(k), 2.5);
    const double gap = std::abs(ratio / limit - 1.0);
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
  EXPECT_LT(prev_gap, 1e-4);

  double partial = 0.0;
  for (std::uint64_t k = 1; k <= 200; ++k) partial += law.pmf(k);
  EXPECT_NEAR(partial, law.cdf(200), 1e-14);
  EXPECT_EQ(law.pmf(0), 0.0);
}

TEST(ScaleFree, QuantileInvertsCdf) {
  EXPECT_EQ(scale_free_quantile(2.5, 0.0), 1u);
  EXPECT_EQ(scale_free_quantile(2.5, kCdf25At5), 5u);
  const ScaleFreeLaw law(2.5);
  for (std::uint64_t k : {1ULL, 2ULL, 7ULL, 50ULL, 1234ULL, 99999ULL}) {
    const double f = law.cdf(k);
    EXPECT_EQ(law.quantile(f), k);
    EXPECT_EQ(law.quantile(std::nextafter(f, 1.0)), k + 1);
  }
  EXPECT_THROW(law.quantile(1.0), std::invalid_argument);
  EXPECT_THROW(law.quantile(-0.1), std::invalid_argument);
}

TEST(ScaleFree, RejectsExponentAtOrBelowOne) {
  EXPECT_THROW(ScaleFreeLaw(1.0), std::invalid_argument);
  EXPECT_THROW(scale_free_cdf(0.5, 3), std::invalid_argument);
  EXPECT_NO_THROW(ScaleFreeLaw(1.5));
}

TEST(ScaleFree, KolmogorovDistanceOfQuantileDraws) {
  const ScaleFreeLaw law(2.5);
  constexpr std::size_t kDraws = 200000;
  Rng rng(77);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t i = 0; i < kDraws; ++i) ++counts[law.quantile(rng.uniform01())];
  double cum = 0, ks = 0;
  for (const auto& [k, c] : counts) {
    ks = std::max(ks, std::abs(law.cdf(k - 1) - cum / kDraws));
    cum += static_cast<double>(c);
    ks = std::max(ks, std::abs(law.cdf(k) - cum / kDraws));
  }
  // Asymptotic 0.001 critical value of the Kolmogorov statistic.
  EXPECT_LT(ks, 1.95 / std::sqrt(static_cast<double>(kDraws)));
}

TEST(ScaleFree, MeanMatchesIndependentSeries) {
  const auto mean = ScaleFreeLaw(2.5).mean();
  ASSERT_TRUE(mean.has_value());
  EXPECT_NEAR(*mean, kMean25, 1e-11);

  // E[X] = sum_{k>=0} S(k) with S(k) = (d / (k + d))^a. Sum the first K terms and bound
  // the remainder between the integrals of the decreasing S from K and from K - 1.
  const double d = kOffset25, a = 1.5;
  constexpr std::uint64_t K = 1000000;
  long double head = 0;
  for (std::uint64_t k = 0; k < K; ++k) head += std::pow(d / (static_cast<double>(k) + d), a);
  auto tail_integral = [&](double x) { return std::pow(d, a) * std::pow(x + d, 1 - a) / (a - 1); };
  const double lower = static_cast<double>(head) + tail_integral(K);
  const double upper = static_cast<double>(head) + tail_integral(K - 1);
  EXPECT_GE(*mean, lower - 1e-10);
  EXPECT_LE(*mean, upper + 1e-10);

  EXPECT_FALSE(ScaleFreeLaw(2.0).mean().has_value());
  EXPECT_FALSE(distribution_mean(JointDegreeDistribution::scale_free(1.8, Coupling::Dependent)).has_value());
}

TEST(Poisson, PmfAndQuantile) {
  const PoissonLaw law(7.0);
  EXPECT_NEAR(law.pmf(7), 0.149002779674337885215779107215, 1e-15);
  double cum = 0;
  for (std::uint64_t k = 0; k < 30; ++k) {
    cum += law.pmf(k);
    EXPECT_EQ(law.quantile(cum - 1e-12), k);
  }
  EXPECT_EQ(law.quantile(0.0), 0u);
  EXPECT_THROW(PoissonLaw(0.0), std::invalid_argument);
  EXPECT_THROW(PoissonLaw(-1.0), std::invalid_argument);
}

TEST(Poisson, SamplerPassesChiSquare) {
  const auto dist = JointDegreeDistribution::poisson(7.0, Coupling::Independent);
  constexpr std::size_t n = 100000;
  const auto seq = sample_sequence(dist, n, 5);
  std::map<std::uint64_t, std::uint64_t> observed;
  for (const auto& d : seq) ++observed[d.in];
  std::map<std::uint64_t, double> expected;
  const PoissonLaw law(7.0);
  for (std::uint64_t k = 0; k < 40; ++k) expected[k] = law.pmf(k);
  const auto [stat, dof] = chi_square(observed, expected, n);
  EXPECT_LT(stat, chi_square_critical(dof, 0.001));
}

TEST(Means, AgreeWithDefinitions) {
  const auto poisson = distribution_mean(JointDegreeDistribution::poisson(7.0, Coupling::Independent));
  ASSERT_TRUE(poisson.has_value());
  EXPECT_DOUBLE_EQ(poisson->in, 7.0);
  EXPECT_DOUBLE_EQ(poisson->out, 7.0);
  EXPECT_DOUBLE_EQ(poisson->und, 7.0);
  EXPECT_DOUBLE_EQ(poisson->in + poisson->out + 2 * poisson->und, 28.0);

  const auto emp = distribution_mean(JointDegreeDistribution::empirical({{1, 1, 0}, {3, 3, 2}}, Coupling::Dependent));
  ASSERT_TRUE(emp.has_value());
  EXPECT_DOUBLE_EQ(emp->in, 2.0);
  EXPECT_DOUBLE_EQ(emp->out, 2.0);
  EXPECT_DOUBLE_EQ(emp->und, 1.0);

  const auto sf = distribution_mean(JointDegreeDistribution::scale_free(2.5, Coupling::Independent));
  ASSERT_TRUE(sf.has_value());
  EXPECT_NEAR(sf->in, kMean25, 1e-11);
  EXPECT_EQ(sf->in, sf->out);
  EXPECT_EQ(sf->in, sf->und);
}

TEST(Sampling, DependentPoissonHasEqualComponents) {
  const auto seq = sample_sequence(JointDegreeDistribution::poisson(7.0, Coupling::Dependent), 1000, 3);
  double sum = 0;
  for (const auto& d : seq) {
    EXPECT_EQ(d.in, d.out);
    EXPECT_EQ(d.in, d.und);
    sum += d.in;
  }
  // Standard error of the mean is sqrt(7 / 1000), about 0.084.
  EXPECT_NEAR(sum / 1000, 7.0, 0.35);
  const auto s = seq.totals();
  EXPECT_EQ(s.in, s.out);
}

TEST(Sampling, DependentScaleFreeHasEqualComponents) {
  const auto seq = sample_sequence(JointDegreeDistribution::scale_free(2.5, Coupling::Dependent), 5000, 4);
  for (const auto& d : seq) {
    EXPECT_EQ(d.in, d.out);
    EXPECT_EQ(d.in, d.und);
  }
}

TEST(Sampling, SingleAtomIsReproduced) {
  for (auto coupling : {Coupling::Independent, Coupling::Dependent}) {
    const auto seq = sample_sequence(JointDegreeDistribution::empirical({{1, 2, 3}}, coupling), 5, 11);
    ASSERT_EQ(seq.size(), 5u);
    for (const auto& d : seq) EXPECT_EQ(d, (DegreeTriple{1, 2, 3}));
  }
}

TEST(Sampling, RejectsEmptyInputs) {
  const auto dist = JointDegreeDistribution::poisson(7.0, Coupling::Independent);
  EXPECT_THROW(sample_sequence(dist, 0, 1), std::invalid_argument);
  EXPECT_THROW(JointDegreeDistribution::empirical({}, Coupling::Independent), std::invalid_argument);
}

TEST(Sampling, IsDeterministicInSeed) {
  const auto dist = JointDegreeDistribution::scale_free(2.5, Coupling::Independent);
  EXPECT_EQ(sample_sequence(dist, 2000, 42), sample_sequence(dist, 2000, 42));
  EXPECT_NE(sample_sequence(dist, 2000, 42), sample_sequence(dist, 2000, 43));
}

TEST(Sampling, EmpiricalMarginalsArePreserved) {
  const auto atoms = degree_fixture();
  for (auto coupling : {Coupling::Independent, Coupling::Dependent}) {
    const auto dist = JointDegreeDistribution::empirical(atoms, coupling);
    const auto& law = std::get<EmpiricalLaw>(dist.law());
    constexpr std::size_t n = 100000;
    const auto seq = sample_sequence(dist, n, 2024);

    std::map<std::uint64_t, std::uint64_t> obs_in, obs_out, obs_und;
    for (const auto& d : seq) {
      ++obs_in[d.in];
      ++obs_out[d.out];
      ++obs_und[d.und];
    }
    std::map<std::uint64_t, double> exp_in, exp_out, exp_und;
    for (const auto& a : atoms) {
      exp_in[a.in] = law.marginal_in(a.in);
      exp_out[a.out] = law.marginal_out(a.out);
      exp_und[a.und] = law.marginal_und(a.und);
    }
    for (const auto& [obs, expected] : {std::pair{&obs_in, &exp_in}, {&obs_out, &exp_out}, {&obs_und, &exp_und}}) {
      const auto [stat, dof] = chi_square(*obs, *expected, n);
      EXPECT_LT(stat, chi_square_critical(dof, 0.001)) << "coupling " << to_string(coupling);
    }
  }
}

TEST(Probability, CouplingSemantics) {
  const auto indep = JointDegreeDistribution::poisson(7.0, Coupling::Independent);
  const PoissonLaw law(7.0);
  EXPECT_NEAR(indep.probability({3, 5, 7}), law.pmf(3) * law.pmf(5) * law.pmf(7), 1e-18);

  const auto dep = JointDegreeDistribution::poisson(7.0, Coupling::Dependent);
  EXPECT_DOUBLE_EQ(dep.probability({6, 6, 6}), law.pmf(6));
  EXPECT_EQ(dep.probability({6, 6, 5}), 0.0);

  const auto emp = JointDegreeDistribution::empirical({{1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}}, Coupling::Dependent);
  EXPECT_DOUBLE_EQ(emp.probability({1, 0, 0}), 0.5);
  EXPECT_EQ(emp.probability({1, 1, 0}), 0.0);
  const auto emp_indep =
      JointDegreeDistribution::empirical({{1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}}, Coupling::Independent);
  EXPECT_DOUBLE_EQ(emp_indep.probability({1, 1, 0}), 0.5 * 0.25 * 0.75);
}

TEST(Coupling, ParsesNames) {
  EXPECT_EQ(parse_coupling("independent"), Coupling::Independent);
  EXPECT_EQ(parse_coupling("dependent"), Coupling::Dependent);
  EXPECT_EQ(to_string(Coupling::Dependent), "dependent");
  EXPECT_THROW(parse_coupling("joint"), std::invalid_argument);
}
