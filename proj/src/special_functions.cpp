#include "pdcm/special_functions.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace pdcm {

namespace {

// B_{2j} / (2j)! for j = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

constexpr int kDirectTerms = 24;

}  // namespace

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta: s must be > 1");
  if (!(q > 0.0)) throw std::invalid_argument("hurwitz_zeta: q must be > 0");

  double sum = 0.0;
  for (int k = kDirectTerms - 1; k >= 0; --k) sum += std::pow(k + q, -s);

  const double x = kDirectTerms + q;
  const double x_pow = std::pow(x, -s);
  sum += x * x_pow / (s - 1.0);
  sum += 0.5 * x_pow;

  // Tail corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1).
  double rising = s;
  double power = x_pow / x;
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    const double a = s + 2.0 * static_cast<double>(j) + 1.0;
    rising *= a * (a + 1.0);
    power /= x * x;
  }
  return sum;
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

}  // namespace pdcm
