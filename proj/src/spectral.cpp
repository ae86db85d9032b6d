#include "origami/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace origami {

double arccosh(double z) {
  if (!(z >= 1.0))
    throw std::domain_error("arccosh: argument below 1");
  if (z > 1e8)
    return std::log(2.0 * z) - 1.0 / (4.0 * z * z);
  return std::log(z + std::sqrt(z * z - 1.0));
}

double geodesic_length(const Mat2 &m) {
  BigInt tr = abs(m.trace());
  if (tr <= 2)
    throw std::domain_error("geodesic_length: " + m.to_string() + " is not hyperbolic");
  return 2.0 * arccosh(tr.convert_to<double>() / 2.0);
}

double buser_lambda(double h) {
  double root = 10.0 * h + 1.0;
  return (root * root - 1.0) / 10.0;
}

SpectralBound bounds_for_k(int k) {
  if (k < 1)
    throw std::invalid_argument("bounds_for_k: k must be positive");
  constexpr double pi = std::numbers::pi;
  const double a = arccosh(17.0);
  const double kk = static_cast<double>(k);

  SpectralBound s;
  s.k = k;
  s.ell_c1 = geodesic_length(eval_word(FWord::parse("xyxy")));
  s.h_bound = 2.0 * s.ell_c1 / (kk * 24.0 * pi);
  s.lambda_bound = 10.0 * a * a / (9.0 * pi * pi * (2.0 * kk) * (2.0 * kk)) +
                   2.0 * a / (3.0 * pi * 2.0 * kk);
  s.lambda_from_h = buser_lambda(s.h_bound);
  if (s.lambda_bound < 0.25) {
    double root = std::sqrt(1.0 - 4.0 * s.lambda_bound);
    s.gap_bound = 1.0 - root;
    s.gap_chain_ratio = 2.0 * s.lambda_bound / root;
  }
  s.gap_chain_sqrt3 = std::sqrt(3.0) / kk;

  constexpr double tol = 1e-9;
  s.complementary_series_certified = s.lambda_bound < 0.25 - tol;
  s.noncongruence_certified = s.lambda_bound <= 1.0 / 6.0 + tol;
  return s;
}

double distance_constant() {
  const double e = std::numbers::e;
  const double r2 = std::numbers::sqrt2;
  double q = 1.0 - std::exp(-4.0);
  return (32.0 + r2) / (3.0 * e * e * e * q * q) + (1.0 + 2.0 * r2) * e;
}

double separation_length(int n) {
  if (n < 4)
    throw std::invalid_argument("separation_length: N must be at least 4");
  double m = static_cast<double>(n / 2 - 1);
  return arccosh(1.0 + 2.0 * m * m);
}

bool distance_estimate_holds(int n) {
  constexpr double pi = std::numbers::pi;
  double t = separation_length(n);
  double lhs = (2.0 * pi - 2.0) / (2.0 * pi * n);
  return lhs > distance_constant() * t * std::exp(-t);
}

MinLevelResult min_level_checked() {
  MinLevelResult r;
  for (int n = 4;; ++n) {
    if (distance_estimate_holds(n)) {
      r.n = n;
      break;
    }
  }
  for (int n = r.n + 1; n <= r.n + 100; ++n)
    if (!distance_estimate_holds(n))
      r.exceptions.push_back(n);
  r.stays_true = r.exceptions.empty();
  return r;
}

int min_level() { return min_level_checked().n; }

double area_for_index(long index) { return static_cast<double>(index) * std::numbers::pi / 3.0; }

long psl2_order(int p) {
  long count = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1)
            ++count;
  return p == 2 ? count : count / 2;
}

AreaReport area_check() {
  constexpr double pi = std::numbers::pi;
  AreaReport r;
  r.gamma2_area = std::abs(area_for_index(6) - 2.0 * pi) < 1e-9;
  r.gamma6_area = std::abs(area_for_index(72) - 24.0 * pi) < 1e-9;
  r.gamma6_index = psl2_order(2) * psl2_order(3) == 72;
  return r;
}

} // namespace origami
