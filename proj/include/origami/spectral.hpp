#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/group_words.hpp"

namespace origami {

// ln(z + sqrt(z^2 - 1)) for z >= 1, with an asymptotic branch for large z.
double arccosh(double z);

// 2 arccosh(|tr M| / 2); throws std::domain_error unless |tr M| > 2.
double geodesic_length(const Mat2 &m);

struct SpectralBound {
  int k = 0;
  double ell_c1 = 0;          // length of the shortest separating geodesic in the level-6 quotient
  double h_bound = 0;         // Cheeger constant bound
  double lambda_bound = 0;    // closed form bound on the first eigenvalue
  double lambda_from_h = 0;   // the same bound through the Buser inequality in h
  std::optional<double> gap_bound;       // 1 - sqrt(1 - 4 lambda) when lambda < 1/4
  std::optional<double> gap_chain_ratio; // 2 lambda / sqrt(1 - 4 lambda)
  double gap_chain_sqrt3 = 0;            // sqrt(3) / k
  bool complementary_series_certified = false;
  bool noncongruence_certified = false;
};

SpectralBound bounds_for_k(int k);

// Largest lambda with sqrt(10 lambda + 1) <= 10 h + 1.
double buser_lambda(double h);

double distance_constant();
// arccosh(1 + 2 (floor(N/2) - 1)^2), N >= 4.
double separation_length(int n);
bool distance_estimate_holds(int n);

struct MinLevelResult {
  int n = 0;
  bool stays_true = false;      // predicate holds for the next 100 values
  std::vector<int> exceptions;  // values among those where it fails
};

MinLevelResult min_level_checked();
int min_level();

// Hyperbolic area of a subgroup of index `index` in PSL(2,Z).
double area_for_index(long index);

struct AreaReport {
  bool gamma2_area = false;  // index 6 -> 2 pi
  bool gamma6_area = false;  // index 72 -> 24 pi
  bool gamma6_index = false; // 72 = |PSL2(Z/2)| |PSL2(Z/3)|
  bool pass() const { return gamma2_area && gamma6_area && gamma6_index; }
};

AreaReport area_check();

// Order of PSL(2, Z/p) by counting matrices, p prime.
long psl2_order(int p);

} // namespace origami
