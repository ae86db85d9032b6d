#pragma once

#include <string>
#include <vector>

#include "origami/constructions.hpp"
#include "origami/spectral.hpp"

namespace origami {

enum class Status { pass, fail, skipped_budget };

std::string_view status_name(Status s);

struct Claim {
  std::string id;
  std::string anchor;  // the statement being checked
  Status status = Status::fail;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<Claim> claims; // sorted by id
  bool overall() const;       // all non-skipped claims pass
};

enum class Suite { group, origami_x, origami_y, origami_z, spectral, all };

// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

// budget_seconds bounds each orbit computation. An empty k list means
// {1, 2, 3, 4}, or {3, ..., 10} for the spectral suite.
VerificationReport run_suite(Suite suite, const std::vector<int> &ks, double budget_seconds = 60.0);

std::string to_text(const VerificationReport &r);
std::string to_json(const VerificationReport &r);

struct ZCertificate {
  int k = 0;
  RamificationCertificate ramification;
  SpectralBound bounds;
  std::size_t stabilizer_samples = 0;
  std::size_t samples_in_group = 0;
  std::size_t orbit_points = 0;
  bool orbit_complete = false;
  bool certified = false;
  std::string note;
};

ZCertificate certify_z(int k, double budget_seconds = 20.0,
                                         std::size_t max_orbit = 5000);

} // namespace origami
