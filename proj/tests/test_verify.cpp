#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "origami/verify.hpp"

using namespace origami;

namespace {

void check_report(const VerificationReport &r, std::size_t min_claims) {
  CHECK(r.claims.size() >= min_claims);
  std::set<std::string> ids;
  for (const auto &c : r.claims) {
    INFO(c.id << ": " << c.witness);
    CHECK(c.status != Status::fail);
    CHECK_FALSE(c.anchor.empty());
    ids.insert(c.id);
  }
  CHECK(ids.size() == r.claims.size());
  CHECK(std::is_sorted(r.claims.begin(), r.claims.end(),
                       [](const Claim &l, const Claim &r) { return l.id < r.id; }));
  CHECK(r.overall());
}

bool has(const VerificationReport &r, const std::string &id) {
  return std::any_of(r.claims.begin(), r.claims.end(), [&](const Claim &c) { return c.id == id; });
}

} // namespace

TEST_CASE("suite names") {
  CHECK(parse_suite("group") == Suite::group);
  CHECK(parse_suite("origami-x") == Suite::origami_x);
  CHECK(parse_suite("origami-y") == Suite::origami_y);
  CHECK(parse_suite("origami-z") == Suite::origami_z);
  CHECK(parse_suite("spectral") == Suite::spectral);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_THROWS_AS(parse_suite("bogus"), std::invalid_argument);
  for (Suite s : {Suite::group, Suite::origami_x, Suite::origami_y, Suite::origami_z,
                  Suite::spectral, Suite::all})
    CHECK(parse_suite(suite_name(s)) == s);
  CHECK(status_name(Status::skipped_budget) == "skipped-budget");
}

TEST_CASE("group suite") {
  VerificationReport r = run_suite(Suite::group, {});
  check_report(r, 5);
  CHECK(has(r, "group.round-trip"));
  CHECK(has(r, "group.rewrite.A"));
}

TEST_CASE("origami-x suite") {
  VerificationReport r = run_suite(Suite::origami_x, {});
  check_report(r, 5);
  CHECK(has(r, "x.census"));
  CHECK(has(r, "x.veech"));
}

TEST_CASE("origami-y suite") {
  VerificationReport r = run_suite(Suite::origami_y, {1, 2});
  check_report(r, 8);
  CHECK(has(r, "y.k2.genus"));
  CHECK(has(r, "y.k1.veech"));
}

TEST_CASE("origami-z suite") {
  VerificationReport r = run_suite(Suite::origami_z, {1, 2, 3});
  check_report(r, 9);
  CHECK(has(r, "z.k3.containment"));
}

TEST_CASE("spectral suite") {
  VerificationReport r = run_suite(Suite::spectral, {3, 4, 5, 6, 7, 8, 9, 10});
  check_report(r, 5);
  CHECK(has(r, "spectral.min-n"));
  CHECK(has(r, "spectral.k5.bound"));
}

TEST_CASE("spectral suite reports an uncertified k") {
  VerificationReport r = run_suite(Suite::spectral, {2});
  auto it = std::find_if(r.claims.begin(), r.claims.end(),
                         [](const Claim &c) { return c.id == "spectral.k2.bound"; });
  REQUIRE(it != r.claims.end());
  CHECK(it->status == Status::pass);
  CHECK(it->witness.find("not certified") != std::string::npos);
  CHECK(it->witness.find("0.274") != std::string::npos);
}

TEST_CASE("empty k list uses defaults") {
  VerificationReport r = run_suite(Suite::spectral, {});
  CHECK(has(r, "spectral.k3.bound"));
  CHECK(has(r, "spectral.k10.bound"));
  CHECK_FALSE(has(r, "spectral.k2.bound"));
  CHECK_THROWS_AS(run_suite(Suite::group, {0}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(Suite::group, {}, 0.0), std::invalid_argument);
}

TEST_CASE("reports render as text and json") {
  VerificationReport r = run_suite(Suite::spectral, {3});
  std::string text = to_text(r);
  CHECK(text.find("spectral.min-n") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);

  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["suite"] == "spectral");
  CHECK(j["overall"] == "pass");
  REQUIRE(j["claims"].is_array());
  CHECK(j["claims"].size() == r.claims.size());
  for (const auto &c : j["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("witness"));
    std::string s = c["status"];
    CHECK((s == "pass" || s == "fail" || s == "skipped-budget"));
  }
}

TEST_CASE("overall ignores budget skips") {
  VerificationReport r;
  r.claims.push_back({"a", "x", Status::pass, ""});
  r.claims.push_back({"b", "y", Status::skipped_budget, ""});
  CHECK(r.overall());
  r.claims.push_back({"c", "z", Status::fail, ""});
  CHECK_FALSE(r.overall());
}

TEST_CASE("Z_k certificate") {
  ZCertificate t = certify_z(3, 5.0, 500);
  CHECK(t.ramification.conclusion());
  CHECK(t.bounds.complementary_series_certified);
  CHECK(t.stabilizer_samples > 0);
  CHECK(t.samples_in_group == t.stabilizer_samples);
  CHECK(t.orbit_points > 0);
  CHECK(t.certified);
  CHECK(t.note == "certified");

  ZCertificate t2 = certify_z(2, 2.0, 200);
  CHECK(t2.ramification.conclusion());
  CHECK_FALSE(t2.certified);
  CHECK_THROWS_AS(certify_z(0), std::invalid_argument);
}
