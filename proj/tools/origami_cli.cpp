#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "origami/constructions.hpp"
#include "origami/spectral.hpp"
#include "origami/verify.hpp"

using namespace origami;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void apply_thread_cap() {
  if (const char *env = std::getenv("ORIGAMI_THREADS")) {
    int n = std::atoi(env);
    if (n > 0)
      omp_set_num_threads(n);
  }
}

Mat2 parse_matrix(const std::string &text) {
  std::istringstream is(text);
  std::string tok[4];
  for (auto &t : tok)
    if (!(is >> t))
      throw UsageError("--matrix needs four integers \"a b c d\"");
  std::string extra;
  if (is >> extra)
    throw UsageError("--matrix needs exactly four integers");
  try {
    return Mat2::sl2(BigInt(tok[0]), BigInt(tok[1]), BigInt(tok[2]), BigInt(tok[3]));
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  } catch (const std::runtime_error &) {
    throw UsageError("--matrix entries must be integers");
  }
}

void write_text(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string cylinder_text(const std::vector<CylinderClass> &cs) {
  std::vector<std::uint32_t> flat;
  for (const auto &c : cs)
    flat.insert(flat.end(), c.count, c.circumference);
  std::sort(flat.rbegin(), flat.rend());
  return format_multiset(flat);
}

int cmd_build(const std::string &which, int k, const std::string &out, const std::string &labels) {
  if ((which == "y" || which == "z") && k < 1)
    throw UsageError("build " + which + " needs --k K with K >= 1");
  auto make = [&]() -> LabeledOrigami {
    if (which == "e2")
      return build_E2();
    if (which == "x")
      return build_X();
    if (which == "y")
      return build_Y(k).y;
    if (which == "z")
      return build_Z(k).z;
    throw UsageError("unknown origami '" + which + "' (expected e2, x, y or z)");
  };
  LabeledOrigami o = make();
  write_text(out, to_text(o.origami));
  if (!labels.empty())
    write_text(labels, labels_text(o));
  return exit_ok;
}

int cmd_inspect(const std::string &path) {
  Origami o = read_origami(path);
  std::cout << "n " << o.size() << '\n'
            << "genus " << genus(o) << '\n'
            << "stratum " << format_multiset(stratum(o)) << '\n'
            << "horizontal cylinders " << cylinder_count(o, Direction::horizontal) << ' '
            << cylinder_text(cylinders(o, Direction::horizontal)) << '\n'
            << "vertical cylinders " << cylinder_count(o, Direction::vertical) << ' '
            << cylinder_text(cylinders(o, Direction::vertical)) << '\n'
            << "translations " << translations(o).elements.size() << '\n';
  return exit_ok;
}

int cmd_iso(const std::string &p1, const std::string &p2) {
  auto iso = is_isomorphic(read_origami(p1), read_origami(p2));
  if (!iso) {
    std::cout << "not isomorphic\n";
    return exit_failed;
  }
  std::cout << "isomorphic\nmap";
  for (auto s : *iso)
    std::cout << ' ' << s + 1;
  std::cout << '\n';
  return exit_ok;
}

int cmd_member(const std::string &text, int k) {
  if (k < 1)
    throw UsageError("member needs --k K with K >= 1");
  Mat2 m = parse_matrix(text);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  bool in2 = membership(m, Subgroup::p_gamma2);
  bool in6 = membership(m, Subgroup::p_gamma6);
  bool in6k = in6 && membership(m, Subgroup::p_gamma6_2k, k);
  std::cout << "matrix " << m.to_string() << '\n'
            << "in +-Gamma(2): " << yes(in2) << '\n'
            << "in +-Gamma(6): " << yes(in6) << '\n'
            << "in +-Gamma6(" << 2 * k << "): " << yes(in6k) << '\n';
  if (in2) {
    SignedWord d = decompose_gamma2(m);
    std::cout << "word: " << (d.sign < 0 ? "-" : "") << d.word.to_string() << '\n';
    if (in6)
      std::cout << "m = " << m_value(d.word, k) << " mod " << 2 * k << '\n';
  } else {
    std::cout << "word: none\n";
  }
  return in6k ? exit_ok : exit_failed;
}

int cmd_veech(const std::string &path, std::size_t max_orbit, double budget) {
  Origami o = read_origami(path);
  VeechOrbit orb = veech_orbit(o, {max_orbit, budget});
  std::cout << "orbit size " << orb.orbit_size << (orb.complete ? "" : " (incomplete)") << '\n';
  if (!orb.complete) {
    std::cout << "stopped: " << orb.stop_reason << '\n';
    std::cout << "status: skipped-budget\n";
    return exit_failed;
  }
  std::cout << "index in SL(2,Z) " << orb.orbit_size << '\n'
            << "stabilizer generators " << orb.stabilizer_generators.size() << '\n';
  for (const auto &g : orb.stabilizer_generators)
    std::cout << "  " << g.to_string() << '\n';
  return exit_ok;
}

int cmd_spectral(const std::vector<int> &ks) {
  bool all = true;
  std::printf("%4s %12s %12s %12s %12s %12s %6s %6s\n", "k", "ell(c1)", "h", "lambda", "gap",
              "sqrt3/k", "cs", "noncong");
  for (int k : ks) {
    if (k < 1)
      throw UsageError("--k values must be positive");
    SpectralBound s = bounds_for_k(k);
    std::string gap = s.gap_bound ? std::to_string(*s.gap_bound) : "-";
    std::printf("%4d %12.6f %12.6f %12.6f %12s %12.6f %6s %6s\n", k, s.ell_c1, s.h_bound,
                s.lambda_bound, gap.c_str(), s.gap_chain_sqrt3,
                s.complementary_series_certified ? "yes" : "no",
                s.noncongruence_certified ? "yes" : "no");
    all = all && s.complementary_series_certified;
  }
  return all ? exit_ok : exit_failed;
}

int cmd_min_level() {
  MinLevelResult r = min_level_checked();
  std::cout << r.n << '\n';
  return r.n == 170 ? exit_ok : exit_failed;
}

int cmd_verify(const std::string &suite, const std::vector<int> &ks, double budget, bool json) {
  Suite s;
  try {
    s = parse_suite(suite);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  for (int k : ks)
    if (k < 1)
      throw UsageError("--k values must be positive");
  VerificationReport r = run_suite(s, ks, budget);
  std::cout << (json ? to_json(r) + "\n" : to_text(r));
  return r.overall() ? exit_ok : exit_failed;
}

int cmd_certify(int k, double budget, std::size_t max_orbit) {
  if (k < 1)
    throw UsageError("certify needs --k K with K >= 1");
  ZCertificate t = certify_z(k, budget, max_orbit);
  std::cout << "k " << t.k << '\n'
            << "ramification criterion " << (t.ramification.conclusion() ? "holds" : "fails") << '\n'
            << "lambda bound " << t.bounds.lambda_bound << '\n'
            << "orbit points explored " << t.orbit_points
            << (t.orbit_complete ? " (complete)" : " (bounded search)") << '\n'
            << "stabilizer samples in +-Gamma6(" << 2 * k << ") " << t.samples_in_group << '/'
            << t.stabilizer_samples << '\n'
            << "result " << t.note << '\n';
  return t.certified ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char **argv) {
  apply_thread_cap();

  CLI::App app{"Square-tiled surfaces, level-6 subgroups and spectral bounds"};
  app.require_subcommand(1);

  std::string which, out, labels, path1, path2, matrix, suite;
  int k = 0;
  std::vector<int> ks;
  std::size_t max_orbit = 1'000'000;
  double budget = 60.0;
  bool json = false;

  auto *build = app.add_subcommand("build", "Write an origami in text format");
  build->add_option("which", which, "e2, x, y or z")->required();
  build->add_option("--k", k, "Parameter k for y and z");
  build->add_option("-o,--output", out, "Output file (default stdout)");
  build->add_option("--labels", labels, "Also write the square label table here");

  auto *inspect = app.add_subcommand("inspect", "Print invariants of an origami file");
  inspect->add_option("file", path1)->required();

  auto *iso = app.add_subcommand("iso", "Test two origami files for isomorphism");
  iso->add_option("file1", path1)->required();
  iso->add_option("file2", path2)->required();

  auto *member = app.add_subcommand("member", "Membership of a matrix in the level-6 subgroups");
  member->add_option("--matrix", matrix, "Four integers \"a b c d\", row-major")->required();
  member->add_option("--k", k, "Parameter k")->required();

  auto *veech = app.add_subcommand("veech", "SL(2,Z) orbit and Veech group generators");
  veech->add_option("file", path1)->required();
  veech->add_option("--max-orbit", max_orbit, "Orbit size limit");
  veech->add_option("--budget", budget, "Time limit in seconds");

  auto *spectral = app.add_subcommand("spectral", "Spectral bound table");
  spectral->add_option("--k", ks, "Values of k")->required();

  app.add_subcommand("min-level", "Least N for the distance estimate");

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "group, origami-x, origami-y, origami-z, spectral or all")
      ->required();
  verify->add_option("--k", ks, "Values of k");
  verify->add_option("--budget", budget, "Time limit per orbit in seconds");
  verify->add_flag("--json", json, "JSON report");

  auto *certify = app.add_subcommand("certify", "Containment and spectral certificate for Z_k");
  certify->add_option("--k", k, "Parameter k")->required();
  certify->add_option("--budget", budget, "Time limit for the stabilizer search");
  certify->add_option("--max-orbit", max_orbit, "Orbit size limit for the stabilizer search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*build)
      return cmd_build(which, k, out, labels);
    if (*inspect)
      return cmd_inspect(path1);
    if (*iso)
      return cmd_iso(path1, path2);
    if (*member)
      return cmd_member(matrix, k);
    if (*veech) {
      if (budget < 0)
        throw UsageError("--budget must be non-negative");
      return cmd_veech(path1, max_orbit, budget);
    }
    if (*spectral)
      return cmd_spectral(ks);
    if (app.got_subcommand("min-level"))
      return cmd_min_level();
    if (*verify)
      return cmd_verify(suite, ks, budget, json);
    if (*certify)
      return cmd_certify(k, budget, max_orbit == 1'000'000 ? 5000 : max_orbit);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}
