#include "origami/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <json.hpp>

namespace origami {

std::string_view status_name(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skipped_budget: return "skipped-budget";
  }
  return "fail";
}

bool VerificationReport::overall() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const Claim &c) { return c.status != Status::fail; });
}

Suite parse_suite(std::string_view name) {
  if (name == "group") return Suite::group;
  if (name == "origami-x") return Suite::origami_x;
  if (name == "origami-y") return Suite::origami_y;
  if (name == "origami-z") return Suite::origami_z;
  if (name == "spectral") return Suite::spectral;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
  case Suite::group: return "group";
  case Suite::origami_x: return "origami-x";
  case Suite::origami_y: return "origami-y";
  case Suite::origami_z: return "origami-z";
  case Suite::spectral: return "spectral";
  case Suite::all: return "all";
  }
  return "all";
}

namespace {

// Each task yields one or more claims.
struct ClaimFn {
  std::function<std::vector<Claim>()> run;
  template <class F>
  ClaimFn(F f) {
    if constexpr (std::is_same_v<std::invoke_result_t<F>, Claim>)
      run = [f] { return std::vector<Claim>{f()}; };
    else
      run = f;
  }
};

Claim make(std::string id, std::string anchor, bool ok, std::string witness) {
  return {std::move(id), std::move(anchor), ok ? Status::pass : Status::fail, std::move(witness)};
}

std::string kstr(int k) { return "k" + std::to_string(k); }

Claim orbit_claim(std::string id, std::string anchor, const Origami &o, std::size_t expected,
                  double budget) {
  VeechOrbit orbit = veech_orbit(o, {1'000'000, budget});
  if (!orbit.complete) {
    return {std::move(id), std::move(anchor), Status::skipped_budget,
            orbit.stop_reason + " after " + std::to_string(orbit.orbit_size) + " orbit points"};
  }
  return make(std::move(id), std::move(anchor), orbit.orbit_size == expected,
              "orbit size " + std::to_string(orbit.orbit_size));
}

std::vector<Claim> from_report(const std::string &prefix, const std::string &anchor,
                               const CheckReport &r) {
  std::vector<Claim> out;
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    std::ostringstream id;
    id << prefix << '.' << (i < 9 ? "0" : "") << i + 1;
    out.push_back(make(id.str(), anchor + ": " + r.items[i].name, r.items[i].pass, r.items[i].detail));
  }
  return out;
}

// group

FWord random_word(std::mt19937_64 &rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 3);
  constexpr Letter letters[4] = {Letter::x, Letter::y, Letter::x_inv, Letter::y_inv};
  std::size_t len = len_dist(rng);
  FWord w;
  while (w.size() < len) {
    Letter l = letters[letter_dist(rng)];
    if (!w.empty() && w.letters().back() == inverse(l))
      continue;
    w.push_back(l);
  }
  return w;
}

void group_claims(std::vector<ClaimFn> &fns) {
  for (std::size_t g = 0; g < gen_count; ++g) {
    fns.push_back([g] {
      auto rows = verify_generator_rewrites();
      const RewriteRow &r = rows[g];
      std::string name(gen_name(r.generator));
      return make("group.rewrite." + name,
                  "gamma^-1(" + name + ") = " + r.rhs + " as reduced words", r.pass(),
                  "gamma^-1(" + name + ") = " + r.lhs_image +
                      (r.printed_image_match ? "" : " (differs from tabulated x,y image)"));
    });
  }

  fns.push_back([] {
    bool ok = true;
    std::ostringstream os;
    for (std::size_t g = 0; g < gen_count; ++g) {
      Gen gen = static_cast<Gen>(g);
      for (int k = 1; k <= 5; ++k) {
        int m = m_value(gen_word(gen), k);
        int m2 = m2_value(gen_word(gen), k);
        int want_m = ((m_on_generator(gen) % (2 * k)) + 2 * k) % (2 * k);
        int want_m2 = ((m2_on_generator(gen) % (2 * k)) + 2 * k) % (2 * k);
        ok = ok && m == want_m && m2 == want_m2;
      }
      os << gen_name(gen) << ':' << m_on_generator(gen) << '/' << m2_on_generator(gen) << ' ';
    }
    return make("group.generator-values", "m and m2 on the thirteen generators", ok,
                "m/m2 " + os.str());
  });

  fns.push_back([] {
    std::mt19937_64 rng(20240531);
    std::size_t bad = 0;
    for (int n = 0; n < 1000; ++n) {
      FWord w = random_word(rng, 40);
      SignedWord d = decompose_gamma2(eval_word(w));
      if (d.sign != 1 || !(d.word == w))
        ++bad;
    }
    return make("group.round-trip", "word -> matrix -> word on 1000 random words of length <= 40",
                bad == 0, std::to_string(1000 - bad) + "/1000 round trips exact");
  });

  fns.push_back([] {
    const auto &t = coset_rep_table();
    std::size_t ok = 0;
    for (const auto &rep : t)
      ok += equal_mod_pm(rep.matrix, rep.printed_mod6, 6);
    return make("group.coset-reps", "coset representatives A1..A12 reduce to the tabulated matrices mod 6",
                ok == 12, std::to_string(ok) + "/12 match up to sign");
  });

  fns.push_back([] {
    Mat2 b(29, 12, 12, 5);
    bool ok = eval_word(FWord::parse("xyxy")) == b && membership(b, Subgroup::p_gamma6) &&
              membership(b, Subgroup::p_gamma6_2k, 3) &&
              !membership(eval_word(FWord::parse("yxyx")), Subgroup::p_gamma6_2k, 3);
    return make("group.membership", "xyxy = (29 12; 12 5) lies in +-Gamma6(6), yxyx does not", ok,
                "word of (29 12; 12 5): " + decompose_gamma2(b).word.to_string());
  });
}

// origami-x

void x_claims(std::vector<ClaimFn> &fns, double budget) {
  fns.push_back([] {
    LabeledOrigami x = build_X();
    auto st = stratum(x.origami);
    std::size_t regular = 0;
    for (const auto &v : x.vertices)
      regular += v.order == 1;
    bool ok = x.origami.size() == 48 && genus(x.origami) == 13 &&
              st == std::vector<std::uint32_t>(12, 2) && regular == 12;
    return make("x.census", "X: 48 squares, genus 13, stratum H(2^12), 12 regular vertices", ok,
                "genus " + std::to_string(genus(x.origami)) + ", stratum " + format_multiset(st) +
                    ", " + std::to_string(regular) + " regular vertices");
  });
  fns.push_back([] {
    LabeledOrigami x = build_X();
    auto tr = translations(x.origami);
    std::map<std::uint32_t, std::uint32_t> want{{1, 1}, {2, 3}, {3, 8}};
    std::ostringstream os;
    for (auto [o, c] : tr.order_profile)
      os << o << ':' << c << ' ';
    return make("x.translations", "Trans(X) has order 12 with the PSL2(Z/3) order profile",
                tr.elements.size() == 12 && tr.order_profile == want,
                "order " + std::to_string(tr.elements.size()) + ", element orders " + os.str());
  });
  fns.push_back([] {
    LabeledOrigami x = build_X();
    auto h = cylinders(x.origami, Direction::horizontal);
    bool ok = h == std::vector<CylinderClass>{{6, 8}};
    return make("x.cylinders", "X decomposes into eight horizontal cylinders", ok,
                std::to_string(cylinder_count(x.origami, Direction::horizontal)) +
                    " horizontal cylinders");
  });
  fns.push_back([] {
    LabeledOrigami x = build_X(), e2 = build_E2();
    Covering p = covering_p(x, e2);
    RamData over_r = ram_data(p, e2.vertex("R"));
    RamData over_p = ram_data(p, e2.vertex("P"));
    bool ok = p.degree() == 12 && over_r == RamData(12, 1) && over_p == RamData(4, 3) && rh_check(p);
    return make("x.covering-p", "p: X -> E[2] has degree 12 and is unramified over R", ok,
                "over R " + format_multiset(over_r) + ", over P " + format_multiset(over_p));
  });
  fns.push_back([budget] {
    return orbit_claim("x.veech", "Veech group of X is SL2(Z) (orbit size 1)", build_X().origami, 1,
                       budget);
  });
}

std::vector<Claim> x_action_claims() {
  return from_report("x.affine", "affine action on the vertices of X", verify_affine_x());
}

// origami-y

void y_claims(std::vector<ClaimFn> &fns, const std::vector<int> &ks, double budget) {
  for (int k : ks) {
    fns.push_back([k] {
      YBuild yb = build_Y(k);
      int g = genus(yb.y.origami);
      return make("y." + kstr(k) + ".genus", "Y(k) is connected of genus 24k+1", g == 24 * k + 1,
                  std::to_string(yb.y.origami.size()) + " squares, genus " + std::to_string(g));
    });
    fns.push_back([k] {
      YBuild yb = build_Y(k);
      LabeledOrigami x = build_X();
      bool unramified = true;
      for (const auto &v : x.vertices)
        unramified = unramified && ram_data(yb.q, v) == RamData(static_cast<std::size_t>(2 * k), 1);
      // Deck group: translations of Y commuting with q, i.e. preserving fibres.
      std::size_t deck = 0;
      std::uint32_t max_order = 0;
      for (const auto &t : translations(yb.y.origami).elements) {
        bool fibre = true;
        for (std::size_t s = 0; s < t.size() && fibre; ++s)
          fibre = yb.q.phi[t[s]] == yb.q.phi[s];
        if (fibre) {
          ++deck;
          max_order = std::max(max_order, order(t));
        }
      }
      bool ok = yb.q.degree() == static_cast<std::size_t>(2 * k) && unramified &&
                deck == static_cast<std::size_t>(2 * k) &&
                max_order == static_cast<std::uint32_t>(2 * k) && rh_check(yb.q);
      return make("y." + kstr(k) + ".covering-q",
                  "q: Y -> X is unramified of degree 2k with cyclic deck group Z/2k", ok,
                  "degree " + std::to_string(yb.q.degree()) + ", deck group order " +
                      std::to_string(deck) + " with an element of order " + std::to_string(max_order));
    });
    fns.push_back([k] {
      YBuild yb = build_Y(k);
      std::size_t o1 = 0, o3 = 0;
      for (const auto &v : yb.y.vertices) {
        o1 += v.order == 1;
        o3 += v.order == 3;
      }
      bool ok = o1 == static_cast<std::size_t>(24 * k) && o3 == static_cast<std::size_t>(24 * k);
      return make("y." + kstr(k) + ".vertices", "Y(k) has 12*2k regular and 12*2k cone-angle-6pi vertices",
                  ok, std::to_string(o1) + " regular, " + std::to_string(o3) + " of order 3");
    });
  }
  fns.push_back([budget] {
    return orbit_claim("y.k1.veech", "Veech group of Y(1) is SL2(Z) (orbit size 1)",
                       build_Y(1).y.origami, 1, budget);
  });
}

std::vector<Claim> y_action_claims(const std::vector<int> &ks) {
  std::vector<Claim> out;
  for (int k : ks) {
    auto part = from_report("y." + kstr(k) + ".affine",
                            "lifts of T^2, L^2, -I act on the vertices of Y(k) as tabulated",
                            verify_affine_y(k));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// origami-z

void z_claims(std::vector<ClaimFn> &fns, const std::vector<int> &ks) {
  for (int k : ks) {
    fns.push_back([k] {
      ZBuild zb = build_Z(k);
      int g = genus(zb.z.origami);
      bool ok = zb.z.origami.size() == static_cast<std::size_t>(192 * k) && g == 48 * k + 3;
      return make("z." + kstr(k) + ".genus", "Z_k has 192k squares and genus 48k+3", ok,
                  std::to_string(zb.z.origami.size()) + " squares, genus " + std::to_string(g));
    });
    fns.push_back([k] {
      ZBuild zb = build_Z(k);
      std::size_t ramified = 0;
      bool index_two = true;
      for (const auto &v : vertices(zb.r.target)) {
        RamData rd = ram_data(zb.r, v);
        if (rd.size() == 1) {
          ++ramified;
          index_two = index_two && rd.front() == 2;
        }
      }
      return make("z." + kstr(k) + ".r-branching",
                  "r: Z -> Y is ramified over exactly four points, each of index 2",
                  ramified == 4 && index_two, std::to_string(ramified) + " ramified vertices");
    });
    fns.push_back([k] {
      RamificationCertificate c = ramification_check(k);
      std::ostringstream os;
      os << "A=" << c.distinct_over_base << " B=" << c.distinguished_over_x << " C=" << c.distinguished_p_copy
         << " D=" << c.distinguished_r_vertex << "; rm(P)=" << format_multiset(c.rm_p)
         << " rm(Q)=" << format_multiset(c.rm_q) << " rm(R)=" << format_multiset(c.rm_r)
         << " rm(S)=" << format_multiset(c.rm_s) << "; ramified copy of P_1: "
         << c.ramified_p_copy + 1;
      return make("z." + kstr(k) + ".containment",
                  "the four ramification conditions hold, so Veech(Z_k) lies in +-Gamma6(2k)",
                  c.conclusion() && c.expected_multisets && c.riemann_hurwitz, os.str());
    });
  }
}

std::vector<Claim> z_reference_claims() {
  return from_report("z.reference", "constructed Z_3 agrees with the published permutations",
                     verify_z3_reference());
}

// spectral

void spectral_claims(std::vector<ClaimFn> &fns, const std::vector<int> &ks) {
  for (int k : ks) {
    fns.push_back([k] {
      SpectralBound s = bounds_for_k(k);
      std::ostringstream os;
      os.precision(6);
      os << "lambda <= " << std::fixed << s.lambda_bound;
      if (s.gap_bound)
        os << ", gap <= " << *s.gap_bound << " < " << s.gap_chain_sqrt3;
      bool buser = std::abs(s.lambda_from_h - s.lambda_bound) <= 1e-12 * s.lambda_bound;
      if (k >= 3) {
        bool ok = buser && s.complementary_series_certified &&
                  s.lambda_bound < 1.0 / (2.0 * k) && s.gap_bound && *s.gap_bound < s.gap_chain_sqrt3;
        return make("spectral." + kstr(k) + ".bound",
                    "lambda bound < 1/(2k) < 1/4 and gap bound < sqrt(3)/k", ok, os.str());
      }
      return make("spectral." + kstr(k) + ".bound",
                  "for k < 3 the printed bound does not certify complementary series",
                  buser && !s.complementary_series_certified, os.str() + " (not certified)");
    });
  }
  fns.push_back([] {
    SpectralBound s = bounds_for_k(3);
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << "lambda(3) <= " << s.lambda_bound;
    bool ok = std::abs(s.lambda_bound - 0.163556) < 1e-4 && s.noncongruence_certified &&
              s.complementary_series_certified && s.lambda_bound < 3.0 / 16.0;
    return make("spectral.lambda-k3", "lambda bound at k=3 is 0.163556 < 1/6 < 3/16", ok, os.str());
  });
  fns.push_back([] {
    MinLevelResult r = min_level_checked();
    std::ostringstream os;
    os << "least N = " << r.n << ", predicate false at " << r.n - 1;
    if (r.stays_true) {
      os << ", true for the next 100 values";
    } else {
      os << ", false again at";
      for (int n : r.exceptions)
        os << ' ' << n;
    }
    return make("spectral.min-n", "least N with the distance estimate is 170",
                r.n == 170 && !distance_estimate_holds(169), os.str());
  });
  fns.push_back([] {
    double kt = distance_constant();
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << "K~ = " << kt << ", t(170) = " << separation_length(170);
    return make("spectral.constants", "K~ = 10.9822 and t(170) = arccosh(14113)",
                std::abs(kt - 10.9822) < 1e-3 && std::abs(separation_length(170) - arccosh(14113.0)) < 1e-12,
                os.str());
  });
  fns.push_back([] {
    AreaReport a = area_check();
    return make("spectral.area", "area of H/PGamma6 is 24 pi and of H/PGamma2 is 2 pi", a.pass(),
                "index 72 = 6 * 12");
  });
  fns.push_back([] {
    double l = geodesic_length(Mat2(29, 12, 12, 5));
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << "length " << l;
    return make("spectral.geodesic", "the curve xyxy has length 2 arccosh(17)",
                std::abs(l - 2.0 * arccosh(17.0)) < 1e-12 && std::abs(l - 7.050993) < 1e-5, os.str());
  });
}

bool wants(Suite asked, Suite s) { return asked == Suite::all || asked == s; }

} // namespace

VerificationReport run_suite(Suite suite, const std::vector<int> &k_list, double budget_seconds) {
  std::vector<int> ks = k_list;
  if (ks.empty())
    ks = suite == Suite::spectral ? std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10}
                                  : std::vector<int>{1, 2, 3, 4};
  if (!(budget_seconds > 0))
    throw std::invalid_argument("run_suite: budget must be positive");
  for (int k : ks)
    if (k < 1)
      throw std::invalid_argument("run_suite: k must be positive");

  std::vector<ClaimFn> fns;
  if (wants(suite, Suite::group))
    group_claims(fns);
  if (wants(suite, Suite::origami_x)) {
    x_claims(fns, budget_seconds);
    fns.push_back(x_action_claims);
  }
  if (wants(suite, Suite::origami_y)) {
    y_claims(fns, ks, budget_seconds);
    fns.push_back([ks] { return y_action_claims(ks); });
  }
  if (wants(suite, Suite::origami_z)) {
    z_claims(fns, ks);
    fns.push_back(z_reference_claims);
  }
  if (wants(suite, Suite::spectral))
    spectral_claims(fns, ks);

  std::vector<std::vector<Claim>> results(fns.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(fns.size()); ++i) {
    try {
      results[i] = fns[i].run();
    } catch (const std::exception &e) {
      results[i] = {{"error." + std::to_string(i), "claim raised an exception", Status::fail, e.what()}};
    }
  }

  std::vector<Claim> out;
  for (auto &part : results)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(), [](const Claim &a, const Claim &b) { return a.id < b.id; });
  return {std::string(suite_name(suite)), std::move(out)};
}

std::string to_text(const VerificationReport &r) {
  std::ostringstream os;
  os << "suite " << r.suite << '\n';
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto &c : r.claims) {
    os << '[' << status_name(c.status) << "] " << c.id << " - " << c.anchor;
    if (!c.witness.empty())
      os << " (" << c.witness << ')';
    os << '\n';
    pass += c.status == Status::pass;
    fail += c.status == Status::fail;
    skipped += c.status == Status::skipped_budget;
  }
  os << "overall " << (r.overall() ? "pass" : "fail") << ": " << pass << " pass, " << fail
     << " fail, " << skipped << " skipped\n";
  return os.str();
}

std::string to_json(const VerificationReport &r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["claims"] = nlohmann::json::array();
  for (const auto &c : r.claims) {
    j["claims"].push_back({{"id", c.id},
                           {"anchor", c.anchor},
                           {"status", std::string(status_name(c.status))},
                           {"witness", c.witness}});
  }
  j["overall"] = r.overall() ? "pass" : "fail";
  return j.dump(2);
}

ZCertificate certify_z(int k, double budget_seconds, std::size_t max_orbit) {
  if (k < 1)
    throw std::invalid_argument("certify_z: k must be positive");
  ZCertificate t;
  t.k = k;
  t.ramification = ramification_check(k);
  t.bounds = bounds_for_k(k);

  ZBuild zb = build_Z(k);
  VeechOrbit orbit = veech_orbit(zb.z.origami, {max_orbit, budget_seconds});
  t.orbit_points = orbit.orbit_size;
  t.orbit_complete = orbit.complete;

  std::vector<Mat2> samples = orbit.stabilizer_generators;
  // A few products as well, to exercise more than the generating set.
  for (std::size_t i = 0; i + 1 < orbit.stabilizer_generators.size() && i < 8; ++i)
    samples.push_back(orbit.stabilizer_generators[i] * orbit.stabilizer_generators[i + 1]);
  t.stabilizer_samples = samples.size();
  for (const auto &m : samples)
    t.samples_in_group += membership(m, Subgroup::p_gamma6_2k, k);

  bool spectral_ok = t.bounds.complementary_series_certified && t.bounds.gap_bound &&
                     *t.bounds.gap_bound < t.bounds.gap_chain_sqrt3;
  bool containment = t.ramification.conclusion() && t.ramification.expected_multisets &&
                     t.ramification.riemann_hurwitz;
  bool samples_ok = t.samples_in_group == t.stabilizer_samples;
  t.certified = k >= 3 && spectral_ok && containment && samples_ok;

  std::ostringstream os;
  if (k < 3)
    os << "k < 3: the lambda bound " << t.bounds.lambda_bound << " does not certify complementary series";
  else if (!spectral_ok)
    os << "spectral bound not certified";
  else if (!containment)
    os << "ramification criterion failed";
  else if (!samples_ok)
    os << "a stabilizer sample lies outside +-Gamma6(2k)";
  else
    os << "certified";
  t.note = os.str();
  return t;
}

} // namespace origami
