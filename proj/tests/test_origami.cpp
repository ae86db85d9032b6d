#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "origami/origami.hpp"

using namespace origami;

namespace {

Perm random_perm(std::mt19937_64 &rng, std::size_t n) {
  Perm p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Origami random_origami(std::mt19937_64 &rng, std::size_t n) {
  for (;;) {
    Perm a = random_perm(rng, n), b = random_perm(rng, n);
    if (is_transitive(a, b))
      return Origami(a, b);
  }
}

Origami l_shape() { return Origami::from_cycles(3, {{1, 2}}, {{1, 3}}); }

std::vector<std::uint32_t> orders(const Origami &o) {
  std::vector<std::uint32_t> out;
  for (const auto &v : vertices(o))
    out.push_back(v.order);
  std::sort(out.begin(), out.end());
  return out;
}

bool same(const Origami &l, const Origami &r) { return canonical_form(l) == canonical_form(r); }

} // namespace

TEST_CASE("permutation utilities") {
  Perm p{1, 2, 0, 4, 3};
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(Perm{0, 0}));
  CHECK(compose(p, inverse(p)) == identity_perm(5));
  CHECK(order(p) == 6);
  CHECK(power(p, 6) == identity_perm(5));
  CHECK(power(p, -1) == inverse(p));
  CHECK(cycle_type(p) == std::map<std::uint32_t, std::uint32_t>{{2, 1}, {3, 1}});
  CHECK(cycles(p).size() == 2);
  CHECK(compose(Perm{1, 0, 2}, Perm{0, 2, 1}) == Perm{1, 2, 0});
  CHECK_FALSE(is_transitive(Perm{1, 0, 2}, Perm{1, 0, 2}));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Origami(Perm{0, 0}, Perm{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Origami(Perm{0, 1}, Perm{0}), std::invalid_argument);
  CHECK_THROWS_AS(Origami(Perm{0, 1}, Perm{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Origami(Perm{}, Perm{}), std::invalid_argument);
  CHECK_NOTHROW(Origami(Perm{0}, Perm{0}));
}

TEST_CASE("genus and vertex orders match the oracle") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 300; ++n) {
    Origami o = random_origami(rng, 1 + rng() % 12);
    REQUIRE(orders(o) == oracle::corner_orders(o.a(), o.b()));
    REQUIRE(genus(o) == oracle::euler_genus(o.a(), o.b()));
    std::uint32_t total = 0;
    for (auto z : stratum(o))
      total += z;
    REQUIRE(static_cast<int>(total) == 2 * genus(o) - 2);
  }
}

TEST_CASE("L-shaped origami data") {
  Origami l = l_shape();
  CHECK(genus(l) == 2);
  CHECK(stratum(l) == std::vector<std::uint32_t>{2});
  CHECK(cylinder_count(l, Direction::horizontal) == 2);
  CHECK(cylinder_count(l, Direction::vertical) == 2);
  CHECK(translations(l).elements.size() == 1);
}

TEST_CASE("cylinders") {
  Origami strip(Perm{1, 2, 0}, Perm{0, 1, 2});
  CHECK(cylinders(strip, Direction::horizontal) == std::vector<CylinderClass>{{3, 1}});
  CHECK(cylinders(strip, Direction::vertical) == std::vector<CylinderClass>{{1, 3}});

  std::mt19937_64 rng(2);
  for (int n = 0; n < 100; ++n) {
    Origami o = random_origami(rng, 2 + rng() % 10);
    std::uint32_t area = 0;
    for (auto c : cylinders(o, Direction::horizontal))
      area += c.circumference * c.count;
    CHECK(area == o.size());
    CHECK(cylinder_count(o, Direction::vertical) == cycles(o.b()).size());
  }
}

TEST_CASE("translations of a cyclic torus cover") {
  Origami t(Perm{1, 2, 0}, Perm{0, 1, 2});
  auto g = translations(t);
  CHECK(g.elements.size() == 3);
  CHECK(g.order_profile == std::map<std::uint32_t, std::uint32_t>{{1, 1}, {3, 2}});
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 5; ++n) {
    Origami o = random_origami(rng, 10 + rng() % 30);
    CanonicalForm c = canonical_form(o);
    for (int r = 0; r < 100; ++r)
      REQUIRE(canonical_form(o.relabeled(random_perm(rng, o.size()))) == c);
  }
}

TEST_CASE("canonical form agrees with exhaustive isomorphism test") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 300; ++n) {
    std::size_t size = 1 + rng() % 6;
    Origami p = random_origami(rng, size), q = random_origami(rng, size);
    bool brute = oracle::brute_isomorphic(p.a(), p.b(), q.a(), q.b());
    REQUIRE(same(p, q) == brute);
    REQUIRE(is_isomorphic(p, q).has_value() == brute);
  }
}

TEST_CASE("parallel and serial canonical forms coincide") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 30; ++n) {
    Origami o = random_origami(rng, 1 + rng() % 60);
    REQUIRE(canonical_form(o) == canonical_form_serial(o));
  }
}

TEST_CASE("isomorphisms intertwine the gluings") {
  std::mt19937_64 rng(6);
  Origami o = random_origami(rng, 9);
  Perm pi = random_perm(rng, 9);
  Origami r = o.relabeled(pi);
  auto isos = isomorphisms(o, r);
  REQUIRE_FALSE(isos.empty());
  CHECK(std::find(isos.begin(), isos.end(), pi) != isos.end());
  for (const auto &psi : isos) {
    CHECK(compose(psi, o.a()) == compose(r.a(), psi));
    CHECK(compose(psi, o.b()) == compose(r.b(), psi));
  }
  CHECK(isos.size() == translations(o).elements.size());
}

TEST_CASE("generator actions match the sheared pictures") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 100; ++n) {
    Origami o = random_origami(rng, 1 + rng() % 15);
    auto [ta, tb] = oracle::shear_t(o.a(), o.b());
    Acted t = sl2_action(Generator::T, o);
    REQUIRE(t.origami.a() == ta);
    REQUIRE(t.origami.b() == tb);

    auto [sa, sb] = oracle::rotate_s(o.a(), o.b());
    Acted s = sl2_action(Generator::S, o);
    REQUIRE(s.origami.a() == sa);
    REQUIRE(s.origami.b() == sb);

    Acted t3 = shear(Generator::T, 3, o);
    Acted t3b = sl2_action(Generator::T, sl2_action(Generator::T, t.origami).origami);
    REQUIRE(t3.origami == t3b.origami);
  }
}

TEST_CASE("relations of SL(2,Z) hold on origamis") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 50; ++n) {
    Origami o = random_origami(rng, 1 + rng() % 20);
    Origami s2 = sl2_action(Generator::S, sl2_action(Generator::S, o).origami).origami;
    REQUIRE(same(s2, sl2_action(Generator::minus_identity, o).origami));

    Origami st = o;
    for (int i = 0; i < 3; ++i)
      st = sl2_action(Generator::S, sl2_action(Generator::T, st).origami).origami;
    REQUIRE(same(st, sl2_action(Generator::minus_identity, o).origami));

    Origami s4 = o;
    for (int i = 0; i < 4; ++i)
      s4 = sl2_action(Generator::S, s4).origami;
    REQUIRE(same(s4, o));
  }
}

TEST_CASE("matrix action composes as a left action") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> e(-3, 3);
  auto random_sl2 = [&] {
    Mat2 m = mat::identity();
    for (int i = 0; i < 4; ++i)
      m = m * (i % 2 ? Mat2(1, e(rng), 0, 1) : Mat2(1, 0, e(rng), 1));
    return rng() % 2 ? m : -m;
  };
  for (int n = 0; n < 60; ++n) {
    Origami o = random_origami(rng, 1 + rng() % 12);
    Mat2 m1 = random_sl2(), m2 = random_sl2();
    Origami lhs = matrix_action(m1 * m2, o).origami;
    Origami rhs = matrix_action(m1, matrix_action(m2, o).origami).origami;
    REQUIRE(same(lhs, rhs));
  }
  Origami o = l_shape();
  CHECK(same(matrix_action(mat::T(), o).origami, sl2_action(Generator::T, o).origami));
  CHECK(same(matrix_action(mat::L(), o).origami, sl2_action(Generator::L, o).origami));
  CHECK(same(matrix_action(mat::S(), o).origami, sl2_action(Generator::S, o).origami));
  CHECK_THROWS_AS(matrix_action(Mat2(2, 0, 0, 1), o), std::invalid_argument);
}

TEST_CASE("corner maps carry vertices to vertices of equal order") {
  std::mt19937_64 rng(10);
  for (int n = 0; n < 50; ++n) {
    Origami o = random_origami(rng, 2 + rng() % 12);
    for (Generator g : {Generator::T, Generator::L, Generator::S, Generator::minus_identity}) {
      Acted r = sl2_action(g, o);
      auto vo = vertices(o), vr = vertices(r.origami);
      auto io = vertex_index(o, vo), ir = vertex_index(r.origami, vr);
      for (std::uint32_t s = 0; s < o.size(); ++s) {
        REQUIRE(vo[io[s]].order == vr[ir[r.corner[s]]].order);
        for (std::uint32_t t : vo[io[s]].squares)
          REQUIRE(ir[r.corner[t]] == ir[r.corner[s]]);
      }
    }
  }
}

TEST_CASE("L-shaped origami orbit") {
  Origami l = l_shape();
  CHECK_FALSE(same(sl2_action(Generator::T, l).origami, l));
  VeechOrbit orb = veech_orbit(l);
  CHECK(orb.complete);
  CHECK(orb.orbit_size == 3);
  CHECK(orb.stop_reason.empty());
  for (const auto &g : orb.stabilizer_generators)
    CHECK(veech_contains(g, l));
  CHECK(veech_contains(Mat2(1, 2, 0, 1), l));
  CHECK_FALSE(veech_contains(mat::T(), l));
  CHECK(veech_contains(mat::minus_identity(), l));
  for (std::size_t v = 0; v < orb.orbit_size; ++v)
    CHECK(orb.representatives[v].det() == 1);
}

TEST_CASE("parallel and serial orbits coincide") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 8; ++n) {
    Origami o = random_origami(rng, 3 + rng() % 6);
    VeechOrbit p = veech_orbit(o), s = veech_orbit_serial(o);
    REQUIRE(p.complete);
    REQUIRE(p.orbit_size == s.orbit_size);
    REQUIRE(p.edges == s.edges);
    REQUIRE(p.representatives == s.representatives);
    REQUIRE(p.stabilizer_generators == s.stabilizer_generators);
  }
}

TEST_CASE("orbit limits") {
  std::mt19937_64 rng(12);
  Origami o = random_origami(rng, 12);
  VeechOrbit orb = veech_orbit(o, {.max_orbit = 5, .budget_seconds = 60});
  CHECK_FALSE(orb.complete);
  CHECK_FALSE(orb.stop_reason.empty());
}

TEST_CASE("induced vertex map") {
  Origami l = l_shape();
  Acted m = sl2_action(Generator::minus_identity, l);
  auto iso = is_isomorphic(m.origami, l);
  REQUIRE(iso);
  Perm v = induced_vertex_map(l, m, *iso);
  CHECK(is_permutation(v));
  CHECK(v.size() == vertices(l).size());
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 20; ++n) {
    Origami o = random_origami(rng, 1 + rng() % 20);
    REQUIRE(parse_origami(to_text(o)) == o);
  }
  Origami l = l_shape();
  CHECK(to_text(l) == "origami n=3\na 2 1 3\nb 3 2 1\n");
  CHECK(parse_origami("# comment\norigami n=1\na 1\nb 1\n") == Origami(Perm{0}, Perm{0}));
  CHECK_THROWS(parse_origami("origami n=2\na 1 1\nb 1 2\n"));
  CHECK_THROWS(parse_origami("nonsense"));

  auto path = (std::filesystem::temp_directory_path() / "origami_roundtrip.txt").string();
  write_origami(path, l);
  CHECK(read_origami(path) == l);
  std::filesystem::remove(path);
}

TEST_CASE("coverings") {
  Origami torus(Perm{0}, Perm{0});
  Origami two(Perm{1, 0}, Perm{0, 1});
  Covering c(two, torus, {0, 0});
  CHECK(c.degree() == 2);
  CHECK(rh_check(c));
  CHECK(ram_data(c, vertices(torus)[0]) == RamData{1, 1});

  Origami l = l_shape();
  Covering cl(l, torus, {0, 0, 0});
  CHECK(ram_data(cl, vertices(torus)[0]) == RamData{3});
  CHECK(rh_check(cl));

  Covering comp = compose(cl, Covering(torus, torus, {0}));
  CHECK(comp.degree() == 3);
  CHECK_THROWS_AS(Covering(two, l, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Covering(l, two, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("multiset formatting") {
  CHECK(format_multiset({5, 5, 5, 2, 2, 1}) == "{5^3, 2^2, 1}");
  CHECK(format_multiset({}) == "{}");
  CHECK(format_multiset({1, 2}) == "{2, 1}");
}
