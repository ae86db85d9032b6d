#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "origami/group_words.hpp"

using namespace origami;

namespace {

Mat2 from(const oracle::M &m) { return Mat2(m[0], m[1], m[2], m[3]); }

FWord random_word(std::mt19937_64 &rng, std::size_t max_len) {
  constexpr Letter letters[4] = {Letter::x, Letter::y, Letter::x_inv, Letter::y_inv};
  std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  FWord w;
  while (w.size() < len) {
    Letter l = letters[std::uniform_int_distribution<int>(0, 3)(rng)];
    if (w.empty() || w.letters().back() != inverse(l))
      w.push_back(l);
  }
  return w;
}

FWord random_gen_product(std::mt19937_64 &rng, int len) {
  FWord w;
  for (int i = 0; i < len; ++i) {
    Gen g = static_cast<Gen>(std::uniform_int_distribution<int>(0, 12)(rng));
    FWord f = gen_word(g);
    w = w * (rng() % 2 ? f.inverse() : f);
  }
  return w;
}

} // namespace

TEST_CASE("eval_word on generators and products") {
  CHECK(eval_word(FWord::parse("x")) == Mat2(1, 2, 0, 1));
  CHECK(eval_word(FWord{}) == mat::identity());
  CHECK(eval_word(FWord::parse("xyxy")) == from(oracle::eval("xyxy")));
  CHECK(eval_word(FWord::parse("xyxy")) == Mat2(29, 12, 12, 5));
  CHECK(eval_word(FWord::parse("x^-2 y^3 X")) == from(oracle::eval("XXyyyX")));
}

TEST_CASE("word parsing and printing") {
  CHECK(FWord::parse("x x^-1").empty());
  CHECK(FWord::parse("1").empty());
  CHECK(FWord::parse("yxy^-2x").to_string() == "yxy^-2x");
  CHECK(FWord::parse("XYxy").size() == 4);
  CHECK_THROWS_AS(FWord::parse("xz"), std::invalid_argument);
  CHECK_THROWS_AS(FWord::parse("x^"), std::invalid_argument);
}

TEST_CASE("words stay freely reduced") {
  FWord w = FWord::parse("xy") * FWord::parse("y^-1x^-1");
  CHECK(w.empty());
  FWord v{Letter::x, Letter::y, Letter::y_inv, Letter::x};
  CHECK(v.to_string() == "x^2");
}

TEST_CASE("decompose_gamma2 examples") {
  auto d = decompose_gamma2(Mat2(1, 2, 0, 1));
  CHECK(d.sign == 1);
  CHECK(d.word.to_string() == "x");

  d = decompose_gamma2(mat::minus_identity());
  CHECK(d.sign == -1);
  CHECK(d.word.empty());

  d = decompose_gamma2(Mat2(29, 12, 12, 5));
  CHECK(d.sign == 1);
  CHECK(d.word.to_string() == "xyxy");

  d = decompose_gamma2(-Mat2(29, 12, 12, 5));
  CHECK(d.sign == -1);
  CHECK(d.word.to_string() == "xyxy");
}

TEST_CASE("decompose_gamma2 rejects bad input") {
  CHECK_THROWS_AS(decompose_gamma2(Mat2(2, 0, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(decompose_gamma2(mat::T()), std::invalid_argument);
  CHECK_THROWS_AS(decompose_gamma2(Mat2(0, -1, 1, 0)), std::invalid_argument);
}

TEST_CASE("round trip on random words up to length 40") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 1000; ++n) {
    FWord w = random_word(rng, 40);
    SignedWord d = decompose_gamma2(eval_word(w));
    REQUIRE(d.sign == 1);
    REQUIRE(d.word == w);
  }
}

TEST_CASE("entries of long words exceed 64 bits") {
  FWord w = FWord::parse("xy").pow(40);
  Mat2 m = eval_word(w);
  CHECK(m.a > BigInt(std::numeric_limits<long long>::max()));
  CHECK(m.det() == 1);
  CHECK(decompose_gamma2(m).word == w);
}

TEST_CASE("gamma and its inverse") {
  CHECK(gamma_auto(FWord::parse("x")).to_string() == "y");
  CHECK(gamma_auto(FWord::parse("y")) == FWord::parse("x^-1y"));
  CHECK(gamma_auto(FWord::parse("yxyx")) == FWord::parse("x^-1y^2x^-1y^2"));
  CHECK(gamma_inv(FWord::parse("x")) == FWord::parse("xy^-1"));
  CHECK(gamma_inv(FWord::parse("y")) == FWord::parse("x"));

  std::mt19937_64 rng(11);
  for (int n = 0; n < 1000; ++n) {
    FWord u = random_word(rng, 30), v = random_word(rng, 30);
    REQUIRE(gamma_inv(gamma_auto(u)) == u);
    REQUIRE(gamma_auto(gamma_inv(u)) == u);
    REQUIRE(gamma_auto(u * v) == gamma_auto(u) * gamma_auto(v));
  }
}

TEST_CASE("generator words") {
  CHECK(gen_to_xy(GenWord::parse("A")).to_string() == "yxyx");
  CHECK(gen_to_xy(GenWord::parse("L1")).to_string() == "x^3");
  CHECK(gen_to_xy(GenWord::parse("AA^-1")).empty());
  CHECK(GenWord::parse("L1 A^-1 L3").to_string() == "L1 A^-1 L3");
  CHECK_THROWS_AS(GenWord::parse("L7"), std::invalid_argument);
}

TEST_CASE("generators lie in the level-6 subgroup") {
  for (std::size_t g = 0; g < gen_count; ++g) {
    Mat2 m = eval_word(gen_word(static_cast<Gen>(g)));
    CHECK(membership(m, Subgroup::p_gamma6));
  }
}

TEST_CASE("rewriting identities") {
  auto rows = verify_generator_rewrites();
  REQUIRE(rows.size() == 13);
  for (const auto &r : rows) {
    INFO(gen_name(r.generator));
    CHECK(r.words_match);
    CHECK(r.printed_image_match);
    CHECK(r.value_bridge);
  }
  CHECK(rows[0].lhs_image == "x^2y^-1x^2y^-1");
  CHECK(rows[static_cast<int>(Gen::L5)].lhs_image == "x^-3");
}

TEST_CASE("coset action follows the tabulated cycles") {
  CHECK(coset_action(Letter::x, {4, 0}, 3) == CosetPoint{8, 1});
  CHECK(coset_action(Letter::y, {1, 0}, 3) == CosetPoint{6, 0});
  CHECK(apply_word_to_coset(FWord::parse("x^3"), {1, 0}, 3) == CosetPoint{1, 0});
  CHECK(apply_word_to_coset(FWord{}, {7, 2}, 3) == CosetPoint{7, 2});

  // (4,j) -> (8,j+1) -> (5,j+1) -> (4,j)
  CHECK(coset_action(Letter::x, {8, 1}, 3) == CosetPoint{5, 1});
  CHECK(coset_action(Letter::x, {5, 1}, 3) == CosetPoint{4, 0});
  // (4,j) -> (7,j+1) -> (12,j) -> (4,j)
  CHECK(coset_action(Letter::y, {4, 5}, 3) == CosetPoint{7, 0});
  CHECK(coset_action(Letter::y, {7, 0}, 3) == CosetPoint{12, 5});

  for (int k = 1; k <= 4; ++k)
    for (int i = 1; i <= 12; ++i)
      for (int j = 0; j < 2 * k; ++j)
        for (Letter l : {Letter::x, Letter::y})
          REQUIRE(coset_action(inverse(l), coset_action(l, {i, j}, k), k) == CosetPoint{i, j});
}

TEST_CASE("A traces to its m2 value") {
  CosetPoint p = apply_word_to_coset(FWord::parse("yxyx"), {1, 0}, 3);
  CHECK(p.i == 1);
  CHECK(p.j == m2_value(FWord::parse("yxyx"), 3));
  CHECK(p.j == 1);
}

TEST_CASE("right action, transitivity and orbit size") {
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n < 200; ++n) {
      FWord u = random_word(rng, 12), v = random_word(rng, 12);
      CosetPoint p{1 + static_cast<int>(rng() % 12), static_cast<int>(rng() % (2 * k))};
      REQUIRE(apply_word_to_coset(u * v, p, k) ==
              apply_word_to_coset(v, apply_word_to_coset(u, p, k), k));
    }

    std::vector<CosetPoint> orbit{{1, 0}};
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (Letter l : {Letter::x, Letter::y, Letter::x_inv, Letter::y_inv}) {
        CosetPoint q = coset_action(l, orbit[h], k);
        if (std::find(orbit.begin(), orbit.end(), q) == orbit.end())
          orbit.push_back(q);
      }
    CHECK(orbit.size() == static_cast<std::size_t>(24 * k));
  }
}

TEST_CASE("forgetting the drift gives the mod-6 coset action") {
  std::mt19937_64 rng(9);
  const auto &reps = coset_rep_table();
  for (int n = 0; n < 300; ++n) {
    FWord w = random_word(rng, 15);
    for (int i = 1; i <= 12; ++i) {
      int expected = coset_index_mod6(reps[i - 1].matrix * eval_word(w));
      REQUIRE(apply_word_to_coset(w, {i, 0}, 2).i == expected);
    }
  }
}

TEST_CASE("m and m2 on generators") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(m_value(FWord::parse("yxyx"), k) == 1 % (2 * k));
    CHECK(m_value(FWord::parse("xyxy"), k) == 0);
    CHECK(m2_value(FWord::parse("yxyx"), k) == 1 % (2 * k));
    CHECK(m2_value(FWord::parse("xyxy"), k) == 2 * k - 1);
  }
  CHECK_THROWS_AS(m_value(FWord::parse("x"), 3), std::invalid_argument);
}

TEST_CASE("m and m2 are homomorphisms") {
  std::mt19937_64 rng(13);
  for (int k = 1; k <= 4; ++k) {
    for (int n = 0; n < 200; ++n) {
      FWord u = random_gen_product(rng, 3), v = random_gen_product(rng, 3);
      REQUIRE(m_value(u * v, k) == (m_value(u, k) + m_value(v, k)) % (2 * k));
      REQUIRE(m2_value(u * v, k) == (m2_value(u, k) + m2_value(v, k)) % (2 * k));
    }
  }
}

TEST_CASE("the stabilizer of the base coset has trivial m2") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 2000; ++n) {
    FWord w = random_word(rng, 14);
    if (apply_word_to_coset(w, {1, 0}, 3) == CosetPoint{1, 0})
      REQUIRE(m2_value(w, 3) == 0);
  }
}

TEST_CASE("membership") {
  Mat2 b(29, 12, 12, 5);
  CHECK(membership(b, Subgroup::p_gamma6));
  CHECK(b.mod(6) == Mat2(5, 0, 0, 5));
  CHECK(membership(b, Subgroup::p_gamma6_2k, 3));
  CHECK_FALSE(membership(eval_word(FWord::parse("yxyx")), Subgroup::p_gamma6_2k, 3));
  CHECK(membership(eval_word(FWord::parse("yxyx")), Subgroup::g6_2k, 1) == false);
  CHECK(membership(mat::identity(), Subgroup::gamma_n, 7));
  CHECK(membership(mat::minus_identity(), Subgroup::pm_gamma_n, 7));
  CHECK_FALSE(membership(mat::minus_identity(), Subgroup::gamma_n, 7));
  CHECK_FALSE(membership(mat::T(), Subgroup::p_gamma2));
  CHECK_THROWS_AS(membership(Mat2(2, 0, 0, 2), Subgroup::p_gamma2), std::invalid_argument);

  // gamma maps the kernel of m onto the kernel of m2.
  std::mt19937_64 rng(19);
  for (int n = 0; n < 200; ++n) {
    FWord w = random_gen_product(rng, 4);
    bool in_m = membership(eval_word(w), Subgroup::p_gamma6_2k, 3);
    REQUIRE(in_m == membership(eval_word(gamma_auto(w)), Subgroup::g6_2k, 3));
  }
}

TEST_CASE("coset representatives") {
  const auto &t = coset_rep_table();
  CHECK(t[0].matrix == mat::identity());
  CHECK(t[1].matrix.mod(6) == Mat2(1, 2, 0, 1));
  CHECK(t[3].matrix.mod(6) == Mat2(1, 2, 4, 3));
  for (const auto &r : t)
    CHECK(equal_mod_pm(r.matrix, r.printed_mod6, 6));
  for (int i = 0; i < 12; ++i)
    CHECK(coset_index_mod6(t[i].matrix) == i + 1);
}
