#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace origami {

using BigInt = boost::multiprecision::cpp_int;

/// Integer 2x2 matrix (a b; c d). Elements of SL(2,Z) are the ones with det 1.
struct Mat2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  Mat2() = default;
  Mat2(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  // Throws std::invalid_argument unless det = 1.
  static Mat2 sl2(BigInt a, BigInt b, BigInt c, BigInt d);

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }

  // Inverse of an SL(2,Z) element.
  Mat2 inverse() const { return Mat2(d, -b, -c, a); }
  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }

  // Entries reduced into [0, m).
  Mat2 mod(long m) const;

  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  std::string to_string() const;

  friend Mat2 operator*(const Mat2 &l, const Mat2 &r);
  friend bool operator==(const Mat2 &l, const Mat2 &r) = default;
};

namespace mat {
Mat2 identity();
Mat2 minus_identity();
Mat2 T(); // (1 1; 0 1)
Mat2 L(); // (1 0; 1 1)
Mat2 S(); // (0 -1; 1 0)
Mat2 x(); // (1 2; 0 1)
Mat2 y(); // (1 0; 2 1)
} // namespace mat

// Letters of the free group on x, y.
enum class Letter : std::int8_t { x = 1, y = 2, x_inv = -1, y_inv = -2 };

inline Letter inverse(Letter l) { return static_cast<Letter>(-static_cast<int>(l)); }

/// Freely reduced word over {x, x^-1, y, y^-1}.
class FWord {
public:
  FWord() = default;
  FWord(std::initializer_list<Letter> letters);
  explicit FWord(const std::vector<Letter> &letters);

  // Accepts letters x, y, X (= x^-1), Y (= y^-1), optional exponents "^n"
  // (n may be negative) and ignores whitespace. "1" is the empty word.
  static FWord parse(std::string_view text);

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FWord inverse() const;
  FWord pow(int e) const;

  // Compact form with exponents, e.g. "x^-1y^2x^-1y^2"; empty word is "1".
  std::string to_string() const;

  friend FWord operator*(const FWord &l, const FWord &r);
  friend bool operator==(const FWord &l, const FWord &r) = default;

  void push_back(Letter l);

private:
  std::vector<Letter> letters_;
};

Mat2 eval_word(const FWord &w);

struct SignedWord {
  int sign = 1;
  FWord word;
};

// For M with +-M in Gamma(2): the unique reduced w and sign with eval(w) = sign * M.
// Throws std::invalid_argument on det != 1 or wrong parity pattern.
SignedWord decompose_gamma2(const Mat2 &m);

// gamma: x -> y, y -> x^-1 y and its inverse x -> x y^-1, y -> x.
FWord gamma_auto(const FWord &w);
FWord gamma_inv(const FWord &w);

/// The thirteen named generators of the level-6 subgroup.
enum class Gen : std::uint8_t { A, B, C, D, E, F, G, L1, L2, L3, L4, L5, L6 };
inline constexpr std::size_t gen_count = 13;

std::string_view gen_name(Gen g);
FWord gen_word(Gen g);

struct GenLetter {
  Gen gen;
  bool inv = false;
  friend bool operator==(const GenLetter &, const GenLetter &) = default;
};

/// Freely reduced word over the thirteen generators.
class GenWord {
public:
  GenWord() = default;
  explicit GenWord(const std::vector<GenLetter> &letters);

  // Whitespace separated tokens such as "L1 A^-1 L3"; "A^-1" or "A-" for inverses.
  // Tokens may also be written without spaces when unambiguous ("AA^-1").
  static GenWord parse(std::string_view text);

  const std::vector<GenLetter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::string to_string() const;
  void push_back(GenLetter l);

  friend bool operator==(const GenWord &, const GenWord &) = default;

private:
  std::vector<GenLetter> letters_;
};

FWord gen_to_xy(const GenWord &w);

// Values of m and m2 on the generators.
int m_on_generator(Gen g);
int m2_on_generator(Gen g);

struct RewriteRow {
  Gen generator;
  std::string lhs_image;  // gamma^-1 of the generator, as an x,y word
  std::string rhs;        // rewriting in generators
  bool words_match = false;
  bool printed_image_match = false;
  bool value_bridge = false; // m(gamma^-1 X) = -m2(X) on the generator
  bool pass() const { return words_match && printed_image_match && value_bridge; }
};

// Checks the thirteen rewriting identities gamma^-1(X) = word in generators.
std::vector<RewriteRow> verify_generator_rewrites();

/// Point of the coset space: i in 1..12, drift j in 0..2k-1.
struct CosetPoint {
  int i = 1;
  int j = 0;
  friend bool operator==(const CosetPoint &, const CosetPoint &) = default;
};

CosetPoint coset_action(Letter g, CosetPoint p, int k);
CosetPoint apply_word_to_coset(const FWord &w, CosetPoint p, int k);

// Throws std::invalid_argument if w is not in the level-6 subgroup.
int m2_value(const FWord &w, int k);
int m_value(const FWord &w, int k);

enum class Subgroup {
  gamma_n,      // M = I mod N
  pm_gamma_n,   // M = +-I mod N
  p_gamma2,     // +-M in Gamma(2)
  p_gamma6,     // +-M in Gamma(6)
  p_gamma6_2k,  // kernel of m on PGamma(6), lifted with +-
  g6_2k,        // kernel of m2 on PGamma(6), lifted with +-
};

// param is N for the two gamma_n variants and k for the 2k-variants.
bool membership(const Mat2 &m, Subgroup group, int param = 0);

struct CosetRep {
  FWord word;
  Mat2 matrix;
  Mat2 printed_mod6; // the tabulated mod-6 reduction
};

const std::array<CosetRep, 12> &coset_rep_table();

// Index i (1..12) of the coset containing +-M, for M in +-Gamma(2).
int coset_index_mod6(const Mat2 &m);

// Equality modulo n up to sign.
bool equal_mod_pm(const Mat2 &l, const Mat2 &r, long n);

} // namespace origami
