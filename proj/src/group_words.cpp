#include "origami/group_words.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace origami {

namespace {

BigInt floor_mod(const BigInt &v, long m) {
  BigInt r = v % m;
  if (r < 0)
    r += m;
  return r;
}

// Nearest integer to num / den, den != 0.
BigInt round_div(const BigInt &num, const BigInt &den) {
  BigInt n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  BigInt two_n = 2 * n + d;
  BigInt q = two_n / (2 * d);
  if (two_n % (2 * d) != 0 && two_n < 0)
    q -= 1;
  return q;
}

} // namespace

Mat2 Mat2::sl2(BigInt a, BigInt b, BigInt c, BigInt d) {
  Mat2 m(std::move(a), std::move(b), std::move(c), std::move(d));
  if (m.det() != 1)
    throw std::invalid_argument("matrix " + m.to_string() + " has determinant " +
                                m.det().str() + ", expected 1");
  return m;
}

Mat2 Mat2::mod(long m) const {
  return Mat2(floor_mod(a, m), floor_mod(b, m), floor_mod(c, m), floor_mod(d, m));
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << '(' << a << ' ' << b << "; " << c << ' ' << d << ')';
  return os.str();
}

Mat2 operator*(const Mat2 &l, const Mat2 &r) {
  return Mat2(l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
              l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d);
}

namespace mat {
Mat2 identity() { return Mat2(1, 0, 0, 1); }
Mat2 minus_identity() { return Mat2(-1, 0, 0, -1); }
Mat2 T() { return Mat2(1, 1, 0, 1); }
Mat2 L() { return Mat2(1, 0, 1, 1); }
Mat2 S() { return Mat2(0, -1, 1, 0); }
Mat2 x() { return Mat2(1, 2, 0, 1); }
Mat2 y() { return Mat2(1, 0, 2, 1); }
} // namespace mat

// FWord

FWord::FWord(std::initializer_list<Letter> letters) {
  for (Letter l : letters)
    push_back(l);
}

FWord::FWord(const std::vector<Letter> &letters) {
  for (Letter l : letters)
    push_back(l);
}

void FWord::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == origami::inverse(l))
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FWord FWord::parse(std::string_view text) {
  FWord w;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (text.substr(pos) == "1")
    return w;

  while (skip_ws(), pos < text.size()) {
    char ch = text[pos++];
    Letter base;
    switch (ch) {
    case 'x': base = Letter::x; break;
    case 'y': base = Letter::y; break;
    case 'X': base = Letter::x_inv; break;
    case 'Y': base = Letter::y_inv; break;
    default:
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                  "' in word \"" + std::string(text) + "\"");
    }

    long e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("missing exponent in word \"" + std::string(text) + "\"");
      e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        e = 10 * e + (text[pos++] - '0');
      if (neg)
        e = -e;
    }

    Letter l = e < 0 ? origami::inverse(base) : base;
    for (long n = 0; n < (e < 0 ? -e : e); ++n)
      w.push_back(l);
  }
  return w;
}

FWord FWord::inverse() const {
  FWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back(origami::inverse(*it));
  return r;
}

FWord FWord::pow(int e) const {
  FWord base = e < 0 ? inverse() : *this;
  FWord r;
  for (int n = 0; n < (e < 0 ? -e : e); ++n)
    r = r * base;
  return r;
}

std::string FWord::to_string() const {
  if (letters_.empty())
    return "1";

  std::ostringstream os;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i])
      ++j;
    long run = static_cast<long>(j - i);
    int v = static_cast<int>(letters_[i]);
    os << (v == 1 || v == -1 ? 'x' : 'y');
    long e = v < 0 ? -run : run;
    if (e != 1)
      os << '^' << e;
    i = j;
  }
  return os.str();
}

FWord operator*(const FWord &l, const FWord &r) {
  FWord w = l;
  for (Letter c : r.letters())
    w.push_back(c);
  return w;
}

Mat2 eval_word(const FWord &w) {
  static const Mat2 gx = mat::x(), gy = mat::y();
  static const Mat2 gxi = gx.inverse(), gyi = gy.inverse();

  Mat2 m = mat::identity();
  for (Letter l : w.letters()) {
    switch (l) {
    case Letter::x: m = m * gx; break;
    case Letter::y: m = m * gy; break;
    case Letter::x_inv: m = m * gxi; break;
    case Letter::y_inv: m = m * gyi; break;
    }
  }
  return m;
}

SignedWord decompose_gamma2(const Mat2 &m) {
  if (m.det() != 1)
    throw std::invalid_argument("decompose_gamma2: determinant of " + m.to_string() + " is not 1");

  auto odd = [](const BigInt &v) { return (v & 1) != 0; };
  if (odd(m.b) || odd(m.c) || !odd(m.a) || !odd(m.d))
    throw std::invalid_argument("decompose_gamma2: " + m.to_string() +
                                " is not congruent to +-I mod 2");

  // Left-multiplying by x^-q or y^-q reduces the first column; the applied
  // factors are collected and inverted at the end.
  BigInt a = m.a, b = m.b, c = m.c, d = m.d;
  std::vector<std::pair<Letter, BigInt>> factors;

  while (c != 0) {
    if (abs(a) > abs(c)) {
      BigInt q = round_div(a, 2 * c);
      a -= 2 * q * c;
      b -= 2 * q * d;
      factors.emplace_back(Letter::x, q);
    } else {
      BigInt q = round_div(c, 2 * a);
      c -= 2 * q * a;
      d -= 2 * q * b;
      factors.emplace_back(Letter::y, q);
    }
  }

  // Now (a b; 0 d) with a = d = +-1.
  SignedWord out;
  out.sign = a == 1 ? 1 : -1;
  BigInt r = out.sign * b / 2;
  factors.emplace_back(Letter::x, r);

  for (const auto &[gen, q] : factors) {
    Letter l = q < 0 ? inverse(gen) : gen;
    BigInt n = abs(q);
    for (BigInt i = 0; i < n; ++i)
      out.word.push_back(l);
  }
  return out;
}

// gamma

namespace {

FWord substitute(const FWord &w, const FWord &img_x, const FWord &img_y) {
  FWord ix = img_x.inverse(), iy = img_y.inverse();
  FWord r;
  for (Letter l : w.letters()) {
    switch (l) {
    case Letter::x: r = r * img_x; break;
    case Letter::y: r = r * img_y; break;
    case Letter::x_inv: r = r * ix; break;
    case Letter::y_inv: r = r * iy; break;
    }
  }
  return r;
}

} // namespace

FWord gamma_auto(const FWord &w) {
  return substitute(w, FWord{Letter::y}, FWord{Letter::x_inv, Letter::y});
}

FWord gamma_inv(const FWord &w) {
  return substitute(w, FWord{Letter::x, Letter::y_inv}, FWord{Letter::x});
}

// Generators

namespace {

struct GenInfo {
  std::string_view name;
  std::string_view word;
  int m;
  int m2;
  std::string_view gamma_inv_image; // tabulated image under gamma^-1
  std::string_view rewrite;         // tabulated rewriting in generators
};

constexpr std::array<GenInfo, gen_count> gen_table{{
  {"A", "yxyx", 1, 1, "x^2y^-1x^2y^-1", "L1 A^-1 L3"},
  {"B", "xyxy", 0, -1, "xy^-1x^2y^-1x", "F L4 L6 L5 C"},
  {"C", "yxy^-2x", 1, 1, "x^2y^-1x^-1y^-1", "L1 A^-1"},
  {"D", "yxy^-1x^-1yx^-1y", 1, 1, "x^2y^-1x^-1y^2", "L1 A^-1 L5^-1"},
  {"E", "yx^-1y^-1x^-1y", 1, 0, "xyx^-2y", "B L2^-1"},
  {"F", "xy^-2xy", 0, -1, "xy^-1x^-1y^-1x", "F L6 L5 C"},
  {"G", "yx^-1yx^-1y^-1xy", 0, -1, "xy^2x^-1y^-1x", "B L6 L5 C"},
  {"L1", "x^3", 0, 0, "xy^-1xy^-1xy^-1", "F G^-1"},
  {"L2", "y^-1x^3y", 0, 0, "y^-1xy^-1xy^-1x", "D^-1 C"},
  {"L3", "yx^3y^-1", 0, 0, "x xy^-1xy^-1xy^-1 x^-1", "L1 A^-1 L3 E L2 B^-1"},
  {"L4", "y^-1x^-1yx^3y^-1xy", 0, 0, "x^-1y xy^-1xy^-1xy^-1 y^-1x", "C^-1 L5^-1 L6^-1 L5 C"},
  {"L5", "y^-3", 0, 0, "x^-3", "L1^-1"},
  {"L6", "y^-1 x^-1y x^-1y x^-1y y", 0, 0, "x^-1y^3x", "C^-1 A"},
}};

const GenInfo &info(Gen g) { return gen_table[static_cast<std::size_t>(g)]; }

} // namespace

std::string_view gen_name(Gen g) { return info(g).name; }

FWord gen_word(Gen g) { return FWord::parse(info(g).word); }

int m_on_generator(Gen g) { return info(g).m; }

int m2_on_generator(Gen g) { return info(g).m2; }

GenWord::GenWord(const std::vector<GenLetter> &letters) {
  for (const auto &l : letters)
    push_back(l);
}

void GenWord::push_back(GenLetter l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().inv != l.inv)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

GenWord GenWord::parse(std::string_view text) {
  GenWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }

    std::optional<Gen> gen;
    if (ch == 'L') {
      ++pos;
      if (pos >= text.size() || text[pos] < '1' || text[pos] > '6')
        throw std::invalid_argument("bad loop generator in \"" + std::string(text) + "\"");
      gen = static_cast<Gen>(static_cast<int>(Gen::L1) + (text[pos] - '1'));
      ++pos;
    } else if (ch >= 'A' && ch <= 'G') {
      gen = static_cast<Gen>(ch - 'A');
      ++pos;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                  "' in generator word \"" + std::string(text) + "\"");
    }

    bool inv = false;
    if (text.substr(pos, 3) == "^-1") {
      inv = true;
      pos += 3;
    } else if (pos < text.size() && text[pos] == '-') {
      inv = true;
      ++pos;
    }
    w.push_back({*gen, inv});
  }
  return w;
}

std::string GenWord::to_string() const {
  if (letters_.empty())
    return "1";
  std::string s;
  for (const auto &l : letters_) {
    if (!s.empty())
      s += ' ';
    s += gen_name(l.gen);
    if (l.inv)
      s += "^-1";
  }
  return s;
}

FWord gen_to_xy(const GenWord &w) {
  FWord r;
  for (const auto &l : w.letters()) {
    FWord g = gen_word(l.gen);
    r = r * (l.inv ? g.inverse() : g);
  }
  return r;
}

std::vector<RewriteRow> verify_generator_rewrites() {
  // k only enters through Z/2k; a modulus larger than any generator value
  // makes the bridge identity an integer check.
  constexpr int k = 8;
  std::vector<RewriteRow> rows;
  for (std::size_t i = 0; i < gen_count; ++i) {
    Gen g = static_cast<Gen>(i);
    const GenInfo &gi = info(g);

    FWord image = gamma_inv(gen_word(g));
    FWord rhs = gen_to_xy(GenWord::parse(gi.rewrite));

    RewriteRow row;
    row.generator = g;
    row.lhs_image = image.to_string();
    row.rhs = std::string(gi.rewrite);
    row.words_match = image == rhs;
    row.printed_image_match = image == FWord::parse(gi.gamma_inv_image);

    // m on the rewriting, summed from the tabulated generator values.
    int m_rhs = 0;
    GenWord rewrite = GenWord::parse(gi.rewrite);
    for (const auto &l : rewrite.letters())
      m_rhs += l.inv ? -m_on_generator(l.gen) : m_on_generator(l.gen);
    row.value_bridge = m_rhs == -gi.m2;

    // The tabulated values must agree with the coset computations.
    auto mod2k = [](int v) { return ((v % (2 * k)) + 2 * k) % (2 * k); };
    row.value_bridge = row.value_bridge && m_value(gen_word(g), k) == mod2k(gi.m) &&
                       m2_value(gen_word(g), k) == mod2k(gi.m2) &&
                       m_value(image, k) == mod2k(-gi.m2);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Coset action

namespace {

// Image (i', dj) of coset i under a generator: the point (i, j) goes to (i', j + dj).
struct Step {
  int to;
  int dj;
};

// Cycles (1 2 3)(4, 8+, 5+)(6, 9+, 7+)(10 12 11) for x.
constexpr std::array<Step, 13> x_step{{
  {0, 0},
  {2, 0}, {3, 0}, {1, 0},
  {8, 1}, {4, -1},
  {9, 1}, {6, -1},
  {5, 0}, {7, 0},
  {12, 0}, {10, 0}, {11, 0},
}};

// Cycles (1 6 5+)(2 8 10)(3 11 9)(4 7+ 12) for y.
constexpr std::array<Step, 13> y_step{{
  {0, 0},
  {6, 0}, {8, 0}, {11, 0},
  {7, 1}, {1, -1},
  {5, 1}, {12, -1},
  {10, 0}, {3, 0},
  {2, 0}, {9, 0}, {4, 0},
}};

CosetPoint apply_step(const std::array<Step, 13> &table, CosetPoint p, int k) {
  const Step &s = table[p.i];
  return {s.to, ((p.j + s.dj) % (2 * k) + 2 * k) % (2 * k)};
}

CosetPoint apply_inverse_step(const std::array<Step, 13> &table, CosetPoint p, int k) {
  for (int i = 1; i <= 12; ++i) {
    if (table[i].to == p.i)
      return {i, ((p.j - table[i].dj) % (2 * k) + 2 * k) % (2 * k)};
  }
  throw std::logic_error("coset table is not a permutation");
}

} // namespace

CosetPoint coset_action(Letter g, CosetPoint p, int k) {
  if (k < 1 || p.i < 1 || p.i > 12 || p.j < 0 || p.j >= 2 * k)
    throw std::invalid_argument("invalid coset point");
  switch (g) {
  case Letter::x: return apply_step(x_step, p, k);
  case Letter::y: return apply_step(y_step, p, k);
  case Letter::x_inv: return apply_inverse_step(x_step, p, k);
  case Letter::y_inv: return apply_inverse_step(y_step, p, k);
  }
  return p;
}

CosetPoint apply_word_to_coset(const FWord &w, CosetPoint p, int k) {
  for (Letter l : w.letters())
    p = coset_action(l, p, k);
  return p;
}

namespace {

void require_level6(const FWord &w) {
  Mat2 m = eval_word(w);
  if (!equal_mod_pm(m, mat::identity(), 6))
    throw std::invalid_argument("word " + w.to_string() + " is not in the level-6 subgroup");
}

} // namespace

int m2_value(const FWord &w, int k) {
  require_level6(w);
  CosetPoint p = apply_word_to_coset(w, {1, 0}, k);
  if (p.i != 1)
    throw std::logic_error("level-6 word moved the base coset");
  return p.j;
}

int m_value(const FWord &w, int k) {
  require_level6(w);
  int v = m2_value(gamma_auto(w), k);
  return (2 * k - v) % (2 * k);
}

bool equal_mod_pm(const Mat2 &l, const Mat2 &r, long n) {
  Mat2 a = l.mod(n);
  return a == r.mod(n) || a == (-r).mod(n);
}

bool membership(const Mat2 &m, Subgroup group, int param) {
  if (m.det() != 1)
    throw std::invalid_argument("membership: determinant of " + m.to_string() + " is not 1");

  switch (group) {
  case Subgroup::gamma_n:
    if (param < 1)
      throw std::invalid_argument("membership: level must be positive");
    return m.mod(param) == mat::identity().mod(param);
  case Subgroup::pm_gamma_n:
    if (param < 1)
      throw std::invalid_argument("membership: level must be positive");
    return equal_mod_pm(m, mat::identity(), param);
  case Subgroup::p_gamma2:
    return equal_mod_pm(m, mat::identity(), 2);
  case Subgroup::p_gamma6:
    return equal_mod_pm(m, mat::identity(), 6);
  case Subgroup::p_gamma6_2k:
  case Subgroup::g6_2k: {
    if (param < 1)
      throw std::invalid_argument("membership: k must be positive");
    if (!equal_mod_pm(m, mat::identity(), 6))
      return false;
    FWord w = decompose_gamma2(m).word;
    int v = group == Subgroup::p_gamma6_2k ? m_value(w, param) : m2_value(w, param);
    return v == 0;
  }
  }
  return false;
}

const std::array<CosetRep, 12> &coset_rep_table() {
  static const std::array<CosetRep, 12> table = [] {
    constexpr std::array<std::string_view, 12> words{
      "1", "x", "x^2", "y^-1x", "y^-1", "y", "yx^-1", "y^-1x^-1", "yx", "y^-1x^-1y", "yxy^-1",
      "yxy^-1x^-1"};
    const std::array<std::array<int, 4>, 12> printed{{
      {1, 0, 0, 1}, {1, 2, 0, 1}, {1, 4, 0, 1}, {1, 2, 4, 3}, {1, 0, 4, 1}, {1, 0, 2, 1},
      {1, 4, 2, 3}, {1, 4, 4, 5}, {1, 2, 2, 5}, {3, 2, 4, 1}, {3, 2, 4, 5}, {3, 2, 4, 3},
    }};
    std::array<CosetRep, 12> t;
    for (std::size_t i = 0; i < 12; ++i) {
      t[i].word = FWord::parse(words[i]);
      t[i].matrix = eval_word(t[i].word);
      t[i].printed_mod6 = Mat2(printed[i][0], printed[i][1], printed[i][2], printed[i][3]);
    }
    return t;
  }();
  return table;
}

int coset_index_mod6(const Mat2 &m) {
  const auto &table = coset_rep_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (equal_mod_pm(m * table[i].matrix.inverse(), mat::identity(), 6))
      return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("coset_index_mod6: " + m.to_string() + " is not in +-Gamma(2)");
}

} // namespace origami
