#include "origami/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace origami {

const Vertex &LabeledOrigami::vertex(const std::string &label) const {
  for (const auto &v : vertices)
    if (v.label == label)
      return v;
  throw std::out_of_range("no vertex labelled " + label);
}

std::uint32_t LabeledOrigami::square(const SquareLabel &label) const {
  for (std::uint32_t s = 0; s < square_labels.size(); ++s)
    if (square_labels[s] == label)
      return s;
  throw std::out_of_range("no square with the requested label");
}

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem &c) { return c.pass; });
}

namespace {

constexpr char class_letter[4] = {'P', 'Q', 'R', 'S'};

// Coset step with an integer drift: applies g to (i, 0) in a large modulus.
struct Move {
  int i;
  int dj;
};

Move step(Letter g, int i) {
  constexpr int big = 64;
  CosetPoint p = coset_action(g, {i, 0}, big);
  return {p.i, p.j >= big ? p.j - 2 * big : p.j};
}

// Gluing rules of the base surface: for row h, the horizontal and vertical
// neighbours are (letter applied to the coset, new row). No letter means same coset.
struct Rule {
  std::optional<Letter> letter;
  int row;
};

constexpr std::array<Rule, 4> horizontal_rule{{
  {std::nullopt, 2}, {Letter::y_inv, 1}, {std::nullopt, 4}, {Letter::y, 3},
}};

constexpr std::array<Rule, 4> vertical_rule{{
  {Letter::y, 3}, {Letter::y_inv, 4}, {Letter::x_inv, 1}, {Letter::x, 2},
}};

Move follow(const Rule &r, int i) {
  if (!r.letter)
    return {i, 0};
  return step(*r.letter, i);
}

std::uint32_t x_index(int i, int h) { return static_cast<std::uint32_t>(4 * (i - 1) + (h - 1)); }

std::string copy_suffix(int j) { return "^" + std::to_string(j + 1); }

// Offsets that make vertical gluings stay inside one copy: accumulate the drift
// along each vertical cylinder of the base, starting from its first square.
const std::array<std::array<int, 5>, 13> &offsets() {
  static const std::array<std::array<int, 5>, 13> table = [] {
    std::array<std::array<int, 5>, 13> f{};
    std::array<std::array<bool, 5>, 13> done{};
    for (int i0 = 1; i0 <= 12; ++i0) {
      for (int h0 = 1; h0 <= 4; ++h0) {
        if (done[i0][h0])
          continue;
        int i = i0, h = h0, acc = 0;
        while (!done[i][h]) {
          done[i][h] = true;
          f[i][h] = acc;
          Move m = follow(vertical_rule[h - 1], i);
          acc += m.dj;
          i = m.i;
          h = vertical_rule[h - 1].row;
        }
        if (acc != f[i][h])
          throw std::logic_error("vertical cylinder carries nonzero drift");
      }
    }
    return f;
  }();
  return table;
}

} // namespace

int copy_offset(int i, int h) {
  if (i < 1 || i > 12 || h < 1 || h > 4)
    throw std::out_of_range("copy_offset: bad square");
  return offsets()[i][h];
}

LabeledOrigami build_E2() {
  Origami o = Origami::from_cycles(4, {{1, 2}, {3, 4}}, {{1, 3}, {2, 4}});
  LabeledOrigami out{o, {}, vertices(o), 0};
  for (int h = 1; h <= 4; ++h)
    out.square_labels.push_back({-1, h, -1, -1});
  auto idx = vertex_index(o, out.vertices);
  for (int h = 0; h < 4; ++h)
    out.vertices[idx[h]].label = std::string(1, class_letter[h]);
  return out;
}

LabeledOrigami build_X() {
  Perm a(48), b(48);
  std::vector<SquareLabel> labels(48);
  for (int i = 1; i <= 12; ++i) {
    for (int h = 1; h <= 4; ++h) {
      std::uint32_t s = x_index(i, h);
      labels[s] = {i, h, -1, -1};
      Move mh = follow(horizontal_rule[h - 1], i);
      Move mv = follow(vertical_rule[h - 1], i);
      a[s] = x_index(mh.i, horizontal_rule[h - 1].row);
      b[s] = x_index(mv.i, vertical_rule[h - 1].row);
    }
  }

  Origami o(std::move(a), std::move(b));
  LabeledOrigami out{o, std::move(labels), vertices(o), 0};
  auto idx = vertex_index(o, out.vertices);
  for (auto &v : out.vertices)
    v.label = std::string(1, class_letter[out.square_labels[v.squares.front()].h - 1]);
  for (int i = 1; i <= 12; ++i)
    out.vertices[idx[x_index(i, 3)]].label = "R_" + std::to_string(i);
  out.vertices[idx[x_index(1, 1)]].label = "P_1";
  out.vertices[idx[x_index(1, 2)]].label = "Q_1";
  return out;
}

namespace {

std::uint32_t y_index(int i, int h, int j, int k) {
  return x_index(i, h) * static_cast<std::uint32_t>(2 * k) + static_cast<std::uint32_t>(j);
}

int wrap(int v, int m) { return ((v % m) + m) % m; }

} // namespace

YBuild build_Y(int k) {
  if (k < 1)
    throw std::invalid_argument("build_Y: k must be positive");
  const int copies = 2 * k;
  const std::size_t n = 48 * static_cast<std::size_t>(copies);
  Perm a(n), b(n);
  std::vector<SquareLabel> labels(n);
  std::vector<std::uint32_t> q(n);

  for (int i = 1; i <= 12; ++i) {
    for (int h = 1; h <= 4; ++h) {
      for (int j = 0; j < copies; ++j) {
        std::uint32_t s = y_index(i, h, j, k);
        labels[s] = {i, h, j, -1};
        q[s] = x_index(i, h);
        int drift = j + copy_offset(i, h);

        auto target = [&](const Rule &r) {
          Move m = follow(r, i);
          int j2 = wrap(drift + m.dj - copy_offset(m.i, r.row), copies);
          return y_index(m.i, r.row, j2, k);
        };
        a[s] = target(horizontal_rule[h - 1]);
        b[s] = target(vertical_rule[h - 1]);
      }
    }
  }

  Origami o(std::move(a), std::move(b));
  LabeledOrigami y{o, std::move(labels), vertices(o), k};
  auto idx = vertex_index(o, y.vertices);
  for (auto &v : y.vertices) {
    const SquareLabel &l = y.square_labels[*std::min_element(v.squares.begin(), v.squares.end())];
    v.label = std::string(1, class_letter[l.h - 1]) + copy_suffix(l.j);
  }
  for (int j = 0; j < copies; ++j) {
    for (int i = 1; i <= 12; ++i)
      y.vertices[idx[y_index(i, 3, j, k)]].label = "R_" + std::to_string(i) + copy_suffix(j);
    y.vertices[idx[y_index(1, 1, j, k)]].label = "P_1" + copy_suffix(j);
    y.vertices[idx[y_index(1, 2, j, k)]].label = "Q_1" + copy_suffix(j);
  }

  LabeledOrigami x = build_X();
  return {y, Covering(y.origami, x.origami, std::move(q))};
}

std::pair<Perm, Perm> build_Z_maps(int k, bool with_cocycles) {
  if (k < 1)
    throw std::invalid_argument("build_Z: k must be positive");
  const int copies = 2 * k;
  YBuild yb = build_Y(k);
  const Origami &y = yb.y.origami;
  const std::uint32_t ny = static_cast<std::uint32_t>(y.size());

  // Printed copy numbers run 1..2k; internal ones are one less.
  std::vector<char> h_cut(ny, 0), v_cut(ny, 0);
  if (with_cocycles) {
    h_cut[y_index(1, 3, 0, k)] = 1;
    v_cut[y_index(2, 3, copies - 1, k)] = 1;
    v_cut[y_index(5, 1, 0, k)] = 1;
  }

  Perm a(2 * ny), b(2 * ny);
  for (std::uint32_t l = 0; l < 2; ++l) {
    for (std::uint32_t s = 0; s < ny; ++s) {
      a[s + ny * l] = y.a()[s] + ny * ((l + h_cut[s]) % 2);
      b[s + ny * l] = y.b()[s] + ny * ((l + v_cut[s]) % 2);
    }
  }
  return {std::move(a), std::move(b)};
}

ZBuild build_Z(int k) {
  YBuild yb = build_Y(k);
  auto [a, b] = build_Z_maps(k, true);
  Origami o(std::move(a), std::move(b));
  const std::size_t ny = yb.y.origami.size();

  std::vector<SquareLabel> labels(o.size());
  std::vector<std::uint32_t> r(o.size());
  for (std::size_t s = 0; s < o.size(); ++s) {
    labels[s] = yb.y.square_labels[s % ny];
    labels[s].l = static_cast<int>(s / ny);
    r[s] = static_cast<std::uint32_t>(s % ny);
  }

  LabeledOrigami z{o, std::move(labels), vertices(o), k};
  for (auto &v : z.vertices) {
    const SquareLabel &l = z.square_labels[*std::min_element(v.squares.begin(), v.squares.end())];
    v.label = std::string(1, class_letter[l.h - 1]);
  }
  return {z, Covering(z.origami, yb.y.origami, std::move(r))};
}

Covering covering_p(const LabeledOrigami &x, const LabeledOrigami &e2) {
  std::vector<std::uint32_t> phi(x.origami.size());
  for (std::size_t s = 0; s < phi.size(); ++s)
    phi[s] = static_cast<std::uint32_t>(x.square_labels[s].h - 1);
  return Covering(x.origami, e2.origami, std::move(phi));
}

std::string labels_text(const LabeledOrigami &o) {
  std::ostringstream os;
  os << "labels n=" << o.origami.size() << '\n';
  auto field = [&os](int v) {
    if (v < 0)
      os << " -";
    else
      os << ' ' << v;
  };
  for (std::size_t s = 0; s < o.square_labels.size(); ++s) {
    const SquareLabel &l = o.square_labels[s];
    os << s + 1;
    field(l.i);
    field(l.h);
    field(l.j < 0 ? -1 : l.j + 1);
    field(l.l);
    os << '\n';
  }
  return os.str();
}

// Certificate

namespace {

RamData expected(std::initializer_list<std::pair<std::uint32_t, int>> parts) {
  RamData r;
  for (auto [v, c] : parts)
    r.insert(r.end(), static_cast<std::size_t>(c), v);
  std::sort(r.rbegin(), r.rend());
  return r;
}

// Vertices whose label starts with the given class letter and is not a named one.
std::vector<const Vertex *> class_members(const LabeledOrigami &o, char cls,
                                          const std::string &exclude) {
  std::vector<const Vertex *> out;
  for (const auto &v : o.vertices)
    if (!v.label.empty() && v.label[0] == cls && v.label != exclude)
      out.push_back(&v);
  return out;
}

} // namespace

RamificationCertificate ramification_check(int k) {
  LabeledOrigami e2 = build_E2();
  LabeledOrigami x = build_X();
  YBuild yb = build_Y(k);
  ZBuild zb = build_Z(k);

  Covering p = covering_p(x, e2);
  Covering qr = compose(zb.r, yb.q);
  Covering pqr = compose(qr, p);

  RamificationCertificate c;
  c.k = k;
  c.rm_p = ram_data(pqr, e2.vertex("P"));
  c.rm_q = ram_data(pqr, e2.vertex("Q"));
  c.rm_r = ram_data(pqr, e2.vertex("R"));
  c.rm_s = ram_data(pqr, e2.vertex("S"));
  std::set<RamData> distinct{c.rm_p, c.rm_q, c.rm_r, c.rm_s};
  c.distinct_over_base = distinct.size() == 4;

  c.rm_p1 = ram_data(qr, x.vertex("P_1"));
  c.rm_q1 = ram_data(qr, x.vertex("Q_1"));
  for (const Vertex *v : class_members(x, 'P', "P_1"))
    c.rm_p_other.push_back(ram_data(qr, *v));
  for (const Vertex *v : class_members(x, 'Q', "Q_1"))
    c.rm_q_other.push_back(ram_data(qr, *v));
  auto absent = [](const RamData &r, const std::vector<RamData> &others) {
    return std::find(others.begin(), others.end(), r) == others.end();
  };
  c.distinguished_over_x = c.rm_p_other.size() == 3 && c.rm_q_other.size() == 3 &&
                  absent(c.rm_p1, c.rm_p_other) && absent(c.rm_q1, c.rm_q_other);

  std::vector<RamData> over_p1;
  for (int j = 0; j < 2 * k; ++j)
    over_p1.push_back(ram_data(zb.r, yb.y.vertex("P_1" + copy_suffix(j))));
  // Some copy must be distinguished; with two copies both are, so the
  // reported copy is the ramified one.
  bool some_unique = false;
  for (int j = 0; j < 2 * k; ++j) {
    if (std::count(over_p1.begin(), over_p1.end(), over_p1[j]) == 1) {
      some_unique = true;
      if (over_p1[j].front() == 2)
        c.ramified_p_copy = j;
    }
  }
  c.distinguished_p_copy = some_unique;

  c.rm_r11 = ram_data(zb.r, yb.y.vertex("R_1" + copy_suffix(0)));
  bool r_unique = true;
  for (int j = 0; j < 2 * k; ++j) {
    for (int i = 1; i <= 12; ++i) {
      if (i == 1 && j == 0)
        continue;
      if (ram_data(zb.r, yb.y.vertex("R_" + std::to_string(i) + copy_suffix(j))) == c.rm_r11)
        r_unique = false;
    }
  }
  c.distinguished_r_vertex = r_unique && c.rm_r11.front() == 2;

  c.expected_multisets = c.rm_p == expected({{6, 1}, {3, 16 * k - 2}}) &&
                         c.rm_q == expected({{6, 2}, {3, 16 * k - 4}}) &&
                         c.rm_r == expected({{2, 1}, {1, 48 * k - 2}}) &&
                         c.rm_s == expected({{3, 16 * k}}) &&
                         c.rm_p1 == expected({{2, 1}, {1, 4 * k - 2}}) &&
                         c.rm_q1 == expected({{2, 2}, {1, 4 * k - 4}});

  int gz = genus(zb.z.origami), gy = genus(yb.y.origami);
  c.riemann_hurwitz = 2 * gz - 2 == 2 * (2 * gy - 2) + 4 && rh_check(p) && rh_check(yb.q) &&
                      rh_check(zb.r) && rh_check(pqr);
  return c;
}

// Affine actions on vertices

namespace {

// Tabulated permutations of the regular vertices: each cycle lists (i, copy shift).
using RCycle = std::vector<std::pair<int, int>>;

const std::vector<RCycle> &t2_cycles() {
  static const std::vector<RCycle> c{
    {{1, 0}, {5, 1}, {6, 0}}, {{11, 0}, {3, 0}, {9, 0}},
    {{10, 0}, {8, 0}, {2, 0}}, {{12, 0}, {7, 1}, {4, 0}}};
  return c;
}

const std::vector<RCycle> &l2_cycles() {
  static const std::vector<RCycle> c{
    {{1, 0}, {4, 0}, {11, 0}}, {{5, 0}, {9, 0}, {10, 0}},
    {{6, 0}, {2, 0}, {12, 0}}, {{3, 0}, {7, 0}, {8, 0}}};
  return c;
}

const std::vector<RCycle> &t_cycles_x() {
  static const std::vector<RCycle> c{
    {{1, 0}, {6, 0}, {5, 0}}, {{11, 0}, {9, 0}, {3, 0}},
    {{10, 0}, {2, 0}, {8, 0}}, {{12, 0}, {4, 0}, {7, 0}}};
  return c;
}

const std::vector<RCycle> &l_cycles_x() {
  static const std::vector<RCycle> c{
    {{1, 0}, {11, 0}, {4, 0}}, {{5, 0}, {10, 0}, {9, 0}},
    {{6, 0}, {12, 0}, {2, 0}}, {{3, 0}, {8, 0}, {7, 0}}};
  return c;
}

// Expected image label of each R vertex, from cycles; copies == 0 means no copy index.
std::map<std::string, std::string> r_images(const std::vector<RCycle> &cs, int copies) {
  auto name = [copies](int i, int j) {
    std::string s = "R_" + std::to_string(i);
    return copies == 0 ? s : s + copy_suffix(wrap(j, copies));
  };
  std::map<std::string, std::string> m;
  for (int j = 0; j < std::max(copies, 1); ++j) {
    for (const auto &cyc : cs) {
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        auto [i1, d1] = cyc[t];
        auto [i2, d2] = cyc[(t + 1) % cyc.size()];
        m[name(i1, j + d1)] = name(i2, j + d2);
      }
    }
  }
  return m;
}

std::map<std::string, std::string> r_identity(int copies) {
  std::map<std::string, std::string> m;
  for (int j = 0; j < std::max(copies, 1); ++j)
    for (int i = 1; i <= 12; ++i) {
      std::string s = "R_" + std::to_string(i) + (copies == 0 ? "" : copy_suffix(j));
      m[s] = s;
    }
  return m;
}

enum class Singular { fixed, swap_pq, swap_qs };

char vertex_class(const LabeledOrigami &o, const Vertex &v) {
  return class_letter[o.square_labels[v.squares.front()].h - 1];
}

// Checks whether some affine map with the given derivative acts as prescribed.
CheckItem check_affine(const std::string &name, const LabeledOrigami &o, const Mat2 &m,
                       const std::map<std::string, std::string> &r_map, Singular singular) {
  Acted acted = matrix_action(m, o.origami);
  auto isos = isomorphisms(acted.origami, o.origami);
  auto vs = vertices(o.origami);
  // vertices(o.origami) enumerates in the same order as the stored labelled list
  std::size_t realizing = 0;
  for (const auto &iso : isos) {
    Perm vm = induced_vertex_map(o.origami, acted, iso);
    bool ok = true;
    for (std::uint32_t v = 0; v < vs.size() && ok; ++v) {
      const Vertex &src = o.vertices[v];
      const Vertex &dst = o.vertices[vm[v]];
      char cs = vertex_class(o, src), cd = vertex_class(o, dst);
      if (cs == 'R') {
        auto it = r_map.find(src.label);
        ok = it != r_map.end() && it->second == dst.label;
      } else if (singular == Singular::fixed) {
        ok = vm[v] == v;
      } else {
        char want = cs;
        if (singular == Singular::swap_pq)
          want = cs == 'P' ? 'Q' : cs == 'Q' ? 'P' : cs;
        else
          want = cs == 'Q' ? 'S' : cs == 'S' ? 'Q' : cs;
        ok = cd == want;
      }
    }
    if (ok)
      ++realizing;
  }
  std::ostringstream os;
  os << realizing << " of " << isos.size() << " affine maps with derivative " << m.to_string()
     << " realize the tabulated vertex permutation";
  return {name, realizing > 0, os.str()};
}

} // namespace

CheckReport verify_affine_y(int k) {
  YBuild yb = build_Y(k);
  const LabeledOrigami &y = yb.y;
  const int copies = 2 * k;
  CheckReport r;
  r.items.push_back(check_affine("T^2 on Y(" + std::to_string(k) + ")", y, mat::T() * mat::T(),
                                 r_images(t2_cycles(), copies), Singular::fixed));
  r.items.push_back(check_affine("L^2 on Y(" + std::to_string(k) + ")", y, mat::L() * mat::L(),
                                 r_images(l2_cycles(), copies), Singular::fixed));
  r.items.push_back(check_affine("-I on Y(" + std::to_string(k) + ")", y, mat::minus_identity(),
                                 r_identity(copies), Singular::fixed));
  return r;
}

CheckReport verify_affine_x() {
  LabeledOrigami x = build_X();
  CheckReport r;
  r.items.push_back(check_affine("T on X", x, mat::T(), r_images(t_cycles_x(), 0), Singular::swap_pq));
  r.items.push_back(check_affine("L on X", x, mat::L(), r_images(l_cycles_x(), 0), Singular::swap_qs));

  // Squares of the regular-vertex maps: right multiplication by y^-1 and y^-1 x.
  auto coset_map = [](const FWord &w) {
    std::map<std::string, std::string> m;
    for (int i = 1; i <= 12; ++i)
      m["R_" + std::to_string(i)] = "R_" + std::to_string(apply_word_to_coset(w, {i, 0}, 1).i);
    return m;
  };
  r.items.push_back(check_affine("T^2 on X", x, mat::T() * mat::T(),
                                 coset_map(FWord::parse("y^-1")), Singular::fixed));
  r.items.push_back(check_affine("L^2 on X", x, mat::L() * mat::L(),
                                 coset_map(FWord::parse("y^-1x")), Singular::fixed));
  r.items.push_back(check_affine("-I on X", x, mat::minus_identity(), r_identity(0), Singular::fixed));

  // (T L^-1)^3 = -I
  Mat2 tl = mat::T() * mat::L().inverse();
  r.items.push_back({"(T L^-1)^3 = -I", tl * tl * tl == mat::minus_identity(), ""});

  // Only the trivial translation fixes all singular vertices.
  auto vs = vertices(x.origami);
  auto idx = vertex_index(x.origami, vs);
  std::size_t fixing = 0;
  auto tr = translations(x.origami);
  for (const auto &t : tr.elements) {
    bool fixes = true;
    for (const auto &v : vs)
      if (v.order == 3 && idx[t[v.squares.front()]] != idx[v.squares.front()])
        fixes = false;
    fixing += fixes;
  }
  r.items.push_back({"translations fixing the singular vertices", fixing == 1,
                     std::to_string(fixing) + " of " + std::to_string(tr.elements.size())});
  return r;
}

CheckReport verify_z3_reference() {
  ZBuild zb = build_Z(3);
  Origami ref = z3_reference();
  CheckReport r;

  auto census = [&r](const std::string &who, const Origami &o) {
    auto st = stratum(o);
    std::vector<std::uint32_t> want{5, 5, 5};
    want.insert(want.end(), 138, 2);
    want.push_back(1);
    r.items.push_back({who + " squares", o.size() == 576, std::to_string(o.size())});
    r.items.push_back({who + " genus", genus(o) == 147, std::to_string(genus(o))});
    r.items.push_back({who + " stratum", st == want, format_multiset(st)});
    std::size_t ch = cylinder_count(o, Direction::horizontal);
    std::size_t cv = cylinder_count(o, Direction::vertical);
    r.items.push_back({who + " cylinders", ch == 95 && cv == 94,
                       std::to_string(ch) + " horizontal, " + std::to_string(cv) + " vertical"});
  };
  census("constructed", zb.z.origami);
  census("reference", ref);

  auto type_a = cycle_type(ref.a()), type_b = cycle_type(ref.b());
  r.items.push_back({"reference sigma_a cycle type",
                     type_a == std::map<std::uint32_t, std::uint32_t>{{6, 94}, {12, 1}}, ""});
  r.items.push_back({"reference sigma_b cycle type",
                     type_b == std::map<std::uint32_t, std::uint32_t>{{6, 92}, {12, 2}}, ""});

  auto iso = is_isomorphic(zb.z.origami, ref);
  r.items.push_back({"isomorphic to reference", iso.has_value(),
                     iso ? "square 1 maps to " + std::to_string((*iso)[0] + 1) : "no isomorphism"});
  return r;
}

} // namespace origami
