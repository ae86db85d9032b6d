#include "origami/origami.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace origami {

Origami::Origami(Perm a, Perm b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size())
    throw std::invalid_argument("origami: sigma_a and sigma_b have different sizes");
  if (a_.empty())
    throw std::invalid_argument("origami: no squares");
  if (!is_permutation(a_) || !is_permutation(b_))
    throw std::invalid_argument("origami: gluing map is not a bijection");
  if (!is_transitive(a_, b_))
    throw std::invalid_argument("origami: surface is not connected");
  a_inv_ = inverse(a_);
  b_inv_ = inverse(b_);
}

Origami Origami::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>> &a,
                             const std::vector<std::vector<std::uint32_t>> &b) {
  auto build = [n](const std::vector<std::vector<std::uint32_t>> &cs) {
    Perm p = identity_perm(n);
    std::vector<char> used(n, 0);
    for (const auto &c : cs) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint32_t s = c[i];
        if (s < 1 || s > n || used[s - 1])
          throw std::invalid_argument("origami: invalid cycle entry " + std::to_string(s));
        used[s - 1] = 1;
        p[s - 1] = c[(i + 1) % c.size()] - 1;
      }
    }
    return p;
  };
  return Origami(build(a), build(b));
}

Perm Origami::turn() const {
  Perm t(size());
  for (std::uint32_t s = 0; s < size(); ++s)
    t[s] = b_[a_[b_inv_[a_inv_[s]]]];
  return t;
}

Origami Origami::relabeled(const Perm &pi) const {
  Perm a(size()), b(size());
  for (std::uint32_t s = 0; s < size(); ++s) {
    a[pi[s]] = pi[a_[s]];
    b[pi[s]] = pi[b_[s]];
  }
  return Origami(std::move(a), std::move(b));
}

std::vector<Vertex> vertices(const Origami &o) {
  std::vector<Vertex> vs;
  for (auto &c : cycles(o.turn())) {
    Vertex v;
    v.order = static_cast<std::uint32_t>(c.size());
    v.squares = std::move(c);
    vs.push_back(std::move(v));
  }
  return vs;
}

std::vector<std::uint32_t> vertex_index(const Origami &o, const std::vector<Vertex> &vs) {
  std::vector<std::uint32_t> idx(o.size());
  for (std::uint32_t v = 0; v < vs.size(); ++v)
    for (auto s : vs[v].squares)
      idx[s] = v;
  return idx;
}

int genus(const Origami &o) {
  long v = static_cast<long>(cycles(o.turn()).size());
  long n = static_cast<long>(o.size());
  return static_cast<int>((2 - v + n) / 2);
}

std::vector<std::uint32_t> stratum(const Origami &o) {
  std::vector<std::uint32_t> zeros;
  for (const auto &c : cycles(o.turn()))
    if (c.size() >= 2)
      zeros.push_back(static_cast<std::uint32_t>(c.size() - 1));
  std::sort(zeros.rbegin(), zeros.rend());
  return zeros;
}

std::vector<CylinderClass> cylinders(const Origami &o, Direction dir) {
  std::vector<CylinderClass> out;
  for (const auto &[len, count] : cycle_type(dir == Direction::horizontal ? o.a() : o.b()))
    out.push_back({len, count});
  return out;
}

std::size_t cylinder_count(const Origami &o, Direction dir) {
  return cycles(dir == Direction::horizontal ? o.a() : o.b()).size();
}

namespace {

// Per-square invariant used to prune isomorphism candidates.
std::vector<std::array<std::uint32_t, 3>> square_signature(const Origami &o) {
  std::vector<std::array<std::uint32_t, 3>> sig(o.size());
  auto fill = [&](const Perm &p, int slot) {
    for (const auto &c : cycles(p))
      for (auto s : c)
        sig[s][slot] = static_cast<std::uint32_t>(c.size());
  };
  fill(o.a(), 0);
  fill(o.b(), 1);
  fill(o.turn(), 2);
  return sig;
}

// Extends 0 -> start to a full isomorphism if one exists.
std::optional<Perm> extend_from(const Origami &from, const Origami &to, std::uint32_t start) {
  constexpr std::uint32_t unset = UINT32_MAX;
  const std::size_t n = from.size();
  Perm map(n, unset);
  std::vector<char> hit(n, 0);
  std::vector<std::uint32_t> queue{0};
  map[0] = start;
  hit[start] = 1;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t s = queue[head];
    std::uint32_t t = map[s];
    const std::array<std::pair<std::uint32_t, std::uint32_t>, 4> steps{{
      {from.a()[s], to.a()[t]},
      {from.a_inv()[s], to.a_inv()[t]},
      {from.b()[s], to.b()[t]},
      {from.b_inv()[s], to.b_inv()[t]},
    }};
    for (auto [fs, ts] : steps) {
      if (map[fs] == unset) {
        if (hit[ts])
          return std::nullopt;
        map[fs] = ts;
        hit[ts] = 1;
        queue.push_back(fs);
      } else if (map[fs] != ts) {
        return std::nullopt;
      }
    }
  }
  return map;
}

} // namespace

std::vector<Perm> isomorphisms(const Origami &from, const Origami &to) {
  std::vector<Perm> out;
  if (from.size() != to.size())
    return out;
  auto sf = square_signature(from);
  auto st = square_signature(to);
  for (std::uint32_t t = 0; t < to.size(); ++t) {
    if (sf[0] != st[t])
      continue;
    if (auto m = extend_from(from, to, t))
      out.push_back(std::move(*m));
  }
  return out;
}

std::optional<Perm> is_isomorphic(const Origami &from, const Origami &to) {
  if (from.size() != to.size())
    return std::nullopt;
  if (cycle_type(from.a()) != cycle_type(to.a()) || cycle_type(from.b()) != cycle_type(to.b()))
    return std::nullopt;
  auto sf = square_signature(from);
  auto st = square_signature(to);
  for (std::uint32_t t = 0; t < to.size(); ++t) {
    if (sf[0] != st[t])
      continue;
    if (auto m = extend_from(from, to, t))
      return m;
  }
  return std::nullopt;
}

TranslationGroup translations(const Origami &o) {
  TranslationGroup g;
  g.elements = isomorphisms(o, o);
  for (const auto &e : g.elements)
    ++g.order_profile[order(e)];
  return g;
}

// Text format

std::string to_text(const Origami &o) {
  std::ostringstream os;
  os << "origami n=" << o.size() << '\n';
  os << 'a';
  for (auto v : o.a())
    os << ' ' << v + 1;
  os << "\nb";
  for (auto v : o.b())
    os << ' ' << v + 1;
  os << '\n';
  return os.str();
}

Origami parse_origami(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::optional<Perm> a, b;

  auto parse_images = [&](std::istringstream &ls, char tag) {
    if (!n)
      throw std::invalid_argument("origami text: '" + std::string(1, tag) +
                                  "' line before header");
    Perm p;
    long v;
    while (ls >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > *n)
        throw std::invalid_argument("origami text: image " + std::to_string(v) + " out of range");
      p.push_back(static_cast<std::uint32_t>(v - 1));
    }
    if (!ls.eof())
      throw std::invalid_argument("origami text: non-numeric entry on '" + std::string(1, tag) +
                                  "' line");
    if (p.size() != *n)
      throw std::invalid_argument("origami text: '" + std::string(1, tag) + "' line has " +
                                  std::to_string(p.size()) + " entries, expected " +
                                  std::to_string(*n));
    return p;
  };

  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line.substr(first));
    std::string tag;
    ls >> tag;
    if (tag == "origami") {
      std::string field;
      ls >> field;
      if (field.rfind("n=", 0) != 0)
        throw std::invalid_argument("origami text: header must be 'origami n=<n>'");
      try {
        long v = std::stol(field.substr(2));
        if (v < 1)
          throw std::invalid_argument("");
        n = static_cast<std::size_t>(v);
      } catch (const std::exception &) {
        throw std::invalid_argument("origami text: bad square count '" + field + "'");
      }
    } else if (tag == "a") {
      a = parse_images(ls, 'a');
    } else if (tag == "b") {
      b = parse_images(ls, 'b');
    } else {
      throw std::invalid_argument("origami text: unexpected line '" + line + "'");
    }
  }
  if (!n || !a || !b)
    throw std::invalid_argument("origami text: missing header, 'a' or 'b' line");
  return Origami(std::move(*a), std::move(*b));
}

Origami read_origami(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_origami(ss.str());
}

void write_origami(const std::string &path, const Origami &o) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << to_text(o);
}

} // namespace origami
