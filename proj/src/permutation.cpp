#include "origami/origami.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace origami {

bool is_permutation(const Perm &p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm inverse(const Perm &p) {
  Perm r(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i)
    r[p[i]] = i;
  return r;
}

Perm compose(const Perm &f, const Perm &g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    r[i] = f[g[i]];
  return r;
}

Perm power(const Perm &p, long e) {
  Perm r(p.size());
  for (const auto &cyc : cycles(p)) {
    long len = static_cast<long>(cyc.size());
    long shift = ((e % len) + len) % len;
    for (long i = 0; i < len; ++i)
      r[cyc[i]] = cyc[(i + shift) % len];
  }
  return r;
}

std::vector<std::vector<std::uint32_t>> cycles(const Perm &p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (seen[s])
      continue;
    auto &cyc = out.emplace_back();
    for (std::uint32_t t = s; !seen[t]; t = p[t]) {
      seen[t] = 1;
      cyc.push_back(t);
    }
  }
  return out;
}

std::map<std::uint32_t, std::uint32_t> cycle_type(const Perm &p) {
  std::map<std::uint32_t, std::uint32_t> type;
  for (const auto &c : cycles(p))
    ++type[static_cast<std::uint32_t>(c.size())];
  return type;
}

std::uint32_t order(const Perm &p) {
  std::uint32_t o = 1;
  for (const auto &[len, count] : cycle_type(p))
    o = std::lcm(o, len);
  return o;
}

bool is_transitive(const Perm &a, const Perm &b) {
  if (a.empty())
    return false;
  std::vector<char> seen(a.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  Perm ai = inverse(a), bi = inverse(b);
  while (!stack.empty()) {
    std::uint32_t s = stack.back();
    stack.pop_back();
    for (std::uint32_t t : {a[s], ai[s], b[s], bi[s]}) {
      if (!seen[t]) {
        seen[t] = 1;
        ++reached;
        stack.push_back(t);
      }
    }
  }
  return reached == a.size();
}

std::string format_multiset(const std::vector<std::uint32_t> &values) {
  std::map<std::uint32_t, std::uint32_t, std::greater<>> counts;
  for (auto v : values)
    ++counts[v];
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto &[v, c] : counts) {
    if (!first)
      os << ", ";
    first = false;
    os << v;
    if (c > 1)
      os << '^' << c;
  }
  os << '}';
  return os.str();
}

} // namespace origami
