#include "origami/origami.hpp"

#include <stdexcept>

namespace origami {

Acted shear(Generator g, long e, const Origami &o) {
  switch (g) {
  case Generator::T:
    return {Origami(o.a(), compose(o.b(), power(o.a(), -e))), identity_perm(o.size())};
  case Generator::L:
    return {Origami(compose(o.a(), power(o.b(), -e)), o.b()), identity_perm(o.size())};
  default:
    throw std::invalid_argument("shear: only T and L have powers");
  }
}

Acted sl2_action(Generator g, const Origami &o) {
  switch (g) {
  case Generator::T:
  case Generator::L:
    return shear(g, 1, o);
  case Generator::S: {
    // Quarter turn: the old right neighbour lies above, the old upper one to the left.
    Perm a = o.b_inv();
    Perm corner = a;
    return {Origami(std::move(a), o.a()), std::move(corner)};
  }
  case Generator::minus_identity: {
    Origami r(o.a_inv(), o.b_inv());
    Perm corner(o.size());
    for (std::uint32_t s = 0; s < o.size(); ++s)
      corner[s] = r.b()[r.a()[s]];
    return {std::move(r), std::move(corner)};
  }
  }
  throw std::logic_error("unknown generator");
}

namespace {

struct Step {
  Generator g;
  long e;
};

long to_long(const BigInt &v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw std::overflow_error("matrix_action: shear exponent out of range");
  return static_cast<long>(v);
}

// Factors M into T^e, L^e, S and -I; steps are listed in application order.
std::vector<Step> factor(const Mat2 &m) {
  if (m.det() != 1)
    throw std::invalid_argument("matrix_action: determinant of " + m.to_string() + " is not 1");

  BigInt a = m.a, b = m.b, c = m.c, d = m.d;
  std::vector<Step> left; // M = left[0] left[1] ... * rest
  while (a != 0 && c != 0) {
    if (abs(a) >= abs(c)) {
      BigInt q = a / c;
      a -= q * c;
      b -= q * d;
      left.push_back({Generator::T, to_long(q)});
    } else {
      BigInt q = c / a;
      c -= q * a;
      d -= q * b;
      left.push_back({Generator::L, to_long(q)});
    }
  }

  std::vector<Step> steps;
  if (c == 0) {
    // (s b; 0 s) = s T^(s b)
    long s = a == 1 ? 1 : -1;
    steps.push_back({Generator::T, to_long(s * b)});
    if (s < 0)
      steps.push_back({Generator::minus_identity, 1});
  } else {
    // (0 b; c d) = S (c d; 0 -b) with c = -b = +-1
    long s = c == 1 ? 1 : -1;
    steps.push_back({Generator::T, to_long(s * d)});
    if (s < 0)
      steps.push_back({Generator::minus_identity, 1});
    steps.push_back({Generator::S, 1});
  }
  for (auto it = left.rbegin(); it != left.rend(); ++it)
    steps.push_back(*it);
  return steps;
}

} // namespace

Acted matrix_action(const Mat2 &m, const Origami &o) {
  Acted cur{o, identity_perm(o.size())};
  for (const Step &st : factor(m)) {
    if (st.e == 0)
      continue;
    Acted next = (st.g == Generator::T || st.g == Generator::L) ? shear(st.g, st.e, cur.origami)
                                                                  : sl2_action(st.g, cur.origami);
    cur = {std::move(next.origami), compose(next.corner, cur.corner)};
  }
  return cur;
}

bool veech_contains(const Mat2 &m, const Origami &o) {
  return is_isomorphic(matrix_action(m, o).origami, o).has_value();
}

Perm induced_vertex_map(const Origami &o, const Acted &acted, const Perm &iso) {
  auto vs = vertices(o);
  auto idx = vertex_index(o, vs);
  Perm map(vs.size());
  for (std::uint32_t v = 0; v < vs.size(); ++v)
    map[v] = idx[iso[acted.corner[vs[v].squares.front()]]];
  return map;
}

} // namespace origami
