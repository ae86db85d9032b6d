#include "origami/origami.hpp"

#include <algorithm>
#include <stdexcept>

namespace origami {

Covering::Covering(Origami source_, Origami target_, std::vector<std::uint32_t> phi_)
  : source(std::move(source_)), target(std::move(target_)), phi(std::move(phi_)) {
  const std::size_t n = source.size(), m = target.size();
  if (phi.size() != n)
    throw std::invalid_argument("covering: square map has wrong size");
  if (n % m != 0)
    throw std::invalid_argument("covering: " + std::to_string(n) + " squares cannot cover " +
                                std::to_string(m));

  std::vector<std::size_t> fibre(m, 0);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (phi[s] >= m)
      throw std::invalid_argument("covering: square image out of range");
    if (phi[source.a()[s]] != target.a()[phi[s]] || phi[source.b()[s]] != target.b()[phi[s]])
      throw std::invalid_argument("covering: square map does not commute with the gluings at square " +
                                  std::to_string(s + 1));
    ++fibre[phi[s]];
  }
  if (std::any_of(fibre.begin(), fibre.end(), [&](std::size_t f) { return f != n / m; }))
    throw std::invalid_argument("covering: fibres have unequal size");
}

Covering compose(const Covering &first, const Covering &second) {
  if (!(first.target == second.source))
    throw std::invalid_argument("covering: composition of non-matching maps");
  std::vector<std::uint32_t> phi(first.phi.size());
  for (std::size_t s = 0; s < phi.size(); ++s)
    phi[s] = second.phi[first.phi[s]];
  return Covering(first.source, second.target, std::move(phi));
}

namespace {

std::uint32_t index_of(std::uint32_t source_order, std::uint32_t target_order) {
  if (source_order % target_order != 0)
    throw std::invalid_argument("covering: non-integral ramification index " +
                                std::to_string(source_order) + "/" + std::to_string(target_order));
  return source_order / target_order;
}

} // namespace

RamData ram_data(const Covering &c, const Vertex &target_vertex) {
  std::vector<char> over(c.target.size(), 0);
  for (auto s : target_vertex.squares)
    over[s] = 1;

  RamData out;
  for (const auto &w : vertices(c.source))
    if (over[c.phi[w.squares.front()]])
      out.push_back(index_of(w.order, target_vertex.order));
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool rh_check(const Covering &c) {
  auto tv = vertices(c.target);
  auto tidx = vertex_index(c.target, tv);
  long excess = 0;
  for (const auto &w : vertices(c.source)) {
    const Vertex &v = tv[tidx[c.phi[w.squares.front()]]];
    excess += static_cast<long>(index_of(w.order, v.order)) - 1;
  }
  long lhs = 2L * genus(c.source) - 2;
  long rhs = static_cast<long>(c.degree()) * (2L * genus(c.target) - 2) + excess;
  return lhs == rhs;
}

} // namespace origami
