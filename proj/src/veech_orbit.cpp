#include "origami/origami.hpp"

#include <chrono>
#include <sstream>
#include <unordered_map>

#include <omp.h>

namespace origami {

namespace {

using Clock = std::chrono::steady_clock;

const std::array<Mat2, 3> &orbit_moves() {
  static const std::array<Mat2, 3> moves{mat::T(), mat::T().inverse(), mat::S()};
  return moves;
}

Origami move(int g, const Origami &o) {
  switch (g) {
  case 0: return shear(Generator::T, 1, o).origami;
  case 1: return shear(Generator::T, -1, o).origami;
  default: return sl2_action(Generator::S, o).origami;
  }
}

Origami as_origami(const CanonicalForm &f) { return Origami(f.a, f.b); }

class OrbitBuilder {
public:
  OrbitBuilder(const Origami &o, const OrbitLimits &limits) : limits_(limits), start_(Clock::now()) {
    add(canonical_form(o), mat::identity());
  }

  // Adds the image of node v under move g; returns false when a limit stops the search.
  bool record(std::size_t v, int g, CanonicalForm &&child) {
    const Mat2 &gm = orbit_moves()[g];
    auto it = index_.find(child);
    if (it == index_.end()) {
      if (out_.orbit_size >= limits_.max_orbit) {
        stop("orbit size limit " + std::to_string(limits_.max_orbit) + " reached");
        return false;
      }
      std::size_t w = add(std::move(child), gm * out_.representatives[v]);
      out_.edges[v][g] = static_cast<std::int64_t>(w);
    } else {
      std::size_t w = it->second;
      out_.edges[v][g] = static_cast<std::int64_t>(w);
      Mat2 s = out_.representatives[w].inverse() * gm * out_.representatives[v];
      if (!s.is_identity() && seen_.emplace(s.to_string(), 0).second)
        out_.stabilizer_generators.push_back(std::move(s));
    }
    return true;
  }

  bool out_of_time() {
    double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    if (elapsed > limits_.budget_seconds) {
      std::ostringstream os;
      os << "budget " << limits_.budget_seconds << " s exhausted";
      stop(os.str());
      return true;
    }
    return false;
  }

  const CanonicalForm &node(std::size_t v) const { return nodes_[v]; }
  std::size_t size() const { return nodes_.size(); }

  VeechOrbit finish() {
    out_.complete = out_.stop_reason.empty();
    return std::move(out_);
  }

private:
  std::size_t add(CanonicalForm f, Mat2 rep) {
    std::size_t w = nodes_.size();
    index_.emplace(f, w);
    nodes_.push_back(std::move(f));
    out_.representatives.push_back(std::move(rep));
    out_.edges.push_back({-1, -1, -1});
    ++out_.orbit_size;
    return w;
  }

  void stop(std::string reason) {
    if (out_.stop_reason.empty())
      out_.stop_reason = std::move(reason);
  }

  OrbitLimits limits_;
  Clock::time_point start_;
  std::vector<CanonicalForm> nodes_;
  std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index_;
  std::unordered_map<std::string, int> seen_;
  VeechOrbit out_;
};

} // namespace

VeechOrbit veech_orbit_serial(const Origami &o, const OrbitLimits &limits) {
  OrbitBuilder b(o, limits);
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b.out_of_time())
      break;
    Origami cur = as_origami(b.node(v));
    for (int g = 0; g < 3; ++g) {
      if (!b.record(v, g, canonical_form_serial(move(g, cur))))
        return b.finish();
    }
  }
  return b.finish();
}

VeechOrbit veech_orbit(const Origami &o, const OrbitLimits &limits) {
  OrbitBuilder b(o, limits);
  std::size_t level_begin = 0;
  while (level_begin < b.size()) {
    if (b.out_of_time())
      break;
    std::size_t level_end = b.size();
    std::size_t count = level_end - level_begin;
    std::vector<CanonicalForm> children(3 * count);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(3 * count); ++t) {
      std::size_t v = level_begin + static_cast<std::size_t>(t) / 3;
      int g = static_cast<int>(t % 3);
      children[t] = canonical_form_serial(move(g, as_origami(b.node(v))));
    }

    // Merge in the same order as the serial search so results do not depend on threads.
    for (std::size_t t = 0; t < 3 * count; ++t) {
      if (!b.record(level_begin + t / 3, static_cast<int>(t % 3), std::move(children[t])))
        return b.finish();
    }
    level_begin = level_end;
  }
  return b.finish();
}

} // namespace origami
