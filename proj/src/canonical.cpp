#include "origami/origami.hpp"

#include <omp.h>

namespace origami {

namespace {

constexpr std::uint32_t unset = UINT32_MAX;

struct Scratch {
  std::vector<std::uint32_t> label;
  std::vector<std::uint32_t> order;
  Perm a, b;
  explicit Scratch(std::size_t n) : label(n), order(n), a(n), b(n) {}
};

// Renumbers from base square r and writes the form into scratch.a/b. When a
// current best is given, gives up as soon as the a-part is known to be larger.
// Returns true iff the result is strictly smaller than best (or best is null).
bool renumber(const Origami &o, std::uint32_t r, const CanonicalForm *best, Scratch &sc) {
  const std::size_t n = o.size();
  std::fill(sc.label.begin(), sc.label.end(), unset);
  sc.label[r] = 0;
  sc.order[0] = r;
  std::uint32_t next = 1;
  bool tied = best != nullptr;

  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t s = sc.order[i];
    for (std::uint32_t t : {o.a()[s], o.a_inv()[s], o.b()[s], o.b_inv()[s]}) {
      if (sc.label[t] == unset) {
        sc.label[t] = next;
        sc.order[next++] = t;
      }
    }
    sc.a[i] = sc.label[o.a()[s]];
    sc.b[i] = sc.label[o.b()[s]];
    if (tied) {
      if (sc.a[i] > best->a[i])
        return false;
      if (sc.a[i] < best->a[i])
        tied = false;
    }
  }

  if (!tied)
    return true;
  return sc.b < best->b;
}

} // namespace

CanonicalForm canonical_form_serial(const Origami &o) {
  const std::size_t n = o.size();
  Scratch sc(n);
  CanonicalForm best;
  bool have = false;
  for (std::uint32_t r = 0; r < n; ++r) {
    if (renumber(o, r, have ? &best : nullptr, sc)) {
      best.a = sc.a;
      best.b = sc.b;
      have = true;
    }
  }
  return best;
}

CanonicalForm canonical_form(const Origami &o) {
  const std::size_t n = o.size();
  if (n < 64 || omp_in_parallel())
    return canonical_form_serial(o);

  int threads = omp_get_max_threads();
  std::vector<CanonicalForm> local(threads);
  std::vector<char> have(threads, 0);

#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    Scratch sc(n);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
      if (renumber(o, static_cast<std::uint32_t>(r), have[tid] ? &local[tid] : nullptr, sc)) {
        local[tid].a = sc.a;
        local[tid].b = sc.b;
        have[tid] = 1;
      }
    }
  }

  const CanonicalForm *best = nullptr;
  for (int t = 0; t < threads; ++t)
    if (have[t] && (best == nullptr || local[t] < *best))
      best = &local[t];
  return *best;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm &f) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint32_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto v : f.a)
    mix(v);
  for (auto v : f.b)
    mix(v);
  return static_cast<std::size_t>(h);
}

} // namespace origami
