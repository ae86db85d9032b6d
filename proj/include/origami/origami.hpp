#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "origami/group_words.hpp"

namespace origami {

/// Permutation of {0, ..., n-1} stored as an image table.
using Perm = std::vector<std::uint32_t>;

bool is_permutation(const Perm &p);
Perm identity_perm(std::size_t n);
Perm inverse(const Perm &p);
// (f o g)(s) = f(g(s))
Perm compose(const Perm &f, const Perm &g);
Perm power(const Perm &p, long e);
std::vector<std::vector<std::uint32_t>> cycles(const Perm &p);
// Cycle length multiset as length -> count.
std::map<std::uint32_t, std::uint32_t> cycle_type(const Perm &p);
std::uint32_t order(const Perm &p);
bool is_transitive(const Perm &a, const Perm &b);

/// Square-tiled surface: sigma_a(s) is the right neighbour of s, sigma_b(s) the one above.
class Origami {
public:
  // Throws std::invalid_argument unless both maps are bijections of the same
  // size with transitive joint action.
  Origami(Perm a, Perm b);

  // Builds from 1-based disjoint cycles; fixed points may be omitted.
  static Origami from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>> &a,
                             const std::vector<std::vector<std::uint32_t>> &b);

  std::size_t size() const { return a_.size(); }
  const Perm &a() const { return a_; }
  const Perm &b() const { return b_; }
  const Perm &a_inv() const { return a_inv_; }
  const Perm &b_inv() const { return b_inv_; }

  // Counterclockwise turn around the lower-left corner: b a b^-1 a^-1.
  Perm turn() const;

  // Renames square s to pi(s).
  Origami relabeled(const Perm &pi) const;

  friend bool operator==(const Origami &l, const Origami &r) { return l.a_ == r.a_ && l.b_ == r.b_; }

private:
  Perm a_, b_, a_inv_, b_inv_;
};

struct Vertex {
  std::vector<std::uint32_t> squares; // squares with this point as lower-left corner
  std::uint32_t order = 0;            // cone angle is 2 pi order
  std::string label;
};

std::vector<Vertex> vertices(const Origami &o);
// vertex index of the lower-left corner of each square
std::vector<std::uint32_t> vertex_index(const Origami &o, const std::vector<Vertex> &vs);

int genus(const Origami &o);
// Zero orders {order - 1 : order >= 2}, sorted descending.
std::vector<std::uint32_t> stratum(const Origami &o);

enum class Direction { horizontal, vertical };

struct CylinderClass {
  std::uint32_t circumference;
  std::uint32_t count;
  friend bool operator==(const CylinderClass &, const CylinderClass &) = default;
};

std::vector<CylinderClass> cylinders(const Origami &o, Direction dir);
std::size_t cylinder_count(const Origami &o, Direction dir);

// All relabelings psi with psi o sigma_from = sigma_to o psi for both maps.
std::vector<Perm> isomorphisms(const Origami &from, const Origami &to);
std::optional<Perm> is_isomorphic(const Origami &from, const Origami &to);

struct TranslationGroup {
  std::vector<Perm> elements;
  std::map<std::uint32_t, std::uint32_t> order_profile; // element order -> count
};

TranslationGroup translations(const Origami &o);

/// Relabeling-invariant normal form.
struct CanonicalForm {
  Perm a, b;
  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
  friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm &f) const noexcept;
};

// Lexicographically least breadth-first renumbering over all base squares.
// The parallel kernel and the serial reference return identical results.
CanonicalForm canonical_form(const Origami &o);
CanonicalForm canonical_form_serial(const Origami &o);

// Text format: "origami n=<n>", "a <images>", "b <images>", 1-based; '#' comments.
std::string to_text(const Origami &o);
Origami parse_origami(std::string_view text);
Origami read_origami(const std::string &path);
void write_origami(const std::string &path, const Origami &o);

// SL(2,Z) action. The image of the lower-left corner of square s is the
// lower-left corner of square corner[s] of the new origami.
struct Acted {
  Origami origami;
  Perm corner;
};

enum class Generator { T, L, S, minus_identity };

Acted sl2_action(Generator g, const Origami &o);
// T^e or L^e in one step.
Acted shear(Generator g, long e, const Origami &o);
// Affine image of o under M: matrix_action(M1 M2, o) ~ matrix_action(M1, matrix_action(M2, o)).
Acted matrix_action(const Mat2 &m, const Origami &o);
bool veech_contains(const Mat2 &m, const Origami &o);

// Vertex permutation of o induced by the affine map o -> acted -> o, where iso
// is an isomorphism from acted.origami back to o.
Perm induced_vertex_map(const Origami &o, const Acted &acted, const Perm &iso);

struct OrbitLimits {
  std::size_t max_orbit = 1'000'000;
  double budget_seconds = 60.0;
};

struct VeechOrbit {
  std::size_t orbit_size = 0;
  bool complete = false;
  std::string stop_reason; // empty when complete
  std::vector<Mat2> representatives;   // representatives[v] maps o to orbit point v
  std::vector<Mat2> stabilizer_generators;
  // edges[v][g] for g in (T, T^-1, S); -1 when not explored
  std::vector<std::array<std::int64_t, 3>> edges;
};

VeechOrbit veech_orbit(const Origami &o, const OrbitLimits &limits = {});
VeechOrbit veech_orbit_serial(const Origami &o, const OrbitLimits &limits = {});

/// Square-level map between origamis commuting with both gluing maps.
struct Covering {
  Origami source;
  Origami target;
  std::vector<std::uint32_t> phi;

  // Throws std::invalid_argument unless phi commutes with both maps and has
  // constant fibre size.
  Covering(Origami source, Origami target, std::vector<std::uint32_t> phi);

  std::size_t degree() const { return source.size() / target.size(); }
};

Covering compose(const Covering &first, const Covering &second);

// Ramification indices over the target vertex, sorted descending.
using RamData = std::vector<std::uint32_t>;
RamData ram_data(const Covering &c, const Vertex &target_vertex);
bool rh_check(const Covering &c);

std::string format_multiset(const std::vector<std::uint32_t> &values);

} // namespace origami
