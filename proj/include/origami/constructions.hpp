#pragma once

#include <string>
#include <utility>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

/// Provenance of a square: coset i (1..12), row h (1..4), copy j, sheet l.
/// Fields that do not apply are -1.
struct SquareLabel {
  int i = -1;
  int h = -1;
  int j = -1; // 0-based; printed copy numbers are j + 1
  int l = -1;
  friend bool operator==(const SquareLabel &, const SquareLabel &) = default;
};

struct LabeledOrigami {
  Origami origami;
  std::vector<SquareLabel> square_labels;
  std::vector<Vertex> vertices; // with symbolic labels where known
  int k = 0;

  const Vertex &vertex(const std::string &label) const;
  // Square carrying the given label; throws if absent.
  std::uint32_t square(const SquareLabel &label) const;
};

LabeledOrigami build_E2();
LabeledOrigami build_X();

struct YBuild {
  LabeledOrigami y;
  Covering q; // Y(k) -> X
};

struct ZBuild {
  LabeledOrigami z;
  Covering r; // Z_k -> Y(k)
};

// Copy index of the X-square (i, h) in the square labels of Y(k), relative to
// the coset drift: a square with coset point (i, d) lies in copy d - offset.
int copy_offset(int i, int h);

YBuild build_Y(int k);
ZBuild build_Z(int k);

// The gluing maps of Z_k before the connectivity check; with_cocycles=false
// drops both cocycles.
std::pair<Perm, Perm> build_Z_maps(int k, bool with_cocycles);

// p: X -> E[2]
Covering covering_p(const LabeledOrigami &x, const LabeledOrigami &e2);

// The published 576-square permutation pair.
Origami z3_reference();

// Sidecar table "labels n=<n>" followed by "<square> <i> <h> <j> <l>" rows;
// j is printed 1-based and inapplicable fields as '-'.
std::string labels_text(const LabeledOrigami &o);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool pass() const;
};

struct RamificationCertificate {
  int k = 0;
  bool distinct_over_base = false;
  bool distinguished_over_x = false;
  bool distinguished_p_copy = false;
  bool distinguished_r_vertex = false;
  bool expected_multisets = false;
  bool riemann_hurwitz = false;
  RamData rm_p, rm_q, rm_r, rm_s;   // over E[2] for p o q o r
  RamData rm_p1, rm_q1;             // over X for q o r
  std::vector<RamData> rm_p_other, rm_q_other;
  int ramified_p_copy = -1;         // copy j with distinguished rm(P1^j, r)
  RamData rm_r11;
  bool conclusion() const { return distinct_over_base && distinguished_over_x && distinguished_p_copy && distinguished_r_vertex; }
};

RamificationCertificate ramification_check(int k);

// Affine maps with derivative T^2, L^2, -I on Y(k) against the tabulated vertex permutations.
CheckReport verify_affine_y(int k);
// The analogous pinned facts on X for T, L, T^2, L^2, -I.
CheckReport verify_affine_x();
CheckReport verify_z3_reference();

} // namespace origami
