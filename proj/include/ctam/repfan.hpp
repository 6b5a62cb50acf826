#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ctam/arcdiag.hpp"
#include "ctam/base.hpp"
#include "ctam/tibit.hpp"
#include "ctam/tito.hpp"

namespace ctam {

// Relations between the bricks M_{a,b} (a < b <= a+n) of the affine path
// algebra, computed directly from index arithmetic.
struct BrickRel {
  bool quotient = false;   // x is a quotient of y
  bool submodule = false;  // x is a submodule of y
  bool hom = false;        // a nonzero map x -> y exists
  bool ext1 = false;       // Ext^1(x, y) != 0
};
BrickRel brick_rel(const Refl& x, const Refl& y, int n);

// Arcs on the annulus with n marked points on the boundary.  A plain arc
// a_{a,b} joins marks a and b (b - a = n - 1 is the plain radial arc); a
// notched radial arc r_a carries a tag at its inner endpoint.
struct TaggedArc {
  bool notched = false;
  i64 a = 0, b = 0;  // plain: 1 <= a <= n, a < b <= a+n-1; notched: b == a

  friend bool operator==(const TaggedArc&, const TaggedArc&) = default;
  friend bool operator<(const TaggedArc& x, const TaggedArc& y) {
    if (x.notched != y.notched) return x.notched < y.notched;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};
TaggedArc plain_arc(i64 a, i64 b, int n);
TaggedArc notched_arc(i64 a, int n);
bool tagged_compatible(const TaggedArc& x, const TaggedArc& y, int n);

// Brick summands of the support tau-tilting module attached to a closed arc
// set: the arcs of D admitting no self-extension witness inside D.
std::set<Refl> stau_tilting(const ArcSet& D, int n);

// Tagged triangulation attached to a closed arc set: one plain arc per
// summand plus a notched radial arc at every uncovered mark.  Always exactly
// n pairwise compatible arcs.
std::set<TaggedArc> triangulation(const ArcSet& D, int n);

// g-vectors, written in the fundamental-weight basis (entry r-1 is the
// coefficient of the weight at residue r).
using GVector = std::vector<i64>;
GVector g_vector(const TaggedArc& x, int n);

// Columns of the c-matrix of a real tree: lower walls of its post order
// followed by negated upper walls of the reverse post order of its spine
// lift, each expanded in the basis of consecutive root differences.
std::vector<std::vector<i64>> c_matrix(const Tibit& T);

// Column set of the inverse transpose of the c-matrix.
std::set<GVector> g_from_cmatrix(const Tibit& T);

// Weight of the principal down-set of node z: the set {x : v_x <= v_z} is a
// translate-free interval and contributes a weight difference, a single
// weight, or a negated weight according to its shape.
GVector varpi_Tz(const Tibit& T, i64 z);
std::set<GVector> g_of_tree(const Tibit& T);

// A translation-periodic stability vector: theta(0) = 0 and
// theta(i) - theta(i+1) = coord[res(i) - 1], so theta(i+n) = theta(i) - s
// with s the coordinate sum.  Pairing with a brick: <theta, M_{a,b}> =
// theta(a) - theta(b).
struct ThetaVector {
  int n = 0;
  std::vector<Rat> coord;  // coordinates in the fundamental-weight basis

  Rat at(i64 i) const;

  friend bool operator==(const ThetaVector&, const ThetaVector&) = default;
};
ThetaVector theta_from_ints(int n, const std::vector<i64>& v);

// Regular: the values theta(0..2n) are pairwise distinct.
bool theta_regular(const ThetaVector& t);

// theta lies in the closed cone of T: theta(i) <= theta(j) whenever
// v_i <= v_j in T (finite check over representatives).
bool theta_compatible(const ThetaVector& t, const Tibit& T);

// Torsion class of a regular stability vector: the real arcs gamma_{a,b}
// with theta(a) > theta(b') for every a < b' <= b.
ArcSet torsion_from_theta(const ThetaVector& t);

// A regular vector interior to the cone of T.
ThetaVector make_regular_theta(const Tibit& T);
std::vector<ThetaVector> sample_compatible_thetas(const Tibit& T, int count,
                                                  std::uint64_t seed);

}  // namespace ctam
