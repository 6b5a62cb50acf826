#pragma once
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ctam/arcdiag.hpp"
#include "ctam/tibit.hpp"
#include "ctam/tito.hpp"

namespace ctam {

enum class Variant { cyclic, affine };

// Fully materialized finite lattice; immutable once built, safe to query
// concurrently.  Elements are keyed by their canonical arc diagrams (the
// right-edge classes of the tree form), in ascending key order.
struct LatticeModel {
  Variant variant = Variant::cyclic;
  int n = 0;

  std::vector<Tibit> trees;
  std::vector<Tito> titos;   // 312-avoiding representatives (post-orders)
  std::vector<ArcSet> arcs;  // canonical keys
  std::map<ArcSet, int> index;

  std::vector<std::vector<int>> up_covers, down_covers;
  int bottom = -1, top = -1;

  std::vector<Refl> jirr;        // join-irreducible labels, ascending
  std::vector<int> jirr_elem;    // element realizing each label
  std::vector<int> kappa_table;  // generic kappa of each join-irreducible
  std::map<std::pair<int, int>, Refl> edge_label;  // cover (lo, hi) -> label
  std::vector<int> row_table;    // rowmotion permutation

  // dense reachability rows, kept only when size() <= kOrderDense; queries
  // fall back to cover-graph searches otherwise
  std::vector<std::uint64_t> order_up, order_down;
  int order_words = 0;

  int size() const { return int(trees.size()); }
};

inline constexpr int kOrderDense = 1000;

LatticeModel build(int n, Variant v);

int find_element(const LatticeModel& L, const ArcSet& D);  // -1 when absent
int find_element(const LatticeModel& L, const Tibit& T);
int find_element(const LatticeModel& L, const Tito& t);

bool leq(const LatticeModel& L, int x, int y);
int meet(const LatticeModel& L, int x, int y);  // bound certified unique
int join(const LatticeModel& L, int x, int y);

bool check_semidistributive(const LatticeModel& L);  // exhaustive triples
bool check_selfdual(const LatticeModel& L);          // cover-reversing witness
int dual_element(const LatticeModel& L, int u);      // the witness map

Refl edge_label_of(const LatticeModel& L, int x, int y);  // covers only
ArcSet can_join_rep(const LatticeModel& L, int u);        // down-edge labels
ArcSet can_meet_rep(const LatticeModel& L, int u);        // up-edge labels

int rowmotion(const LatticeModel& L, int u);
std::vector<std::vector<int>> row_orbits(const LatticeModel& L);

struct Quotient {
  LatticeModel affine;
  std::vector<int> image;                // cyclic id -> affine id
  std::vector<std::vector<int>> fibers;  // affine id -> cyclic ids, ascending
};
Quotient quotient_to_affine(const LatticeModel& cyc);

}  // namespace ctam
