#pragma once
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctam/tito.hpp"

namespace ctam {

// Translation-invariant binary in-ordered tree of period n, stored as the
// parent-offset table: parent(v_j) = v_{j + d_{res(j)}}, and a child is a left
// child exactly when its offset is positive.
struct Tibit {
  int n = 0;
  std::vector<int> d;  // offset of residue r at d[r-1]; nonzero, |d| <= n

  int off(i64 j) const { return d[size_t(res1(j, n)) - 1]; }
  i64 parent(i64 j) const { return j + off(j); }
  std::optional<i64> left_child(i64 j) const;
  std::optional<i64> right_child(i64 j) const;

  friend bool operator==(const Tibit&, const Tibit&) = default;
  friend bool operator<(const Tibit& a, const Tibit& b) {
    return a.n != b.n ? a.n < b.n : a.d < b.d;
  }
};

bool validate_tibit(int n, const std::vector<int>& d,
                    std::vector<std::string>* why = nullptr);
Tibit make_tibit(int n, std::vector<int> d);  // throws on invalid tables

std::vector<int> spine_residues(const Tibit& T);  // unique residue cycle, ascending
int spine_sign(const Tibit& T);                   // +1: spine ascends by n per period

// Window classes plus per-residue-pair tail flags; a tail (r,s) records that
// (r, s+kn) belongs to the set for all sufficiently large k.
struct ClassSet {
  std::set<Refl> window;
  std::set<std::pair<int, int>> tails;
  bool subset_of(const ClassSet& o) const;
  friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

Tibit insertion_tree(int n, const std::function<bool(i64, i64)>& prec);
Tibit insertion_tree(const Tito& t);
Tito post_order(const Tibit& T);          // the 312-avoiding linear extension
Tito reverse_post_order(const Tibit& T);  // the 132-avoiding linear extension
Tibit omega_tibit(const Tibit& T);
bool is_descendant(const Tibit& T, i64 b, i64 a);  // v_b descendant of v_a (or b == a)
ClassSet inversions(const Tibit& T, int far = 5);  // (a,b): v_b descendant of v_a
ClassSet versions(const Tibit& T, int far = 5);    // (a,b): v_a descendant of v_b
ClassSet tito_inversions(const Tito& t);

bool tibit_real(const Tibit& T);     // no node's parent is its own downward n-translate
bool tibit_co_real(const Tibit& T);
Tibit pispine_down(const Tibit& T);  // flip a one-residue descending spine; else identity
Tibit pispine_up(const Tibit& T);

// Classical rotation at the edge class whose child residue is `child_residue`,
// applied simultaneously at all translates; up needs a left edge, down a right
// edge, and edges of full span n are handled by the spine flips instead.
Tibit rotate(const Tibit& T, int child_residue, bool up);
std::vector<std::pair<int, Tibit>> up_moves(const Tibit& T);    // covers above T
std::vector<std::pair<int, Tibit>> down_moves(const Tibit& T);  // covers below T

std::vector<Refl> right_edge_arcs(const Tibit& T);  // canonical classes, sorted
std::vector<Tibit> all_tibits(int n);               // enumeration by validation

}  // namespace ctam
