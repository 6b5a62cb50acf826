#pragma once
#include <map>
#include <set>
#include <vector>

#include "ctam/lattice.hpp"

namespace ctam {

// lengths of maximal chains (all of which run bottom to top along covers),
// with the exact number of chains realizing each length
struct ChainSpectrum {
  std::set<int> lengths;
  std::map<int, BigUint> count_by_len;

  int min_length() const { return *lengths.begin(); }
  int max_length() const { return *lengths.rbegin(); }
};

ChainSpectrum length_spectrum(const LatticeModel& L);

// the affine spectrum shifted up by one equals the cyclic spectrum
bool shift_check(const LatticeModel& Lc, const LatticeModel& La);

// number of minimum-length maximal chains; reported against n!, never asserted
BigUint min_chain_count(const LatticeModel& L);

// ornament of residue i is the cyclic interval {i, i+1, ..., i+len[i]-1},
// the full cycle when len[i] == n; hanging at i is built into the shape
struct Ornamentation {
  int n = 0;
  std::vector<int> len;

  friend bool operator==(const Ornamentation&, const Ornamentation&) = default;
  friend bool operator<(const Ornamentation& x, const Ornamentation& y) {
    return x.n != y.n ? x.n < y.n : x.len < y.len;
  }
};

// validates sizes and the nesting rule; throws naming the violated clause
Ornamentation make_ornamentation(int n, const std::vector<int>& lengths);

std::set<i64> ornament_set(const Ornamentation& r, i64 i);  // residues 1..n
bool orn_leq(const Ornamentation& x, const Ornamentation& y);
std::vector<Ornamentation> ornamentations(int n);

// arcs from each residue to the rest of its ornament; an arc torsion class
ArcSet orn_to_arcs(const Ornamentation& r);

// pointwise containment order == torsion-class order on the images
bool orn_poset_iso_check(int n);

// explicit chain of maximum length n(n+1)/2 - 1, ascending from all-singleton
// to all-full; consecutive covers and the length are verified before returning
std::vector<Ornamentation> witness_max_chain(int n);

}  // namespace ctam
