#pragma once
#include <set>
#include <string>
#include <vector>

#include "ctam/base.hpp"
#include "ctam/qpoly.hpp"
#include "ctam/tito.hpp"

namespace ctam {

// set partition of 1..ground, blocks stored ascending
struct NcPartition {
  int ground = 0;
  std::set<std::vector<int>> blocks;
  friend bool operator==(const NcPartition&, const NcPartition&) = default;
  friend bool operator<(const NcPartition& a, const NcPartition& b) {
    return a.ground != b.ground ? a.ground < b.ground : a.blocks < b.blocks;
  }
};

NcPartition make_ncpartition(int ground, const std::set<std::vector<int>>& blocks);
bool nc_noncrossing(const NcPartition& p);
bool nc_type_b(const NcPartition& p, int n);  // ground 2n, invariant under +n
NcPartition rotate_nc(const NcPartition& p, int d);
NcPartition kreweras_A(const NcPartition& p);  // crossing input rejected

// translation-invariant noncrossing partition of Z with period n: canonical
// finite block shapes (min in 1..n, span < n) plus the residues of the unique
// +n-stable infinite block (empty set when there is none)
struct Tincp {
  int n = 0;
  std::set<std::vector<i64>> finite;
  std::set<i64> infinite;
  friend bool operator==(const Tincp&, const Tincp&) = default;
  friend bool operator<(const Tincp& a, const Tincp& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.infinite != b.infinite) return a.infinite < b.infinite;
    return a.finite < b.finite;
  }
};

bool tincp_valid(const Tincp& r, std::string* why = nullptr);
bool tincp_same_block(const Tincp& r, i64 x, i64 y);
Tincp shift_tincp(const Tincp& r, i64 d);

Tincp tincp_of(const Tito& t);  // requires a 312-avoiding input

NcPartition reduce_mod_2n(const Tincp& r);
Tincp unreduce(const NcPartition& p, int n);  // type-B input required

Tincp kreweras_tincp(const Tincp& r);
Tincp kreweras_tincp_inv(const Tincp& r);
Tincp pi_nc_down(const Tincp& r);  // contracts a one-residue periodic block

enum class XiKind { xi, xi_prime, neither };
struct XiClass {
  XiKind kind = XiKind::neither;
  int i = 0;  // residue witness in 1..n when kind != neither
};
XiClass xi_class(const Tincp& r);

NcPartition beta_restrict(const Tincp& r);  // blocks cut down to 1..n-1

struct CspReport {
  i64 omega = 0;
  bool pass = false;
  std::vector<i64> fixed;     // fixed points of op^k, k = 0..omega-1
  std::vector<double> delta;  // |F(zeta^k) - fixed[k]|
};
// op must be a permutation whose order divides omega
CspReport csp_verify(const std::vector<int>& op, i64 omega, const QPoly& F);

}  // namespace ctam
