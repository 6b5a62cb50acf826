#pragma once
#include <cstdint>
#include <vector>

#include "ctam/lattice.hpp"

namespace ctam {

// dense meet/join tables, row-major over element indices
struct OpTables {
  int size = 0;
  std::vector<int> meet;
  std::vector<int> join;

  int meet_at(int x, int y) const { return meet[size_t(x) * size_t(size) + size_t(y)]; }
  int join_at(int x, int y) const { return join[size_t(x) * size_t(size) + size_t(y)]; }

  friend bool operator==(const OpTables&, const OpTables&) = default;
};

OpTables op_tables_serial(const LatticeModel& L);
OpTables op_tables_parallel(const LatticeModel& L);

// violations of the lattice axioms over the whole table: idempotence,
// commutativity, absorption (quadratic part) and associativity (cubic part)
std::uint64_t law_violations_serial(const OpTables& T);
std::uint64_t law_violations_parallel(const OpTables& T);

// violations of the two semidistributive implications over all triples
std::uint64_t sd_violations_serial(const OpTables& T);
std::uint64_t sd_violations_parallel(const OpTables& T);

// sampled variant for lattices too big to cube: draws `samples` triples from
// the seed and checks absorption, associativity and semidistributivity on
// each; the triple stream is pregenerated so both modes count identically
std::uint64_t law_violations_sampled(const LatticeModel& L, std::uint64_t samples,
                                     std::uint64_t seed, bool use_omp);

// fixed points of the k-th rowmotion power for k = 0..omega-1; the serial
// version walks each element naively while the parallel one threads over
// elements, giving two independent checks against orbit-based counts
std::vector<i64> row_fixed_serial(const LatticeModel& L, i64 omega);
std::vector<i64> row_fixed_parallel(const LatticeModel& L, i64 omega);

}  // namespace ctam
