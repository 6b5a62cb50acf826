#include "ctam/parallel.hpp"

#include <random>
#include <stdexcept>

namespace ctam {

namespace {

void fill_row_range(const LatticeModel& L, OpTables& T, int x) {
  const size_t m = size_t(T.size);
  for (int y = x; y < T.size; y++) {
    const int a = meet(L, x, y), b = join(L, x, y);
    T.meet[size_t(x) * m + size_t(y)] = a;
    T.meet[size_t(y) * m + size_t(x)] = a;
    T.join[size_t(x) * m + size_t(y)] = b;
    T.join[size_t(y) * m + size_t(x)] = b;
  }
}

OpTables blank_tables(const LatticeModel& L) {
  OpTables T;
  T.size = L.size();
  T.meet.assign(size_t(T.size) * size_t(T.size), -1);
  T.join.assign(size_t(T.size) * size_t(T.size), -1);
  return T;
}

// one triple's worth of axiom checks, shared by the sampled scan
std::uint64_t triple_faults(const LatticeModel& L, int x, int y, int z) {
  std::uint64_t v = 0;
  if (meet(L, x, join(L, x, y)) != x) v++;
  if (join(L, x, meet(L, x, y)) != x) v++;
  if (meet(L, meet(L, x, y), z) != meet(L, x, meet(L, y, z))) v++;
  if (join(L, join(L, x, y), z) != join(L, x, join(L, y, z))) v++;
  const int my = meet(L, x, y), mz = meet(L, x, z);
  if (my == mz && meet(L, x, join(L, y, z)) != my) v++;
  const int jy = join(L, x, y), jz = join(L, x, z);
  if (jy == jz && join(L, x, meet(L, y, z)) != jy) v++;
  return v;
}

}  // namespace

OpTables op_tables_serial(const LatticeModel& L) {
  OpTables T = blank_tables(L);
  for (int x = 0; x < T.size; x++) fill_row_range(L, T, x);
  return T;
}

OpTables op_tables_parallel(const LatticeModel& L) {
  OpTables T = blank_tables(L);
  // each x owns the unordered pairs {x, y >= x}, so no entry is written twice
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < T.size; x++) fill_row_range(L, T, x);
  return T;
}

std::uint64_t law_violations_serial(const OpTables& T) {
  std::uint64_t v = 0;
  for (int x = 0; x < T.size; x++) {
    if (T.meet_at(x, x) != x) v++;
    if (T.join_at(x, x) != x) v++;
    for (int y = 0; y < T.size; y++) {
      if (T.meet_at(x, y) != T.meet_at(y, x)) v++;
      if (T.join_at(x, y) != T.join_at(y, x)) v++;
      if (T.meet_at(x, T.join_at(x, y)) != x) v++;
      if (T.join_at(x, T.meet_at(x, y)) != x) v++;
      for (int z = 0; z < T.size; z++) {
        if (T.meet_at(T.meet_at(x, y), z) != T.meet_at(x, T.meet_at(y, z))) v++;
        if (T.join_at(T.join_at(x, y), z) != T.join_at(x, T.join_at(y, z))) v++;
      }
    }
  }
  return v;
}

std::uint64_t law_violations_parallel(const OpTables& T) {
  std::uint64_t v = 0;
#pragma omp parallel for schedule(static) reduction(+ : v)
  for (int x = 0; x < T.size; x++) {
    if (T.meet_at(x, x) != x) v++;
    if (T.join_at(x, x) != x) v++;
    for (int y = 0; y < T.size; y++) {
      if (T.meet_at(x, y) != T.meet_at(y, x)) v++;
      if (T.join_at(x, y) != T.join_at(y, x)) v++;
      if (T.meet_at(x, T.join_at(x, y)) != x) v++;
      if (T.join_at(x, T.meet_at(x, y)) != x) v++;
      for (int z = 0; z < T.size; z++) {
        if (T.meet_at(T.meet_at(x, y), z) != T.meet_at(x, T.meet_at(y, z))) v++;
        if (T.join_at(T.join_at(x, y), z) != T.join_at(x, T.join_at(y, z))) v++;
      }
    }
  }
  return v;
}

std::uint64_t sd_violations_serial(const OpTables& T) {
  std::uint64_t v = 0;
  for (int x = 0; x < T.size; x++)
    for (int y = 0; y < T.size; y++)
      for (int z = 0; z < T.size; z++) {
        const int my = T.meet_at(x, y);
        if (my == T.meet_at(x, z) && T.meet_at(x, T.join_at(y, z)) != my) v++;
        const int jy = T.join_at(x, y);
        if (jy == T.join_at(x, z) && T.join_at(x, T.meet_at(y, z)) != jy) v++;
      }
  return v;
}

std::uint64_t sd_violations_parallel(const OpTables& T) {
  std::uint64_t v = 0;
#pragma omp parallel for schedule(static) reduction(+ : v)
  for (int x = 0; x < T.size; x++)
    for (int y = 0; y < T.size; y++)
      for (int z = 0; z < T.size; z++) {
        const int my = T.meet_at(x, y);
        if (my == T.meet_at(x, z) && T.meet_at(x, T.join_at(y, z)) != my) v++;
        const int jy = T.join_at(x, y);
        if (jy == T.join_at(x, z) && T.join_at(x, T.meet_at(y, z)) != jy) v++;
      }
  return v;
}

std::uint64_t law_violations_sampled(const LatticeModel& L, std::uint64_t samples,
                                     std::uint64_t seed, bool use_omp) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, L.size() - 1);
  std::vector<int> t(size_t(samples) * 3);
  for (int& u : t) u = pick(rng);
  std::uint64_t v = 0;
  if (use_omp) {
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : v)
    for (std::int64_t i = 0; i < std::int64_t(samples); i++)
      v += triple_faults(L, t[size_t(i) * 3], t[size_t(i) * 3 + 1], t[size_t(i) * 3 + 2]);
  } else {
    for (std::int64_t i = 0; i < std::int64_t(samples); i++)
      v += triple_faults(L, t[size_t(i) * 3], t[size_t(i) * 3 + 1], t[size_t(i) * 3 + 2]);
  }
  return v;
}

std::vector<i64> row_fixed_serial(const LatticeModel& L, i64 omega) {
  if (omega <= 0) throw std::invalid_argument("row_fixed: order must be positive");
  const int m = L.size();
  std::vector<i64> fixed(size_t(omega), 0);
  fixed[0] = m;
  for (i64 k = 1; k < omega; k++)
    for (int u = 0; u < m; u++) {
      int w = u;
      for (i64 s = 0; s < k; s++) w = L.row_table[size_t(w)];
      if (w == u) fixed[size_t(k)]++;
    }
  return fixed;
}

std::vector<i64> row_fixed_parallel(const LatticeModel& L, i64 omega) {
  if (omega <= 0) throw std::invalid_argument("row_fixed: order must be positive");
  const int m = L.size();
  std::vector<i64> cyc(size_t(m), 0);
#pragma omp parallel for schedule(static)
  for (int u = 0; u < m; u++) {
    i64 len = 1;
    for (int w = L.row_table[size_t(u)]; w != u; w = L.row_table[size_t(w)]) len++;
    cyc[size_t(u)] = len;
  }
  std::vector<i64> fixed(size_t(omega), 0);
  for (int u = 0; u < m; u++)
    for (i64 k = 0; k < omega; k++)
      if (k % cyc[size_t(u)] == 0) fixed[size_t(k)]++;
  return fixed;
}

}  // namespace ctam
