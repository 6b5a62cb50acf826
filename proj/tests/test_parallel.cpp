#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "ctam/ncpart.hpp"
#include "ctam/parallel.hpp"
#include "doctest.h"

using namespace ctam;

namespace {

const LatticeModel& model(int n, Variant v) {
  static std::map<std::pair<int, int>, LatticeModel> cache;
  const auto key = std::make_pair(n, int(v));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build(n, v)).first;
  return it->second;
}

const OpTables& tables(int n, Variant v) {
  static std::map<std::pair<int, int>, OpTables> cache;
  const auto key = std::make_pair(n, int(v));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, op_tables_serial(model(n, v))).first;
  return it->second;
}

// the five-element modular diamond: a lattice, but not semidistributive
OpTables diamond_tables() {
  OpTables T;
  T.size = 5;  // 0 bottom, 1..3 atoms, 4 top
  T.meet.assign(25, 0);
  T.join.assign(25, 4);
  for (int x = 0; x < 5; x++) {
    T.meet[size_t(x) * 5 + size_t(x)] = x;
    T.join[size_t(x) * 5 + size_t(x)] = x;
    T.meet[size_t(x) * 5 + 4] = x;
    T.meet[20 + size_t(x)] = x;
    T.join[size_t(x) * 5 + 0] = x;
    T.join[size_t(x)] = x;
  }
  return T;
}

i64 row_order(const LatticeModel& L) {
  i64 l = 1;
  for (const auto& orb : row_orbits(L)) l = std::lcm(l, i64(orb.size()));
  return l;
}

}  // namespace

TEST_CASE("meet and join tables agree between modes") {
  for (int n = 2; n <= 4; n++)
    for (Variant v : {Variant::cyclic, Variant::affine}) {
      const LatticeModel& L = model(n, v);
      const OpTables& T = tables(n, v);
      CHECK(op_tables_parallel(L) == T);
      for (int x = 0; x < L.size(); x += 3)
        for (int y = 0; y < L.size(); y += 5) {
          CHECK(T.meet_at(x, y) == meet(L, x, y));
          CHECK(T.join_at(x, y) == join(L, x, y));
        }
      for (int x = 0; x < L.size(); x++) {
        CHECK(T.meet_at(L.bottom, x) == L.bottom);
        CHECK(T.join_at(L.top, x) == L.top);
      }
    }
  CHECK(op_tables_parallel(model(5, Variant::cyclic)) == tables(5, Variant::cyclic));
}

TEST_CASE("the lattice axioms hold over the full tables") {
  for (int n = 2; n <= 4; n++)
    for (Variant v : {Variant::cyclic, Variant::affine}) {
      const OpTables& T = tables(n, v);
      CHECK(law_violations_serial(T) == 0);
      CHECK(law_violations_parallel(T) == 0);
    }
  CHECK(law_violations_parallel(tables(5, Variant::affine)) == 0);
  CHECK(law_violations_serial(diamond_tables()) == 0);
}

TEST_CASE("semidistributivity scans count zero violations") {
  for (int n = 2; n <= 4; n++)
    for (Variant v : {Variant::cyclic, Variant::affine}) {
      const OpTables& T = tables(n, v);
      CHECK(sd_violations_serial(T) == 0);
      CHECK(sd_violations_parallel(T) == 0);
    }
  CHECK(sd_violations_parallel(tables(5, Variant::cyclic)) == 0);

  // negative control: the diamond fails both implications, and both modes
  // report the same nonzero count
  const OpTables D = diamond_tables();
  const std::uint64_t faults = sd_violations_serial(D);
  CHECK(faults > 0);
  CHECK(sd_violations_parallel(D) == faults);
}

TEST_CASE("sampled triple scans match across modes and find nothing") {
  const LatticeModel& L = model(5, Variant::cyclic);
  const std::uint64_t a = law_violations_sampled(L, 20000, 42, false);
  const std::uint64_t b = law_violations_sampled(L, 20000, 42, true);
  CHECK(a == 0);
  CHECK(a == b);
  CHECK(law_violations_sampled(L, 20000, 7, true) == 0);
  CHECK(law_violations_sampled(model(4, Variant::affine), 20000, 42, true) == 0);
}

TEST_CASE("rowmotion fixed-point counts match the orbit computation") {
  for (int n = 2; n <= 4; n++)
    for (Variant v : {Variant::cyclic, Variant::affine}) {
      const LatticeModel& L = model(n, v);
      const i64 omega = row_order(L);
      const auto naive = row_fixed_serial(L, omega);
      const auto threaded = row_fixed_parallel(L, omega);
      CHECK(naive == threaded);
      CHECK(naive[0] == L.size());
      const auto rep = csp_verify(L.row_table, omega, QPoly(0));
      CHECK(naive == rep.fixed);
    }
  CHECK_THROWS_AS(row_fixed_serial(model(2, Variant::cyclic), 0), std::invalid_argument);

  // doubling the window repeats the counts with period equal to the order
  const LatticeModel& L = model(3, Variant::affine);
  const i64 omega = row_order(L);
  const auto once = row_fixed_serial(L, omega);
  const auto twice = row_fixed_parallel(L, 2 * omega);
  for (i64 k = 0; k < omega; k++) {
    CHECK(twice[size_t(k)] == once[size_t(k)]);
    CHECK(twice[size_t(k + omega)] == once[size_t(k)]);
  }
}
