// Compares the serial reference kernels against their OpenMP counterparts on
// one lattice: table construction, the cubic scans, the sampled scan and the
// rowmotion fixed-point counts.  Usage: ctam_bench [n] [cyclic|affine]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <string>

#include "ctam/lattice.hpp"
#include "ctam/parallel.hpp"

using namespace ctam;
namespace chrono = std::chrono;

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
  return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double omp_ms) {
  std::printf("%-14s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, omp_ms,
              omp_ms > 0 ? serial_ms / omp_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int n = 5;
  Variant v = Variant::cyclic;
  if (argc > 1) n = std::atoi(argv[1]);
  if (argc > 2 && std::strcmp(argv[2], "affine") == 0) v = Variant::affine;
  if (n < 2 || n > 6) {
    std::fprintf(stderr, "period must be between 2 and 6\n");
    return 1;
  }

  auto t0 = chrono::steady_clock::now();
  const LatticeModel L = build(n, v);
  std::printf("lattice: period %d, %s, %d elements (built in %.2f ms)\n", n,
              v == Variant::cyclic ? "cyclic" : "affine", L.size(), ms_since(t0));
  std::printf("%-14s %13s %13s %9s\n", "kernel", "serial", "omp", "speedup");

  t0 = chrono::steady_clock::now();
  const OpTables Ts = op_tables_serial(L);
  const double tab_s = ms_since(t0);
  t0 = chrono::steady_clock::now();
  const OpTables Tp = op_tables_parallel(L);
  const double tab_p = ms_since(t0);
  if (!(Ts == Tp)) {
    std::fprintf(stderr, "table mismatch between modes\n");
    return 1;
  }
  report("op tables", tab_s, tab_p);

  t0 = chrono::steady_clock::now();
  const std::uint64_t law_s = law_violations_serial(Ts);
  const double laws_s = ms_since(t0);
  t0 = chrono::steady_clock::now();
  const std::uint64_t law_p = law_violations_parallel(Ts);
  const double laws_p = ms_since(t0);
  report("lattice laws", laws_s, laws_p);

  t0 = chrono::steady_clock::now();
  const std::uint64_t sd_s = sd_violations_serial(Ts);
  const double sds = ms_since(t0);
  t0 = chrono::steady_clock::now();
  const std::uint64_t sd_p = sd_violations_parallel(Ts);
  const double sdp = ms_since(t0);
  report("sd scan", sds, sdp);

  const std::uint64_t samples = 200000;
  t0 = chrono::steady_clock::now();
  const std::uint64_t smp_s = law_violations_sampled(L, samples, 42, false);
  const double smps = ms_since(t0);
  t0 = chrono::steady_clock::now();
  const std::uint64_t smp_p = law_violations_sampled(L, samples, 42, true);
  const double smpp = ms_since(t0);
  report("sampled scan", smps, smpp);

  i64 omega = 1;
  for (const auto& orb : row_orbits(L)) omega = std::lcm(omega, i64(orb.size()));
  t0 = chrono::steady_clock::now();
  const auto fx_s = row_fixed_serial(L, omega);
  const double fxs = ms_since(t0);
  t0 = chrono::steady_clock::now();
  const auto fx_p = row_fixed_parallel(L, omega);
  const double fxp = ms_since(t0);
  report("row fixed", fxs, fxp);

  const bool clean = law_s == 0 && law_p == 0 && sd_s == 0 && sd_p == 0 &&
                     smp_s == 0 && smp_p == 0 && fx_s == fx_p;
  std::printf("violations: laws %llu/%llu, sd %llu/%llu, sampled %llu/%llu (%llu triples)\n",
              (unsigned long long)law_s, (unsigned long long)law_p, (unsigned long long)sd_s,
              (unsigned long long)sd_p, (unsigned long long)smp_s, (unsigned long long)smp_p,
              (unsigned long long)samples);
  std::printf("rowmotion order %lld, fixed counts %s\n", (long long)omega,
              fx_s == fx_p ? "agree" : "DIFFER");
  return clean ? 0 : 1;
}
