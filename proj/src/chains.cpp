#include "ctam/chains.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ctam {

namespace {

// Kahn order over the cover DAG; every element is reachable from the bottom
std::vector<int> topo_order(const LatticeModel& L) {
  const int sz = L.size();
  std::vector<int> indeg(size_t(sz), 0), order;
  for (int u = 0; u < sz; u++)
    for (int w : L.up_covers[size_t(u)]) indeg[size_t(w)]++;
  order.reserve(size_t(sz));
  for (int u = 0; u < sz; u++)
    if (indeg[size_t(u)] == 0) order.push_back(u);
  for (size_t head = 0; head < order.size(); head++)
    for (int w : L.up_covers[size_t(order[head])])
      if (--indeg[size_t(w)] == 0) order.push_back(w);
  if (int(order.size()) != sz) throw std::logic_error("topo_order: cover graph has a cycle");
  return order;
}

bool lengths_nest(int n, const std::vector<int>& len) {
  for (int j = 1; j <= n; j++) {
    if (len[size_t(j) - 1] == n) continue;  // the full cycle contains everything
    for (int s = 1; s < len[size_t(j) - 1]; s++)
      if (s + len[size_t(res1(j + s, n)) - 1] > len[size_t(j) - 1]) return false;
  }
  return true;
}

}  // namespace

ChainSpectrum length_spectrum(const LatticeModel& L) {
  const std::vector<int> order = topo_order(L);
  const int sz = L.size();

  // longest bottom-to-top path caps every chain length; one word of bits
  std::vector<int> high(size_t(sz), -1);
  high[size_t(L.bottom)] = 0;
  for (int u : order)
    if (high[size_t(u)] >= 0)
      for (int w : L.up_covers[size_t(u)])
        high[size_t(w)] = std::max(high[size_t(w)], high[size_t(u)] + 1);
  const int cap = high[size_t(L.top)];
  if (cap < 0 || cap >= 63) throw std::logic_error("length_spectrum: length cap out of range");

  std::vector<std::uint64_t> reach(size_t(sz), 0);
  std::vector<std::vector<BigUint>> cnt(size_t(sz), std::vector<BigUint>(size_t(cap) + 1));
  reach[size_t(L.bottom)] = 1;
  cnt[size_t(L.bottom)][0] = BigUint(1);
  for (int u : order)
    for (int w : L.up_covers[size_t(u)]) {
      reach[size_t(w)] |= reach[size_t(u)] << 1;
      for (int k = 0; k < cap; k++)
        if (reach[size_t(u)] >> k & 1) cnt[size_t(w)][size_t(k) + 1] += cnt[size_t(u)][size_t(k)];
    }

  ChainSpectrum out;
  for (int k = 0; k <= cap; k++)
    if (reach[size_t(L.top)] >> k & 1) {
      out.lengths.insert(k);
      out.count_by_len[k] = cnt[size_t(L.top)][size_t(k)];
    }
  return out;
}

bool shift_check(const LatticeModel& Lc, const LatticeModel& La) {
  if (Lc.variant != Variant::cyclic || La.variant != Variant::affine || Lc.n != La.n)
    throw std::invalid_argument("shift_check: need cyclic and affine lattices at one period");
  std::set<int> shifted;
  for (int k : length_spectrum(La).lengths) shifted.insert(k + 1);
  return shifted == length_spectrum(Lc).lengths;
}

BigUint min_chain_count(const LatticeModel& L) {
  const ChainSpectrum s = length_spectrum(L);
  return s.count_by_len.at(s.min_length());
}

Ornamentation make_ornamentation(int n, const std::vector<int>& lengths) {
  if (n < 2) throw std::invalid_argument("make_ornamentation: period must be at least 2");
  if (int(lengths.size()) != n)
    throw std::invalid_argument("make_ornamentation: need one ornament per residue");
  for (int l : lengths)
    if (l < 1 || l > n) throw std::invalid_argument("make_ornamentation: ornament size out of range");
  // i in rho(j) must force rho(i) inside rho(j); for intervals hung at their
  // residues this means the offset of i plus the inner length fits
  for (int j = 1; j <= n; j++) {
    if (lengths[size_t(j) - 1] == n) continue;
    for (int s = 1; s < lengths[size_t(j) - 1]; s++) {
      const int i = res1(j + s, n);
      if (s + lengths[size_t(i) - 1] > lengths[size_t(j) - 1])
        throw std::invalid_argument("make_ornamentation: ornament of residue " +
                                    std::to_string(i) + " is not nested inside residue " +
                                    std::to_string(j));
    }
  }
  return Ornamentation{n, lengths};
}

std::set<i64> ornament_set(const Ornamentation& r, i64 i) {
  const int a = res1(i, r.n);
  std::set<i64> out;
  for (int s = 0; s < r.len[size_t(a) - 1]; s++) out.insert(res1(a + s, r.n));
  return out;
}

bool orn_leq(const Ornamentation& x, const Ornamentation& y) {
  if (x.n != y.n) throw std::invalid_argument("orn_leq: periods differ");
  for (size_t i = 0; i < x.len.size(); i++)
    if (x.len[i] > y.len[i]) return false;
  return true;
}

std::vector<Ornamentation> ornamentations(int n) {
  if (n < 2) throw std::invalid_argument("ornamentations: period must be at least 2");
  std::vector<Ornamentation> out;
  std::vector<int> len(size_t(n), 1);
  for (;;) {
    if (lengths_nest(n, len)) out.push_back(Ornamentation{n, len});
    int i = 0;
    while (i < n && len[size_t(i)] == n) len[size_t(i)] = 1, i++;
    if (i == n) break;
    len[size_t(i)]++;
  }
  return out;
}

ArcSet orn_to_arcs(const Ornamentation& r) {
  ArcSet out;
  for (i64 a = 1; a <= r.n; a++)
    for (int s = 1; s < r.len[size_t(a) - 1]; s++) out.insert(Refl{a, a + s});
  return out;
}

bool orn_poset_iso_check(int n) {
  const LatticeModel L = build(n, Variant::affine);
  const std::vector<Ornamentation> orns = ornamentations(n);
  if (int(orns.size()) != L.size()) return false;

  std::map<ArcSet, int> by_torsion;
  for (int u = 0; u < L.size(); u++)
    by_torsion[torsion_arcs(L.titos[size_t(u)], true)] = u;

  std::vector<int> img;
  std::set<int> hit;
  for (const Ornamentation& r : orns) {
    const ArcSet A = orn_to_arcs(r);
    if (closure(A, true, n) != A) return false;
    const auto it = by_torsion.find(A);
    if (it == by_torsion.end()) return false;
    img.push_back(it->second);
    hit.insert(it->second);
  }
  if (int(hit.size()) != L.size()) return false;

  for (size_t i = 0; i < orns.size(); i++)
    for (size_t j = 0; j < orns.size(); j++)
      if (orn_leq(orns[i], orns[j]) != leq(L, img[i], img[j])) return false;
  return true;
}

std::vector<Ornamentation> witness_max_chain(int n) {
  if (n < 2) throw std::invalid_argument("witness_max_chain: period must be at least 2");
  // full ornaments on residues 1..j, singletons beyond
  const auto star = [n](int j) {
    std::vector<int> len(size_t(n), 1);
    for (int i = 1; i <= j; i++) len[size_t(i) - 1] = n;
    return len;
  };

  std::vector<Ornamentation> chain;
  chain.push_back(make_ornamentation(n, star(0)));
  for (int j = 1; j <= n; j++) {
    // grow the ornament of j one residue at a time, then close the cycle
    for (int k = 1; k <= std::min(n - j, n - 2); k++) {
      std::vector<int> len = star(j - 1);
      len[size_t(j) - 1] = k + 1;
      chain.push_back(make_ornamentation(n, len));
    }
    chain.push_back(make_ornamentation(n, star(j)));
  }
  if (int(chain.size()) != n * (n + 1) / 2)
    throw std::logic_error("witness_max_chain: wrong number of steps");

  const std::vector<Ornamentation> all = ornamentations(n);
  for (size_t i = 0; i + 1 < chain.size(); i++) {
    if (chain[i] == chain[i + 1] || !orn_leq(chain[i], chain[i + 1]))
      throw std::logic_error("witness_max_chain: step is not strictly increasing");
    for (const Ornamentation& z : all)
      if (!(z == chain[i]) && !(z == chain[i + 1]) && orn_leq(chain[i], z) &&
          orn_leq(z, chain[i + 1]))
        throw std::logic_error("witness_max_chain: step skips an element");
  }
  return chain;
}

}  // namespace ctam
