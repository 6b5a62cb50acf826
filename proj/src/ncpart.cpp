#include "ctam/ncpart.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>

#include "ctam/arcdiag.hpp"

namespace ctam {
namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int m) : p(size_t(m)) {
    for (int i = 0; i < m; i++) p[size_t(i)] = i;
  }
  int find(int x) {
    while (p[size_t(x)] != x) x = p[size_t(x)] = p[size_t(p[size_t(x)])];
    return x;
  }
  void unite(int a, int b) { p[size_t(find(a))] = find(b); }
};

// translate so the minimum lands in 1..n
std::vector<i64> canon_shape(const std::set<i64>& s, int n) {
  const i64 shift = i64(n) * floordiv(*s.begin() - 1, n);
  std::vector<i64> out;
  for (i64 x : s) out.push_back(x - shift);
  return out;
}

// two member lists cross iff the merged scan alternates owner at least 4 runs
bool lists_cross(const std::vector<i64>& u, const std::vector<i64>& v) {
  int runs = 0, last = -1;
  size_t a = 0, b = 0;
  while (a < u.size() || b < v.size()) {
    int cur;
    if (b >= v.size() || (a < u.size() && u[a] < v[b])) {
      cur = 0;
      a++;
    } else {
      cur = 1;
      b++;
    }
    if (cur != last) {
      runs++;
      last = cur;
    }
  }
  return runs >= 4;
}

}  // namespace

NcPartition make_ncpartition(int ground, const std::set<std::vector<int>>& blocks) {
  if (ground < 0) throw std::invalid_argument("make_ncpartition: negative ground");
  std::vector<char> seen(size_t(ground) + 1, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("make_ncpartition: empty block");
    if (!std::is_sorted(b.begin(), b.end())) throw std::invalid_argument("make_ncpartition: block not ascending");
    for (int x : b) {
      if (x < 1 || x > ground) throw std::invalid_argument("make_ncpartition: point out of range");
      if (seen[size_t(x)]) throw std::invalid_argument("make_ncpartition: point covered twice");
      seen[size_t(x)] = 1;
    }
  }
  for (int x = 1; x <= ground; x++)
    if (!seen[size_t(x)]) throw std::invalid_argument("make_ncpartition: point not covered");
  return NcPartition{ground, blocks};
}

bool nc_noncrossing(const NcPartition& p) {
  for (auto i = p.blocks.begin(); i != p.blocks.end(); ++i)
    for (auto j = std::next(i); j != p.blocks.end(); ++j) {
      std::vector<i64> u(i->begin(), i->end()), v(j->begin(), j->end());
      if (lists_cross(u, v)) return false;
    }
  return true;
}

bool nc_type_b(const NcPartition& p, int n) {
  if (n < 1 || p.ground != 2 * n) return false;
  for (const auto& b : p.blocks) {
    std::set<int> sh;
    for (int x : b) sh.insert(int(res1(x + n, 2 * n)));
    if (!p.blocks.count(std::vector<int>(sh.begin(), sh.end()))) return false;
  }
  return true;
}

NcPartition rotate_nc(const NcPartition& p, int d) {
  std::set<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::set<int> sh;
    for (int x : b) sh.insert(int(res1(x + d, p.ground)));
    blocks.insert(std::vector<int>(sh.begin(), sh.end()));
  }
  return make_ncpartition(p.ground, blocks);
}

NcPartition kreweras_A(const NcPartition& p) {
  if (!nc_noncrossing(p)) throw std::invalid_argument("kreweras_A: crossing input");
  const int N = p.ground;
  // arcs between consecutive members of each block; they nest or are disjoint
  std::vector<std::pair<int, int>> arcs;
  for (const auto& b : p.blocks)
    for (size_t i = 0; i + 1 < b.size(); i++) arcs.emplace_back(b[i], b[i + 1]);
  // the gap after j belongs to the face under its innermost covering arc
  std::map<int, std::vector<int>> faces;
  for (int g = 1; g <= N; g++) {
    int best = -1, span = N + 1;
    for (size_t a = 0; a < arcs.size(); a++)
      if (arcs[a].first <= g && g < arcs[a].second && arcs[a].second - arcs[a].first < span) {
        best = int(a);
        span = arcs[a].second - arcs[a].first;
      }
    faces[best].push_back(g);
  }
  std::set<std::vector<int>> blocks;
  for (auto& [key, gaps] : faces) blocks.insert(gaps);
  return make_ncpartition(N, blocks);
}

bool tincp_valid(const Tincp& r, std::string* why) {
  auto fail = [&](const char* m) {
    if (why) *why = m;
    return false;
  };
  if (r.n < 1) return fail("period must be positive");
  std::set<i64> seen;
  for (i64 x : r.infinite) {
    if (x < 1 || x > r.n) return fail("infinite residue out of range");
    seen.insert(x);
  }
  for (const auto& s : r.finite) {
    if (s.empty()) return fail("empty block shape");
    if (!std::is_sorted(s.begin(), s.end())) return fail("shape not ascending");
    if (s.front() < 1 || s.front() > r.n) return fail("shape not canonical");
    if (s.back() - s.front() >= r.n) return fail("shape span too wide");
    for (i64 x : s)
      if (!seen.insert(res1(x, r.n)).second) return fail("residue covered twice");
  }
  if (i64(seen.size()) != r.n) return fail("residues not covered");
  // noncrossing over a four-period window; clipping can only hide crossings
  const i64 lo = 1 - r.n, hi = 3 * i64(r.n);
  std::map<int, std::vector<i64>> members;
  int next = 0;
  if (!r.infinite.empty()) {
    const int id = next++;
    for (i64 x = lo; x <= hi; x++)
      if (r.infinite.count(res1(x, r.n))) members[id].push_back(x);
  }
  for (const auto& s : r.finite)
    for (i64 k = -2; k <= 3; k++) {
      std::vector<i64> v;
      for (i64 x : s) {
        const i64 y = x + k * r.n;
        if (y >= lo && y <= hi) v.push_back(y);
      }
      if (!v.empty()) members[next++] = std::move(v);
    }
  for (auto i = members.begin(); i != members.end(); ++i)
    for (auto j = std::next(i); j != members.end(); ++j)
      if (lists_cross(i->second, j->second)) return fail("crossing blocks");
  return true;
}

bool tincp_same_block(const Tincp& r, i64 x, i64 y) {
  const i64 rx = res1(x, r.n), ry = res1(y, r.n);
  const bool ix = r.infinite.count(rx) > 0, iy = r.infinite.count(ry) > 0;
  if (ix || iy) return ix && iy;
  for (const auto& s : r.finite)
    for (i64 m : s)
      if (res1(m, r.n) == rx) {
        const i64 k = x - m;  // multiple of n aligning the shape onto x
        for (i64 m2 : s)
          if (m2 + k == y) return true;
        return false;
      }
  return false;
}

Tincp shift_tincp(const Tincp& r, i64 d) {
  Tincp out;
  out.n = r.n;
  for (i64 x : r.infinite) out.infinite.insert(res1(x + d, r.n));
  for (const auto& s : r.finite) {
    std::set<i64> sh;
    for (i64 x : s) sh.insert(x + d);
    out.finite.insert(canon_shape(sh, r.n));
  }
  return out;
}

Tincp tincp_of(const Tito& t) {
  if (!avoids(t, Pattern::P312)) throw std::invalid_argument("tincp_of: input contains a 312 pattern");
  const int n = t.n;
  const ArcSet d = arc_diagram(t);
  const i64 lo = 1 - 2 * i64(n), hi = 3 * i64(n);
  Dsu dsu(int(hi - lo + 1));
  auto ix = [&](i64 x) { return int(x - lo); };
  for (const Refl& r : d)
    for (i64 k = -3; k <= 4; k++) {
      const i64 a = r.a + k * n, b = r.b + k * n;
      if (a >= lo && b <= hi) dsu.unite(ix(a), ix(b));
    }
  Tincp out;
  out.n = n;
  // a component meeting its own +n translate is the periodic block
  std::set<int> wrapped;
  for (i64 x = lo; x + n <= hi; x++)
    if (dsu.find(ix(x)) == dsu.find(ix(x + n))) wrapped.insert(dsu.find(ix(x)));
  for (i64 x = 1; x <= 2 * n; x++)
    if (wrapped.count(dsu.find(ix(x)))) out.infinite.insert(res1(x, n));
  for (i64 r = 1; r <= n; r++) {
    if (out.infinite.count(r)) continue;
    std::set<i64> comp;
    for (i64 x = lo; x <= hi; x++)
      if (dsu.find(ix(x)) == dsu.find(ix(r))) comp.insert(x);
    if (*comp.rbegin() - *comp.begin() >= n) throw std::logic_error("tincp_of: block span too wide");
    out.finite.insert(canon_shape(comp, n));
  }
  std::string why;
  if (!tincp_valid(out, &why)) throw std::logic_error("tincp_of: " + why);
  return out;
}

NcPartition reduce_mod_2n(const Tincp& r) {
  const int n = r.n, g = 2 * n;
  std::set<std::vector<int>> blocks;
  if (!r.infinite.empty()) {
    std::set<int> b;
    for (i64 x : r.infinite) {
      b.insert(int(res1(x, g)));
      b.insert(int(res1(x + n, g)));
    }
    blocks.insert(std::vector<int>(b.begin(), b.end()));
  }
  for (const auto& s : r.finite)
    for (int half = 0; half < 2; half++) {
      std::set<int> b;
      for (i64 x : s) b.insert(int(res1(x + half * n, g)));
      blocks.insert(std::vector<int>(b.begin(), b.end()));
    }
  return make_ncpartition(g, blocks);
}

Tincp unreduce(const NcPartition& p, int n) {
  if (!nc_type_b(p, n)) throw std::invalid_argument("unreduce: type-B input required");
  Tincp out;
  out.n = n;
  for (const auto& b : p.blocks) {
    std::set<int> shifted;
    for (int x : b) shifted.insert(int(res1(x + n, 2 * n)));
    if (std::equal(shifted.begin(), shifted.end(), b.begin(), b.end())) {
      if (!out.infinite.empty()) throw std::invalid_argument("unreduce: several symmetric blocks");
      for (int x : b) out.infinite.insert(res1(x, n));
      continue;
    }
    // lift across the widest cyclic gap; span < n forces that gap past n
    const int m = int(b.size());
    int cut = 0, widest = b[0] + 2 * n - b[size_t(m) - 1];
    for (int i = 0; i + 1 < m; i++)
      if (b[size_t(i) + 1] - b[size_t(i)] > widest) {
        widest = b[size_t(i) + 1] - b[size_t(i)];
        cut = i + 1;
      }
    if (widest <= n) throw std::invalid_argument("unreduce: block admits no narrow lift");
    std::set<i64> s;
    for (int i = 0; i < m; i++) s.insert(i64(b[size_t(i)]) + (i < cut ? 2 * n : 0));
    out.finite.insert(canon_shape(s, n));
  }
  std::string why;
  if (!tincp_valid(out, &why)) throw std::logic_error("unreduce: " + why);
  return out;
}

Tincp kreweras_tincp(const Tincp& r) { return unreduce(kreweras_A(reduce_mod_2n(r)), r.n); }

Tincp kreweras_tincp_inv(const Tincp& r) { return shift_tincp(kreweras_tincp(r), 1); }

Tincp pi_nc_down(const Tincp& r) {
  if (r.infinite.size() != 1) return r;
  const int n = r.n;
  const i64 i0 = *r.infinite.begin();
  // i0 + kn joins the block of i0 + (k+1)n - 1, the top of its gap interval
  const i64 want = res1(i0 - 1, n);
  Tincp out;
  out.n = n;
  for (const auto& s : r.finite) {
    std::set<i64> sh(s.begin(), s.end());
    for (i64 m : s)
      if (res1(m, n) == want) sh.insert(m - n + 1);
    out.finite.insert(canon_shape(sh, n));
  }
  std::string why;
  if (!tincp_valid(out, &why)) throw std::logic_error("pi_nc_down: " + why);
  return out;
}

XiClass xi_class(const Tincp& r) {
  if (r.infinite.size() == 1) return {XiKind::xi_prime, int(*r.infinite.begin())};
  if (r.infinite.empty())
    for (i64 i = 1; i <= r.n; i++)
      if (tincp_same_block(r, i, i + r.n - 1)) return {XiKind::xi, int(i)};
  return {XiKind::neither, 0};
}

NcPartition beta_restrict(const Tincp& r) {
  const int g = r.n - 1;
  std::set<std::vector<int>> blocks;
  std::vector<char> used(size_t(g) + 1, 0);
  for (int x = 1; x <= g; x++) {
    if (used[size_t(x)]) continue;
    std::vector<int> b{x};
    used[size_t(x)] = 1;
    for (int y = x + 1; y <= g; y++)
      if (!used[size_t(y)] && tincp_same_block(r, x, y)) {
        b.push_back(y);
        used[size_t(y)] = 1;
      }
    blocks.insert(b);
  }
  return make_ncpartition(g, blocks);
}

CspReport csp_verify(const std::vector<int>& op, i64 omega, const QPoly& F) {
  const int m = int(op.size());
  std::vector<char> seen(size_t(m), 0);
  for (int v : op) {
    if (v < 0 || v >= m || seen[size_t(v)]) throw std::invalid_argument("csp_verify: not a permutation");
    seen[size_t(v)] = 1;
  }
  if (omega <= 0) throw std::invalid_argument("csp_verify: order must be positive");
  std::vector<i64> orbit_len;
  std::vector<char> used(size_t(m), 0);
  for (int s = 0; s < m; s++) {
    if (used[size_t(s)]) continue;
    i64 len = 0;
    for (int v = s; !used[size_t(v)]; v = op[size_t(v)]) {
      used[size_t(v)] = 1;
      len++;
    }
    if (omega % len != 0) throw std::invalid_argument("csp_verify: operator order does not divide omega");
    orbit_len.push_back(len);
  }
  CspReport rep;
  rep.omega = omega;
  rep.fixed.assign(size_t(omega), 0);
  for (i64 k = 0; k < omega; k++)
    for (i64 len : orbit_len)
      if (k % len == 0) rep.fixed[size_t(k)] += len;
  rep.pass = true;
  for (i64 k = 0; k < omega; k++) {
    const double d = std::abs(F.eval_root(k, omega) - std::complex<double>(double(rep.fixed[size_t(k)]), 0.0));
    rep.delta.push_back(d);
    if (!(d < 1e-6)) rep.pass = false;
  }
  return rep;
}

}  // namespace ctam
