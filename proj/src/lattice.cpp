#include "ctam/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace ctam {
namespace {

using u64 = std::uint64_t;
using Bits = std::vector<u64>;
using Rows = std::vector<Bits>;
using Adj = std::vector<std::vector<int>>;

int bit_words(int m) { return (m + 63) / 64; }

bool get_bit(const Bits& b, int i) {
  return (b[size_t(i) >> 6] >> (unsigned(i) & 63u)) & 1u;
}

void put_bit(Bits& b, int i) { b[size_t(i) >> 6] |= u64(1) << (unsigned(i) & 63u); }

bool bits_subset(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); w++)
    if (a[w] & ~b[w]) return false;
  return true;
}

Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (size_t w = 0; w < a.size(); w++) r[w] = a[w] & b[w];
  return r;
}

Bits reach_bits(const Adj& adj, int m, int start) {
  Bits out(size_t(bit_words(m)), 0);
  std::vector<int> stack{start};
  put_bit(out, start);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[size_t(v)])
      if (!get_bit(out, w)) {
        put_bit(out, w);
        stack.push_back(w);
      }
  }
  return out;
}

Rows all_rows(const Adj& adj, int m) {
  auto rows = Rows(size_t(m));
  for (int i = 0; i < m; i++) rows[size_t(i)] = reach_bits(adj, m, i);
  return rows;
}

// walk from `from` while a cover-neighbour stays inside S (S contains `from`)
int walk_extreme(const Bits& S, const Adj& step, int from) {
  int c = from;
  for (bool moved = true; moved;) {
    moved = false;
    for (int u : step[size_t(c)])
      if (get_bit(S, u)) {
        c = u;
        moved = true;
        break;
      }
  }
  return c;
}

// the unique element of S whose dom-row contains all of S
int certified_extreme(const Bits& S, const Adj& step, const Rows& dom, int from,
                      const char* what) {
  const int c = walk_extreme(S, step, from);
  if (!bits_subset(S, dom[size_t(c)]))
    throw std::logic_error(std::string(what) + ": bound not unique");
  return c;
}

ArcSet key_of(const Tibit& T) {
  const auto edges = right_edge_arcs(T);
  return ArcSet(edges.begin(), edges.end());
}

Bits upset_of(const LatticeModel& L, int x) {
  if (L.order_words)
    return Bits(L.order_up.begin() + size_t(x) * size_t(L.order_words),
                L.order_up.begin() + size_t(x + 1) * size_t(L.order_words));
  return reach_bits(L.up_covers, L.size(), x);
}

Bits downset_of(const LatticeModel& L, int x) {
  if (L.order_words)
    return Bits(L.order_down.begin() + size_t(x) * size_t(L.order_words),
                L.order_down.begin() + size_t(x + 1) * size_t(L.order_words));
  return reach_bits(L.down_covers, L.size(), x);
}

void check_elem(const LatticeModel& L, int x, const char* what) {
  if (x < 0 || x >= L.size())
    throw std::invalid_argument(std::string(what) + ": element out of range");
}

// covers, extremes, order rows, irreducibles, kappa, edge labels, rowmotion
void finish(LatticeModel& L, const std::set<std::pair<int, int>>& edges) {
  const int m = L.size();
  L.up_covers.assign(size_t(m), {});
  L.down_covers.assign(size_t(m), {});
  for (const auto& [x, y] : edges) {
    L.up_covers[size_t(x)].push_back(y);
    L.down_covers[size_t(y)].push_back(x);
  }
  for (auto& v : L.down_covers) std::sort(v.begin(), v.end());

  L.bottom = L.top = -1;
  for (int i = 0; i < m; i++) {
    if (L.down_covers[size_t(i)].empty()) {
      if (L.bottom >= 0) throw std::logic_error("finish: bottom not unique");
      L.bottom = i;
    }
    if (L.up_covers[size_t(i)].empty()) {
      if (L.top >= 0) throw std::logic_error("finish: top not unique");
      L.top = i;
    }
  }
  if (L.bottom < 0 || L.top < 0) throw std::logic_error("finish: missing extremes");

  const Rows up = all_rows(L.up_covers, m);
  const Rows down = all_rows(L.down_covers, m);
  if (m <= kOrderDense) {
    L.order_words = bit_words(m);
    L.order_up.assign(size_t(m) * size_t(L.order_words), 0);
    L.order_down.assign(size_t(m) * size_t(L.order_words), 0);
    for (int i = 0; i < m; i++)
      for (int w = 0; w < L.order_words; w++) {
        L.order_up[size_t(i) * size_t(L.order_words) + size_t(w)] = up[size_t(i)][size_t(w)];
        L.order_down[size_t(i) * size_t(L.order_words) + size_t(w)] = down[size_t(i)][size_t(w)];
      }
  } else {
    L.order_words = 0;
  }

  L.jirr.clear();
  const i64 top_span = L.variant == Variant::affine ? L.n - 1 : L.n;
  for (i64 a = 1; a <= L.n; a++)
    for (i64 b = a + 1; b <= a + top_span; b++) L.jirr.push_back(Refl{a, b});
  L.jirr_elem.assign(L.jirr.size(), -1);
  for (size_t i = 0; i < L.jirr.size(); i++) {
    const auto it = L.index.find(key_of(insertion_tree(make_jirr(L.jirr[i], L.n))));
    if (it == L.index.end()) throw std::logic_error("finish: irreducible not in table");
    L.jirr_elem[i] = it->second;
  }

  // generic kappa: the unique maximal element above j_* but not above j
  L.kappa_table.assign(L.jirr.size(), -1);
  for (size_t i = 0; i < L.jirr.size(); i++) {
    const int j = L.jirr_elem[i];
    if (L.down_covers[size_t(j)].size() != 1)
      throw std::logic_error("finish: irreducible with several lower covers");
    const int jstar = L.down_covers[size_t(j)][0];
    Bits S = up[size_t(jstar)];
    for (size_t w = 0; w < S.size(); w++) S[w] &= ~up[size_t(j)][w];
    int found = -1, count = 0;
    for (int z = 0; z < m; z++)
      if (get_bit(S, z) && bits_subset(S, down[size_t(z)])) {
        found = z;
        count++;
      }
    if (count != 1) throw std::logic_error("finish: kappa not unique");
    L.kappa_table[i] = found;
  }

  // generic edge labels: j <= y, j not <= x, j v x = y, kappa(j) ^ y = x
  L.edge_label.clear();
  for (int x = 0; x < m; x++)
    for (int y : L.up_covers[size_t(x)]) {
      int hit = -1, hits = 0;
      for (size_t i = 0; i < L.jirr.size(); i++) {
        const int j = L.jirr_elem[i];
        if (!get_bit(up[size_t(j)], y) || get_bit(up[size_t(j)], x)) continue;
        const Bits U = bits_and(up[size_t(x)], up[size_t(j)]);
        if (certified_extreme(U, L.down_covers, up, L.top, "join") != y) continue;
        const Bits D = bits_and(down[size_t(y)], down[size_t(L.kappa_table[i])]);
        if (certified_extreme(D, L.up_covers, down, L.bottom, "meet") != x) continue;
        hit = int(i);
        hits++;
      }
      if (hits != 1) throw std::logic_error("finish: edge label not unique");
      L.edge_label.emplace(std::pair{x, y}, L.jirr[size_t(hit)]);
    }

  // rowmotion: the bijection with D(u) = U(Row(u))
  std::map<ArcSet, int> by_up;
  for (int u = 0; u < m; u++) {
    ArcSet us;
    for (int c : L.up_covers[size_t(u)]) us.insert(L.edge_label.at({u, c}));
    if (!by_up.emplace(std::move(us), u).second)
      throw std::logic_error("finish: up-label sets not distinct");
  }
  L.row_table.assign(size_t(m), -1);
  for (int u = 0; u < m; u++) {
    ArcSet ds;
    for (int c : L.down_covers[size_t(u)]) ds.insert(L.edge_label.at({c, u}));
    const auto it = by_up.find(ds);
    if (it == by_up.end()) throw std::logic_error("finish: rowmotion undefined");
    L.row_table[size_t(u)] = it->second;
  }
}

}  // namespace

LatticeModel build(int n, Variant v) {
  if (n < 2 || n > 7) throw std::invalid_argument("build: n out of range");
  if (v == Variant::affine) return quotient_to_affine(build(n, Variant::cyclic)).affine;

  LatticeModel L;
  L.variant = Variant::cyclic;
  L.n = n;
  std::map<ArcSet, Tibit> table;
  for (const Tibit& T : reachable_tibits(n)) table.emplace(key_of(T), T);
  if (table.size() != reachable_tibits(n).size())
    throw std::logic_error("build: arc keys not injective");
  for (const auto& [key, T] : table) {
    L.index.emplace(key, L.size());
    L.arcs.push_back(key);
    L.trees.push_back(T);
    L.titos.push_back(post_order(T));
  }
  std::set<std::pair<int, int>> edges;
  for (int x = 0; x < L.size(); x++)
    for (const auto& mv : up_moves(L.trees[size_t(x)]))
      edges.emplace(x, L.index.at(key_of(mv.second)));
  finish(L, edges);
  if (noncrossing_diagrams(n, false).size() != size_t(L.size()))
    throw std::logic_error("build: enumeration methods disagree");
  return L;
}

Quotient quotient_to_affine(const LatticeModel& cyc) {
  if (cyc.variant != Variant::cyclic)
    throw std::invalid_argument("quotient_to_affine: cyclic model required");
  const int m = cyc.size();
  std::map<ArcSet, Tibit> table;
  auto keys = std::vector<ArcSet>(size_t(m));
  for (int i = 0; i < m; i++) {
    const Tibit im = pispine_down(cyc.trees[size_t(i)]);
    keys[size_t(i)] = key_of(im);
    table.emplace(keys[size_t(i)], im);
  }

  Quotient q;
  LatticeModel& A = q.affine;
  A.variant = Variant::affine;
  A.n = cyc.n;
  for (const auto& [key, T] : table) {
    A.index.emplace(key, A.size());
    A.arcs.push_back(key);
    A.trees.push_back(T);
    A.titos.push_back(post_order(T));
  }
  q.image.assign(size_t(m), -1);
  q.fibers.assign(size_t(A.size()), {});
  for (int i = 0; i < m; i++) {
    q.image[size_t(i)] = A.index.at(keys[size_t(i)]);
    q.fibers[size_t(q.image[size_t(i)])].push_back(i);
  }
  std::set<std::pair<int, int>> edges;
  for (int x = 0; x < m; x++)
    for (int y : cyc.up_covers[size_t(x)]) {
      const int ix = q.image[size_t(x)], iy = q.image[size_t(y)];
      if (ix != iy) edges.emplace(ix, iy);
    }
  finish(A, edges);
  if (noncrossing_diagrams(A.n, true).size() != size_t(A.size()))
    throw std::logic_error("quotient_to_affine: enumeration methods disagree");
  return q;
}

int find_element(const LatticeModel& L, const ArcSet& D) {
  const auto it = L.index.find(D);
  return it == L.index.end() ? -1 : it->second;
}

int find_element(const LatticeModel& L, const Tibit& T) {
  if (T.n != L.n) throw std::invalid_argument("find_element: period mismatch");
  const int id = find_element(L, key_of(T));
  return id >= 0 && L.trees[size_t(id)] == T ? id : -1;
}

int find_element(const LatticeModel& L, const Tito& t) {
  if (t.n != L.n) throw std::invalid_argument("find_element: period mismatch");
  const int id = find_element(L, insertion_tree(t));
  return id >= 0 && L.titos[size_t(id)] == t ? id : -1;
}

bool leq(const LatticeModel& L, int x, int y) {
  check_elem(L, x, "leq");
  check_elem(L, y, "leq");
  if (L.order_words)
    return (L.order_up[size_t(x) * size_t(L.order_words) + (size_t(y) >> 6)] >>
            (unsigned(y) & 63u)) &
           1u;
  return get_bit(reach_bits(L.up_covers, L.size(), x), y);
}

int meet(const LatticeModel& L, int x, int y) {
  check_elem(L, x, "meet");
  check_elem(L, y, "meet");
  const Bits S = bits_and(downset_of(L, x), downset_of(L, y));
  const int c = walk_extreme(S, L.up_covers, L.bottom);
  if (!bits_subset(S, downset_of(L, c)))
    throw std::logic_error("meet: bound not unique");
  return c;
}

int join(const LatticeModel& L, int x, int y) {
  check_elem(L, x, "join");
  check_elem(L, y, "join");
  const Bits S = bits_and(upset_of(L, x), upset_of(L, y));
  const int c = walk_extreme(S, L.down_covers, L.top);
  if (!bits_subset(S, upset_of(L, c)))
    throw std::logic_error("join: bound not unique");
  return c;
}

bool check_semidistributive(const LatticeModel& L) {
  const size_t m = size_t(L.size());
  const Rows up = all_rows(L.up_covers, int(m)), down = all_rows(L.down_covers, int(m));
  std::vector<int> mt(m * m), jt(m * m);
  for (size_t x = 0; x < m; x++)
    for (size_t y = x; y < m; y++) {
      const int a = certified_extreme(bits_and(down[x], down[y]), L.up_covers, down,
                                      L.bottom, "meet");
      const int b = certified_extreme(bits_and(up[x], up[y]), L.down_covers, up,
                                      L.top, "join");
      mt[x * m + y] = mt[y * m + x] = a;
      jt[x * m + y] = jt[y * m + x] = b;
    }
  for (size_t x = 0; x < m; x++)
    for (size_t y = 0; y < m; y++)
      for (size_t z = 0; z < m; z++) {
        if (mt[x * m + y] == mt[x * m + z] &&
            mt[x * m + size_t(jt[y * m + z])] != mt[x * m + y])
          return false;
        if (jt[x * m + y] == jt[x * m + z] &&
            jt[x * m + size_t(mt[y * m + z])] != jt[x * m + y])
          return false;
      }
  return true;
}

int dual_element(const LatticeModel& L, int u) {
  check_elem(L, u, "dual_element");
  Tibit T = omega_tibit(L.trees[size_t(u)]);
  if (L.variant == Variant::affine) T = pispine_down(T);
  const int id = find_element(L, T);
  if (id < 0) throw std::logic_error("dual_element: image missing");
  return id;
}

bool check_selfdual(const LatticeModel& L) {
  const int m = L.size();
  auto sigma = std::vector<int>(size_t(m));
  std::vector<char> seen(size_t(m), 0);
  for (int u = 0; u < m; u++) {
    sigma[size_t(u)] = dual_element(L, u);
    seen[size_t(sigma[size_t(u)])] = 1;
  }
  for (char s : seen)
    if (!s) return false;
  for (int u = 0; u < m; u++)
    if (sigma[size_t(sigma[size_t(u)])] != u) return false;
  for (int x = 0; x < m; x++)
    for (int y : L.up_covers[size_t(x)]) {
      const auto& ups = L.up_covers[size_t(sigma[size_t(y)])];
      if (std::find(ups.begin(), ups.end(), sigma[size_t(x)]) == ups.end()) return false;
    }
  return true;
}

Refl edge_label_of(const LatticeModel& L, int x, int y) {
  check_elem(L, x, "edge_label_of");
  check_elem(L, y, "edge_label_of");
  const auto it = L.edge_label.find({x, y});
  if (it == L.edge_label.end()) throw std::invalid_argument("edge_label_of: not a cover");
  return it->second;
}

ArcSet can_join_rep(const LatticeModel& L, int u) {
  check_elem(L, u, "can_join_rep");
  ArcSet out;
  for (int c : L.down_covers[size_t(u)]) out.insert(L.edge_label.at({c, u}));
  return out;
}

ArcSet can_meet_rep(const LatticeModel& L, int u) {
  check_elem(L, u, "can_meet_rep");
  ArcSet out;
  for (int c : L.up_covers[size_t(u)]) out.insert(L.edge_label.at({u, c}));
  return out;
}

int rowmotion(const LatticeModel& L, int u) {
  check_elem(L, u, "rowmotion");
  return L.row_table[size_t(u)];
}

std::vector<std::vector<int>> row_orbits(const LatticeModel& L) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(size_t(L.size()), 0);
  for (int s = 0; s < L.size(); s++) {
    if (used[size_t(s)]) continue;
    std::vector<int> orb;
    for (int v = s; !used[size_t(v)]; v = L.row_table[size_t(v)]) {
      used[size_t(v)] = 1;
      orb.push_back(v);
    }
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace ctam
