#include "ctam/tibit.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctam {

std::optional<i64> Tibit::left_child(i64 j) const {
  for (int rc = 1; rc <= n; rc++) {
    const int dc = d[rc - 1];
    if (dc <= 0) continue;
    const i64 c = j - dc;
    if (res1(c, n) == rc) return c;
  }
  return std::nullopt;
}

std::optional<i64> Tibit::right_child(i64 j) const {
  for (int rc = 1; rc <= n; rc++) {
    const int dc = d[rc - 1];
    if (dc >= 0) continue;
    const i64 c = j - dc;
    if (res1(c, n) == rc) return c;
  }
  return std::nullopt;
}

namespace {

// in-order traversal of the subtree at `node`, requiring every visit to stay in
// (lo,hi) and the visit sequence to ascend; counts nodes
bool inorder_gap(const Tibit& T, i64 node, i64 lo, i64 hi, i64& last, int& count,
                 int depth) {
  if (depth > 2 * T.n + 8) return false;
  if (node <= lo || node >= hi) return false;
  if (auto L = T.left_child(node))
    if (!inorder_gap(T, *L, lo, hi, last, count, depth + 1)) return false;
  if (node <= last) return false;
  last = node;
  count++;
  if (auto R = T.right_child(node))
    if (!inorder_gap(T, *R, lo, hi, last, count, depth + 1)) return false;
  return true;
}

}  // namespace

bool validate_tibit(int n, const std::vector<int>& d, std::vector<std::string>* why) {
  auto fail = [&](const std::string& m) {
    if (why) why->push_back(m);
    return false;
  };
  if (n < 2) return fail("period must be at least 2");
  if (int(d.size()) != n) return fail("offset table must have one entry per residue");
  for (int r = 1; r <= n; r++) {
    if (d[r - 1] == 0) return fail("offset of residue " + std::to_string(r) + " is zero");
    if (d[r - 1] > n || d[r - 1] < -n)
      return fail("offset of residue " + std::to_string(r) + " exceeds the period");
  }
  // one left and one right child slot per parent residue
  std::vector<int> left(n + 1, 0), right(n + 1, 0);
  for (int c = 1; c <= n; c++) {
    const int pr = res1(c + d[c - 1], n);
    (d[c - 1] > 0 ? left[pr] : right[pr])++;
  }
  for (int r = 1; r <= n; r++) {
    if (left[r] > 1) return fail("residue " + std::to_string(r) + " has two left children");
    if (right[r] > 1) return fail("residue " + std::to_string(r) + " has two right children");
  }
  // exactly one cycle in the residue functional graph (the spine)
  std::vector<int> state(n + 1, 0);  // 0 unseen, then stamped with a pass id
  std::vector<int> cycle;
  int cycles = 0;
  for (int r0 = 1, pass = 0; r0 <= n; r0++) {
    if (state[r0]) continue;
    pass++;
    int r = r0;
    while (state[r] == 0) {
      state[r] = pass;
      r = res1(r + d[r - 1], n);
    }
    if (state[r] == pass) {  // found a new cycle; collect it
      cycles++;
      if (cycles == 1) {
        int s = r;
        do {
          cycle.push_back(s);
          s = res1(s + d[s - 1], n);
        } while (s != r);
      }
    }
  }
  if (cycles != 1) return fail("residue graph has " + std::to_string(cycles) + " cycles");
  i64 sigma = 0;
  for (int s : cycle) sigma += d[s - 1];
  if (sigma != n && sigma != -n)
    return fail("spine displacement is " + std::to_string(sigma));
  // in-order coherence: the gap between consecutive spine nodes is exactly the
  // hanging subtree, visited in ascending order
  const Tibit T{n, d};
  for (int s : cycle) {
    const i64 p = i64(s) + d[s - 1];
    const i64 lo = std::min<i64>(s, p), hi = std::max<i64>(s, p);
    const auto root = p > s ? T.right_child(s) : T.left_child(s);
    i64 last = lo;
    int count = 0;
    if (root && !inorder_gap(T, *root, lo, hi, last, count, 0))
      return fail("in-order violation in the spine gap at residue " + std::to_string(s));
    if (count != int(hi - lo - 1))
      return fail("spine gap at residue " + std::to_string(s) + " is not filled");
  }
  return true;
}

Tibit make_tibit(int n, std::vector<int> d) {
  std::vector<std::string> why;
  if (!validate_tibit(n, d, &why))
    throw std::invalid_argument("tibit: " + (why.empty() ? "invalid" : why.front()));
  return Tibit{n, std::move(d)};
}

std::vector<int> spine_residues(const Tibit& T) {
  int r = 1;
  for (int i = 0; i < 2 * T.n; i++) r = res1(r + T.d[r - 1], T.n);
  std::vector<int> cyc;
  int s = r;
  do {
    cyc.push_back(s);
    s = res1(s + T.d[s - 1], T.n);
  } while (s != r);
  std::sort(cyc.begin(), cyc.end());
  return cyc;
}

int spine_sign(const Tibit& T) {
  i64 sigma = 0;
  for (int s : spine_residues(T)) sigma += T.d[s - 1];
  return sigma > 0 ? 1 : -1;
}

bool ClassSet::subset_of(const ClassSet& o) const {
  return std::includes(o.window.begin(), o.window.end(), window.begin(), window.end()) &&
         std::includes(o.tails.begin(), o.tails.end(), tails.begin(), tails.end());
}

Tibit insertion_tree(int n, const std::function<bool(i64, i64)>& prec) {
  std::vector<int> d(n);
  for (i64 j = 1; j <= n; j++) {
    bool found = false;
    i64 best = 0;
    for (i64 c = j - n; c <= j + n; c++) {
      if (c == j || !prec(j, c)) continue;
      bool dominates = true;
      for (i64 m = std::min(j, c) + 1; m < std::max(j, c) && dominates; m++)
        if (!prec(m, c)) dominates = false;
      if (!dominates) continue;
      if (!found || prec(c, best)) best = c, found = true;
    }
    if (!found) throw std::logic_error("insertion_tree: no admissible parent");
    d[j - 1] = int(best - j);
  }
  return make_tibit(n, std::move(d));
}

Tibit insertion_tree(const Tito& t) {
  return insertion_tree(t.n, [&t](i64 a, i64 b) { return a != b && t.precedes(a, b); });
}

namespace {

void post_rec(const Tibit& T, i64 node, bool mirror, std::vector<i64>& out, int depth) {
  if (depth > 2 * T.n + 8) throw std::logic_error("tibit: runaway subtree");
  const auto a = mirror ? T.right_child(node) : T.left_child(node);
  const auto b = mirror ? T.left_child(node) : T.right_child(node);
  if (a) post_rec(T, *a, mirror, out, depth + 1);
  if (b) post_rec(T, *b, mirror, out, depth + 1);
  out.push_back(node);
}

void append_subtree(const Tibit& T, std::optional<i64> root, bool mirror,
                    std::vector<i64>& out) {
  if (root) post_rec(T, *root, mirror, out, 0);
}

}  // namespace

Tito post_order(const Tibit& T) {
  const auto sp = spine_residues(T);
  std::vector<Block> bs;
  if (spine_sign(T) > 0) {
    Block w{true, {}};
    for (int s : sp) {
      append_subtree(T, T.right_child(s), false, w.win);
      w.win.push_back(s);
    }
    bs.push_back(std::move(w));
  } else {
    Block wax{true, {}}, wan{false, {}};
    for (int s : sp) append_subtree(T, T.left_child(s), false, wax.win);
    for (auto it = sp.rbegin(); it != sp.rend(); ++it) wan.win.push_back(*it);
    if (!wax.win.empty()) bs.push_back(std::move(wax));
    bs.push_back(std::move(wan));
  }
  return Tito::from_blocks(T.n, std::move(bs));
}

Tito reverse_post_order(const Tibit& T) {
  const auto sp = spine_residues(T);
  std::vector<Block> bs;
  if (spine_sign(T) < 0) {
    Block w{false, {}};
    for (auto it = sp.rbegin(); it != sp.rend(); ++it) {
      append_subtree(T, T.left_child(*it), true, w.win);
      w.win.push_back(*it);
    }
    bs.push_back(std::move(w));
  } else {
    Block wan{false, {}}, wax{true, {}};
    for (auto it = sp.rbegin(); it != sp.rend(); ++it)
      append_subtree(T, T.right_child(*it), true, wan.win);
    for (int s : sp) wax.win.push_back(s);
    if (!wan.win.empty()) bs.push_back(std::move(wan));
    bs.push_back(std::move(wax));
  }
  return Tito::from_blocks(T.n, std::move(bs));
}

Tibit omega_tibit(const Tibit& T) {
  const int n = T.n;
  std::vector<int> d(n);
  for (int i = 1; i < n; i++) d[n - i - 1] = -T.d[i - 1];
  d[n - 1] = -T.d[n - 1];
  return make_tibit(n, std::move(d));
}

bool is_descendant(const Tibit& T, i64 b, i64 a) {
  i64 cur = b;
  for (int step = 0; step <= 12 * T.n + 8; step++) {
    if (cur == a) return true;
    cur = T.parent(cur);
  }
  return false;
}

ClassSet inversions(const Tibit& T, int far) {
  ClassSet S;
  const int n = T.n;
  for (i64 a = 1; a <= n; a++)
    for (i64 b = a + 1; b <= a + 3 * n; b++)
      if (is_descendant(T, b, a)) S.window.insert(Refl{a, b});
  for (int r = 1; r <= n; r++)
    for (int s = 1; s <= n; s++)
      if (is_descendant(T, s + i64(far) * n, r)) S.tails.insert({r, s});
  return S;
}

ClassSet versions(const Tibit& T, int far) {
  ClassSet S;
  const int n = T.n;
  for (i64 a = 1; a <= n; a++)
    for (i64 b = a + 1; b <= a + 3 * n; b++)
      if (is_descendant(T, a, b)) S.window.insert(Refl{a, b});
  for (int r = 1; r <= n; r++)
    for (int s = 1; s <= n; s++)
      if (is_descendant(T, r, s + i64(far) * n)) S.tails.insert({r, s});
  return S;
}

ClassSet tito_inversions(const Tito& t) {
  ClassSet S;
  const int n = t.n;
  for (i64 a = 1; a <= n; a++)
    for (i64 b = a + 1; b <= a + 3 * n; b++)
      if (t.is_inversion({a, b})) S.window.insert(Refl{a, b});
  for (int r = 1; r <= n; r++)
    for (int s = 1; s <= n; s++) {
      const auto [br, pr] = t.locate(r);
      const auto [bs, ps] = t.locate(s);
      (void)pr;
      (void)ps;
      if (bs < br || (bs == br && !t.blocks[bs].waxing)) S.tails.insert({r, s});
    }
  return S;
}

bool tibit_real(const Tibit& T) {
  return std::none_of(T.d.begin(), T.d.end(), [&](int x) { return x == -T.n; });
}

bool tibit_co_real(const Tibit& T) {
  return std::none_of(T.d.begin(), T.d.end(), [&](int x) { return x == T.n; });
}

Tibit pispine_down(const Tibit& T) {
  const auto sp = spine_residues(T);
  if (sp.size() != 1 || T.d[sp[0] - 1] != -T.n) return T;
  const int i0 = sp[0];
  Tibit R = T;
  R.d[i0 - 1] = T.n;
  // the hanging subtree moves across: the left child of each spine node becomes
  // the right child of the spine node one period down
  if (auto k1 = T.left_child(i0)) R.d[res1(*k1, T.n) - 1] = int((i0 - *k1) - T.n);
  return make_tibit(T.n, std::move(R.d));
}

Tibit pispine_up(const Tibit& T) { return omega_tibit(pispine_down(omega_tibit(T))); }

Tibit rotate(const Tibit& T, int child_residue, bool up) {
  const int n = T.n, c = child_residue;
  if (c < 1 || c > n) throw std::invalid_argument("rotate: residue out of range");
  const int dc = T.d[c - 1];
  if (up ? dc <= 0 : dc >= 0) throw std::invalid_argument("rotate: wrong edge side");
  if (dc == n || dc == -n)
    throw std::invalid_argument("rotate: full-span edge belongs to the spine flips");
  const i64 p = i64(c) + dc;
  Tibit R = T;
  R.d[c - 1] = dc + T.off(p);           // child takes over the parent's slot
  R.d[res1(p, n) - 1] = -dc;            // old parent hangs under the child
  const auto r = up ? T.right_child(c) : T.left_child(c);
  if (r) R.d[res1(*r, n) - 1] = int(p - *r);  // transferred subtree re-parents to p
  return make_tibit(n, std::move(R.d));
}

std::vector<std::pair<int, Tibit>> up_moves(const Tibit& T) {
  std::vector<std::pair<int, Tibit>> out;
  for (int c = 1; c <= T.n; c++) {
    if (T.d[c - 1] <= 0) continue;
    out.emplace_back(c, T.d[c - 1] == T.n ? pispine_up(T) : rotate(T, c, true));
  }
  return out;
}

std::vector<std::pair<int, Tibit>> down_moves(const Tibit& T) {
  std::vector<std::pair<int, Tibit>> out;
  for (int c = 1; c <= T.n; c++) {
    if (T.d[c - 1] >= 0) continue;
    out.emplace_back(c, T.d[c - 1] == -T.n ? pispine_down(T) : rotate(T, c, false));
  }
  return out;
}

std::vector<Refl> right_edge_arcs(const Tibit& T) {
  std::vector<Refl> arcs;
  for (int c = 1; c <= T.n; c++) {
    if (T.d[c - 1] >= 0) continue;
    arcs.push_back(Refl{i64(c) + T.d[c - 1], c}.canon(T.n));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<Tibit> all_tibits(int n) {
  std::vector<Tibit> out;
  std::vector<int> d(n, -n);
  while (true) {
    if (validate_tibit(n, d)) out.push_back(Tibit{n, d});
    int i = 0;
    while (i < n) {
      d[i]++;
      if (d[i] == 0) d[i]++;
      if (d[i] <= n) break;
      d[i] = -n;
      i++;
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace ctam
