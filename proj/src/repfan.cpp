#include "ctam/repfan.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ctam {

namespace {

// Exact determinant of a small integer matrix (Bareiss: every division below
// is exact, so i64 suffices at these sizes).
i64 det_int(std::vector<std::vector<i64>> m) {
  const int n = int(m.size());
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; k++) {
    if (m[size_t(k)][size_t(k)] == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; i++)
        if (m[size_t(i)][size_t(k)] != 0) {
          sw = i;
          break;
        }
      if (sw < 0) return 0;
      std::swap(m[size_t(k)], m[size_t(sw)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++)
        m[size_t(i)][size_t(j)] =
            (m[size_t(i)][size_t(j)] * m[size_t(k)][size_t(k)] -
             m[size_t(i)][size_t(k)] * m[size_t(k)][size_t(j)]) /
            prev;
    prev = m[size_t(k)][size_t(k)];
  }
  return sign * m[size_t(n) - 1][size_t(n) - 1];
}

// e_a - e_b (a < b <= a+n) in the basis f_r = e~_r - e~_{r+1}; the expansion
// is sum of f over the residues of a..b-1, so entries lie in {0, sign}.
std::vector<i64> root_column(i64 a, i64 b, int n, i64 sign) {
  std::vector<i64> col(size_t(n), 0);
  for (i64 i = a; i < b; i++) col[size_t(res1(i, n)) - 1] += sign;
  return col;
}

bool uniform_blocks(const Tito& t, bool waxing) {
  return std::all_of(t.blocks.begin(), t.blocks.end(),
                     [&](const Block& b) { return b.waxing == waxing; });
}

// theta(i) = eps * (pi^{-1}(i) - pi^{-1}(0)) where pi is the position map of
// an all-waxing order: pi(tn + m) = u_m + tn over the flattened window u.
ThetaVector theta_from_positions(const Tito& t, i64 eps) {
  const int n = t.n;
  std::vector<i64> u;
  for (const Block& b : t.blocks)
    for (i64 x : b.win) u.push_back(x);
  auto position = [&](i64 i) -> i64 {
    for (size_t m = 0; m < u.size(); m++)
      if (res1(u[m], n) == res1(i, n)) return i - u[m] + i64(m) + 1;
    throw std::logic_error("theta positions: residue missing from window");
  };
  std::vector<i64> val(size_t(n) + 1, 0);
  const i64 p0 = position(0);
  for (i64 r = 1; r <= n; r++) val[size_t(r)] = eps * (position(r) - p0);
  ThetaVector th;
  th.n = n;
  th.coord.assign(size_t(n), Rat(0));
  th.coord[size_t(n) - 1] = Rat(-val[1]);
  for (i64 i = 1; i < n; i++)
    th.coord[size_t(i) - 1] = Rat(val[size_t(i)] - val[size_t(i) + 1]);
  return th;
}

Rat rat_abs(const Rat& x) { return x < Rat(0) ? Rat(0) - x : x; }

}  // namespace

BrickRel brick_rel(const Refl& x, const Refl& y, int n) {
  const Refl p = x.canon(n), q = y.canon(n);
  if (p.b - p.a > n || q.b - q.a > n)
    throw std::invalid_argument("brick_rel: index pair is not a brick");
  BrickRel out;
  for (i64 t = -2; t <= 2; t++) {
    const i64 c = q.a + t * n, d = q.b + t * n;
    if (p.a == c && p.b <= d) out.quotient = true;
    if (p.b == d && p.a >= c) out.submodule = true;
    if (c <= p.a && p.a < d && d <= p.b) out.hom = true;
    if (p.a < c && c <= p.b && p.b < d && d < p.a + n) out.ext1 = true;
  }
  return out;
}

TaggedArc plain_arc(i64 a, i64 b, int n) {
  const Refl r = Refl{a, b}.canon(n);
  if (r.b <= r.a || r.b - r.a >= n)
    throw std::invalid_argument("plain_arc: endpoints coincide mod n");
  return TaggedArc{false, r.a, r.b};
}

TaggedArc notched_arc(i64 a, int n) {
  const i64 r = res1(a, n);
  return TaggedArc{true, r, r};
}

bool tagged_compatible(const TaggedArc& x, const TaggedArc& y, int n) {
  if (x == y) return true;
  if (x.notched && y.notched) return true;
  if (!x.notched && !y.notched) {
    // two plain radial arcs only meet at the puncture; any other plain pair
    // crosses iff some translate of one strictly interleaves the other in
    // the universal cover (an extension witness without the period bound)
    if (x.b - x.a == n - 1 && y.b - y.a == n - 1) return true;
    const auto interleaves = [n](const TaggedArc& p, const TaggedArc& q) {
      for (i64 t = -2; t <= 2; t++) {
        const i64 c = q.a + t * n, d = q.b + t * n;
        if (p.a < c && c <= p.b && p.b < d) return true;
      }
      return false;
    };
    return !interleaves(x, y) && !interleaves(y, x);
  }
  const TaggedArc& p = x.notched ? y : x;  // plain
  const TaggedArc& r = x.notched ? x : y;  // notched
  for (i64 t = -2; t <= 2; t++) {
    const i64 c = r.a + t * n;
    if (p.a <= c && c < p.b) return false;  // the plain arc covers the mark
  }
  return true;
}

std::set<Refl> stau_tilting(const ArcSet& D, int n) {
  if (closure(D, true, n) != D)
    throw std::invalid_argument("stau_tilting: arc set is not closed");
  std::set<Refl> out;
  for (const Refl& r : D) {
    bool blocked = false;
    for (const Refl& s : D) {
      for (i64 t = -2; t <= 2; t++) {
        const i64 c = s.a + t * n, d = s.b + t * n;
        if (r.a < c && c <= r.b && r.b < d && d < r.a + n) blocked = true;
      }
      if (blocked) break;
    }
    if (!blocked) out.insert(r);
  }
  return out;
}

std::set<TaggedArc> triangulation(const ArcSet& D, int n) {
  std::set<TaggedArc> out;
  for (const Refl& r : stau_tilting(D, n)) out.insert(plain_arc(r.a, r.b, n));
  for (i64 a = 1; a <= n; a++) {
    bool covered = false;
    for (const Refl& s : D) {
      for (i64 t = -2; t <= 2; t++)
        if (s.a + t * n <= a && a < s.b + t * n) covered = true;
      if (covered) break;
    }
    if (!covered) out.insert(notched_arc(a, n));
  }
  if (i64(out.size()) != n) throw std::logic_error("triangulation: arc count is off");
  for (auto i = out.begin(); i != out.end(); ++i)
    for (auto j = std::next(i); j != out.end(); ++j)
      if (!tagged_compatible(*i, *j, n))
        throw std::logic_error("triangulation: arcs are not pairwise compatible");
  return out;
}

GVector g_vector(const TaggedArc& x, int n) {
  GVector g(size_t(n), 0);
  if (x.notched) {
    g[size_t(res1(x.a, n)) - 1] -= 1;
    return g;
  }
  g[size_t(res1(x.a, n)) - 1] += 1;
  if (x.b - x.a < n - 1) g[size_t(res1(x.b, n)) - 1] -= 1;
  return g;
}

std::vector<std::vector<i64>> c_matrix(const Tibit& T) {
  if (!tibit_real(T)) throw std::invalid_argument("c_matrix: tree is not real");
  const int n = T.n;
  std::vector<Refl> lower, upper;
  for (const Wall& w : walls(post_order(T)))
    if (!w.upper) lower.push_back(w.index);
  for (const Wall& w : walls(reverse_post_order(pispine_up(T))))
    if (w.upper) upper.push_back(w.index);
  std::sort(lower.begin(), lower.end());
  std::sort(upper.begin(), upper.end());
  std::vector<std::vector<i64>> cols;
  for (const Refl& r : lower) {
    if (r.b - r.a >= n) throw std::logic_error("c_matrix: imaginary lower wall");
    cols.push_back(root_column(r.a, r.b, n, +1));
  }
  for (const Refl& r : upper) {
    if (r.b - r.a >= n) throw std::logic_error("c_matrix: imaginary upper wall");
    cols.push_back(root_column(r.a, r.b, n, -1));
  }
  if (i64(cols.size()) != n) throw std::logic_error("c_matrix: wall count is off");
  std::vector<std::vector<i64>> m(size_t(n), std::vector<i64>(size_t(n), 0));
  for (int r = 0; r < n; r++)
    for (int c = 0; c < n; c++) m[size_t(r)][size_t(c)] = cols[size_t(c)][size_t(r)];
  const i64 d = det_int(m);
  if (d != 1 && d != -1) throw std::logic_error("c_matrix: matrix is not unimodular");
  return cols;
}

std::set<GVector> g_from_cmatrix(const Tibit& T) {
  const auto cols = c_matrix(T);
  const int n = int(cols.size());
  std::vector<std::vector<i64>> m(size_t(n), std::vector<i64>(size_t(n), 0));
  for (int r = 0; r < n; r++)
    for (int c = 0; c < n; c++) m[size_t(r)][size_t(c)] = cols[size_t(c)][size_t(r)];
  const i64 d = det_int(m);
  std::set<GVector> out;
  for (int c = 0; c < n; c++) {
    // column c of (C^{-1})^T: entries cof(r, c) / det
    GVector col(size_t(n), 0);
    for (int r = 0; r < n; r++) {
      std::vector<std::vector<i64>> minor;
      for (int i = 0; i < n; i++) {
        if (i == r) continue;
        std::vector<i64> row;
        for (int j = 0; j < n; j++)
          if (j != c) row.push_back(m[size_t(i)][size_t(j)]);
        minor.push_back(std::move(row));
      }
      const i64 cof = (((r + c) % 2) ? -1 : 1) * det_int(std::move(minor));
      col[size_t(r)] = cof / d;
    }
    out.insert(std::move(col));
  }
  if (i64(out.size()) != n) throw std::logic_error("g_from_cmatrix: repeated column");
  return out;
}

GVector varpi_Tz(const Tibit& T, i64 z) {
  if (!tibit_real(T)) throw std::invalid_argument("varpi: tree is not real");
  const int n = T.n;
  if (z < 1 || z > n) throw std::invalid_argument("varpi: node out of range");
  const i64 lo = z - 2 * i64(n), hi = z + 2 * i64(n);
  std::vector<char> in(size_t(hi - lo + 1), 0);
  for (i64 x = lo; x <= hi; x++) in[size_t(x - lo)] = is_descendant(T, x, z) ? 1 : 0;
  i64 mn = 0, mx = 0;
  bool any = false;
  for (i64 x = lo; x <= hi; x++)
    if (in[size_t(x - lo)]) {
      if (!any) mn = x;
      mx = x;
      any = true;
    }
  if (!any) throw std::logic_error("varpi: empty down-set");
  for (i64 x = mn; x <= mx; x++)
    if (!in[size_t(x - lo)]) throw std::logic_error("varpi: down-set is not an interval");
  const bool open_down = (mn == lo), open_up = (mx == hi);
  GVector g(size_t(n), 0);
  if (open_down && open_up) throw std::logic_error("varpi: down-set fills the window");
  if (open_down) {  // {x <= b}
    g[size_t(res1(mx, n)) - 1] -= 1;
    return g;
  }
  if (open_up) {  // {x > a}
    g[size_t(res1(mn - 1, n)) - 1] += 1;
    return g;
  }
  if (mx - mn + 1 >= n) throw std::logic_error("varpi: bounded down-set spans a period");
  g[size_t(res1(mn - 1, n)) - 1] += 1;
  // a width-(n-1) down-set pairs with the radial arc, whose weight drops the
  // second term (the two residues would otherwise coincide with a shift)
  if (mx - mn + 1 < n - 1) g[size_t(res1(mx, n)) - 1] -= 1;
  return g;
}

std::set<GVector> g_of_tree(const Tibit& T) {
  std::set<GVector> out;
  for (i64 z = 1; z <= T.n; z++) out.insert(varpi_Tz(T, z));
  if (i64(out.size()) != T.n) throw std::logic_error("g_of_tree: repeated weight");
  return out;
}

Rat ThetaVector::at(i64 i) const {
  const i64 r = res1(i, n);
  const i64 q = (i - r) / n;
  Rat v(0), s(0);
  for (i64 k = 1; k < r; k++) v = v - coord[size_t(k) - 1];
  for (const Rat& c : coord) s = s + c;
  v = v - coord[size_t(n) - 1];  // step from theta(0) to theta(1)
  return v - Rat(q) * s;
}

ThetaVector theta_from_ints(int n, const std::vector<i64>& v) {
  if (i64(v.size()) != n) throw std::invalid_argument("theta_from_ints: length mismatch");
  ThetaVector th;
  th.n = n;
  for (i64 x : v) th.coord.push_back(Rat(x));
  return th;
}

bool theta_regular(const ThetaVector& t) {
  std::vector<Rat> vals;
  for (i64 i = 0; i <= 2 * i64(t.n); i++) vals.push_back(t.at(i));
  for (size_t i = 0; i < vals.size(); i++)
    for (size_t j = i + 1; j < vals.size(); j++)
      if (vals[i] == vals[j]) return false;
  return true;
}

bool theta_compatible(const ThetaVector& t, const Tibit& T) {
  if (t.n != T.n) throw std::invalid_argument("theta_compatible: size mismatch");
  for (i64 i = 1; i <= T.n; i++)
    for (i64 j = i - T.n; j <= i + T.n; j++) {
      if (j == i) continue;
      if (is_descendant(T, i, j) && t.at(j) < t.at(i)) return false;
      if (is_descendant(T, j, i) && t.at(i) < t.at(j)) return false;
    }
  return true;
}

ArcSet torsion_from_theta(const ThetaVector& t) {
  if (!theta_regular(t)) throw std::invalid_argument("torsion_from_theta: vector is not regular");
  ArcSet out;
  for (i64 a = 1; a <= t.n; a++)
    for (i64 b = a + 1; b < a + t.n; b++) {
      bool keep = true;
      for (i64 bp = a + 1; bp <= b && keep; bp++)
        if (!(t.at(bp) < t.at(a))) keep = false;
      if (keep) out.insert(Refl{a, b});
    }
  return out;
}

ThetaVector make_regular_theta(const Tibit& T) {
  const int n = T.n;
  std::vector<std::pair<Tito, i64>> cands;
  for (const Tito& t : {post_order(T), reverse_post_order(T)}) {
    if (uniform_blocks(t, true))
      cands.emplace_back(t, +1);
    else if (uniform_blocks(t, false))
      cands.emplace_back(psi_reverse(t), -1);
  }
  for (const auto& [t, eps] : cands) {
    ThetaVector th = theta_from_positions(t, eps);
    if (theta_regular(th) && theta_compatible(th, T)) return th;
  }
  // mixed wax/wane extensions carry no position map; search instead
  std::mt19937_64 rng(0x5eedc0de + std::uint64_t(n));
  std::uniform_int_distribution<i64> d(-8 * i64(n), 8 * i64(n));
  for (int tries = 0; tries < 200000; tries++) {
    ThetaVector th;
    th.n = n;
    for (int r = 0; r < n; r++) th.coord.push_back(Rat(d(rng)));
    if (theta_regular(th) && theta_compatible(th, T)) return th;
  }
  throw std::logic_error("make_regular_theta: search budget exhausted");
}

std::vector<ThetaVector> sample_compatible_thetas(const Tibit& T, int count,
                                                  std::uint64_t seed) {
  const ThetaVector base = make_regular_theta(T);
  const int n = T.n;
  Rat gap(0);
  bool first = true;
  for (i64 i = 0; i <= 2 * i64(n); i++)
    for (i64 j = i + 1; j <= 2 * i64(n); j++) {
      const Rat d = rat_abs(base.at(i) - base.at(j));
      if (first || d < gap) gap = d;
      first = false;
    }
  // perturbations this small cannot close any strict gap of the base vector
  const Rat step = gap / Rat(1 + 12 * i64(n) * i64(n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> d(-3, 3);
  std::vector<ThetaVector> out;
  int guard = 0;
  while (i64(out.size()) < count) {
    if (++guard > 100 * count + 1000)
      throw std::logic_error("sample_compatible_thetas: rejection budget exhausted");
    ThetaVector th = base;
    for (Rat& c : th.coord) c = c + step * Rat(d(rng), 4);
    if (theta_regular(th) && theta_compatible(th, T)) out.push_back(th);
  }
  return out;
}

}  // namespace ctam
