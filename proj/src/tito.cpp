#include "ctam/tito.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ctam {

static void canonicalize_block(Block& b, int n) {
  const int k = int(b.win.size());
  int piv = 0;
  for (int i = 1; i < k; i++)
    if (res1(b.win[i], n) < res1(b.win[piv], n)) piv = i;
  // slide so the minimal-residue entry comes first, then translate it to 1..n
  std::vector<i64> w;
  w.reserve(k);
  const i64 shift = b.waxing ? n : -n;
  for (int i = piv; i < k; i++) w.push_back(b.win[i]);
  for (int i = 0; i < piv; i++) w.push_back(b.win[i] + shift);
  const i64 t = w[0] - res1(w[0], n);
  for (auto& x : w) x -= t;
  b.win = std::move(w);
}

Tito Tito::from_blocks(int n, std::vector<Block> bs) {
  if (n < 2) throw std::invalid_argument("tito: n must be at least 2");
  Tito t;
  t.n = n;
  t.blk_of_.assign(n + 1, -1);
  t.pos_of_.assign(n + 1, -1);
  for (auto& b : bs) {
    if (b.win.empty()) throw std::invalid_argument("tito: empty window");
    canonicalize_block(b, n);
  }
  t.blocks = std::move(bs);
  for (int bi = 0; bi < int(t.blocks.size()); bi++)
    for (int i = 0; i < int(t.blocks[bi].win.size()); i++) {
      int r = res1(t.blocks[bi].win[i], n);
      if (t.blk_of_[r] != -1)
        throw std::invalid_argument("tito: duplicate residue " + std::to_string(r));
      t.blk_of_[r] = bi;
      t.pos_of_[r] = i;
    }
  for (int r = 1; r <= n; r++)
    if (t.blk_of_[r] == -1)
      throw std::invalid_argument("tito: missing residue " + std::to_string(r));
  return t;
}

Tito Tito::identity(int n) {
  Block b;
  b.waxing = true;
  for (int i = 1; i <= n; i++) b.win.push_back(i);
  return from_blocks(n, {b});
}

std::pair<int, i64> Tito::locate(i64 x) const {
  const int r = res1(x, n);
  const int bi = blk_of_[r], i = pos_of_[r];
  const Block& b = blocks[bi];
  const i64 j = (x - b.win[i]) / n;
  const i64 k = i64(b.win.size());
  return {bi, b.waxing ? j * k + i : -j * k + i};
}

bool Tito::precedes(i64 x, i64 y) const {
  auto px = locate(x), py = locate(y);
  return px < py || x == y;
}

bool Tito::is_cover(i64 x, i64 y) const {
  auto px = locate(x), py = locate(y);
  return px.first == py.first && py.second == px.second + 1;
}

bool Tito::is_inversion(const Refl& r) const { return precedes(r.b, r.a); }

Tito parse_window(const std::string& text, int n) {
  std::vector<Block> bs;
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) i++; };
  skip();
  while (i < text.size()) {
    if (text[i] != '[') throw std::invalid_argument("tito parse: expected '[' at \"" + text.substr(i) + "\"");
    i++;
    Block b;
    skip();
    if (i < text.size() && text[i] == '~') { b.waxing = false; i++; }
    while (true) {
      skip();
      size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) j++;
      while (j < text.size() && std::isdigit((unsigned char)text[j])) j++;
      if (j == i) throw std::invalid_argument("tito parse: malformed token in window \"" + text.substr(i) + "\"");
      b.win.push_back(std::stoll(text.substr(i, j - i)));
      i = j;
      skip();
      if (i < text.size() && text[i] == ',') { i++; continue; }
      if (i < text.size() && text[i] == ']') { i++; break; }
      throw std::invalid_argument("tito parse: expected ',' or ']' in window");
    }
    bs.push_back(std::move(b));
    skip();
  }
  if (bs.empty()) throw std::invalid_argument("tito parse: empty window list");
  return Tito::from_blocks(n, std::move(bs));
}

std::string format_window(const Tito& t) {
  std::string s;
  for (const auto& b : t.blocks) {
    s += '[';
    if (!b.waxing) s += '~';
    for (size_t i = 0; i < b.win.size(); i++) {
      if (i) s += ',';
      s += std::to_string(b.win[i]);
    }
    s += ']';
  }
  return s;
}

Classify classify(const Tito& t) {
  Classify c;
  c.block_count = int(t.blocks.size());
  c.compact = true;
  for (size_t i = 0; i + 1 < t.blocks.size(); i++)
    if (t.blocks[i].waxing && t.blocks[i + 1].waxing) c.compact = false;
  c.real = c.co_real = true;
  for (const auto& b : t.blocks)
    if (b.win.size() == 1) (b.waxing ? c.co_real : c.real) = false;
  return c;
}

bool avoids(const Tito& t, Pattern p) {
  const int n = t.n;
  for (i64 a = 1; a <= n; a++)
    for (i64 b = a + 1; b <= a + 3 * n; b++)
      for (i64 c = b + 1; c <= a + 3 * n; c++) {
        bool hit = false;
        switch (p) {
          case Pattern::P312: hit = t.precedes(c, a) && t.precedes(a, b); break;
          case Pattern::P132: hit = t.precedes(a, c) && t.precedes(c, b); break;
          case Pattern::P312bar: hit = t.is_cover(c, a) && t.precedes(a, b); break;
          case Pattern::P132bar: hit = t.is_cover(a, c) && t.precedes(c, b); break;
        }
        if (hit) return false;
      }
  return true;
}

std::vector<Wall> walls(const Tito& t) {
  std::vector<Wall> ws;
  for (const auto& b : t.blocks) {
    const int k = int(b.win.size());
    auto emit = [&](i64 x, i64 y) {  // cover x ⋖ y
      Wall w;
      w.upper = x < y;
      w.index = Refl{std::min(x, y), std::max(x, y)}.canon(t.n);
      ws.push_back(w);
    };
    for (int i = 0; i + 1 < k; i++) emit(b.win[i], b.win[i + 1]);
    emit(b.win[k - 1], b.waxing ? b.win[0] + t.n : b.win[0] - t.n);
  }
  return ws;
}

Tito flip(const Tito& t, const Refl& wall_index) {
  const Refl target = wall_index.canon(t.n);
  auto ws = walls(t);
  if (std::none_of(ws.begin(), ws.end(), [&](const Wall& w) { return w.index == target; }))
    throw std::invalid_argument("tito flip: not a wall");
  std::vector<Block> bs = t.blocks;
  for (auto& b : bs) {
    const int k = int(b.win.size());
    for (int i = 0; i < k; i++) {
      i64 x = b.win[i];
      i64 y = (i + 1 < k) ? b.win[i + 1] : (b.waxing ? b.win[0] + t.n : b.win[0] - t.n);
      if (Refl{std::min(x, y), std::max(x, y)}.canon(t.n) != target) continue;
      if (k == 1) {  // imaginary wall: toggle the singleton's kind
        b.waxing = !b.waxing;
      } else if (i + 1 == k) {  // slide once so the wrap pair sits inside the window
        std::vector<i64> w(b.win.begin() + 1, b.win.end());
        w.push_back(b.waxing ? b.win[0] + t.n : b.win[0] - t.n);
        b.win = std::move(w);
        std::swap(b.win[k - 2], b.win[k - 1]);
      } else {
        std::swap(b.win[i], b.win[i + 1]);
      }
      return Tito::from_blocks(t.n, std::move(bs));
    }
  }
  throw std::logic_error("tito flip: wall not located");
}

static Tito reverse_singletons(const Tito& t, bool from_waning) {
  std::vector<Block> bs = t.blocks;
  for (auto& b : bs)
    if (b.win.size() == 1 && b.waxing != from_waning) b.waxing = from_waning;
  return Tito::from_blocks(t.n, std::move(bs));
}

Tito pi_dyer_down(const Tito& t) { return reverse_singletons(t, true); }
Tito pi_dyer_up(const Tito& t) { return reverse_singletons(t, false); }

Tito psi_reverse(const Tito& t) {
  std::vector<Block> bs(t.blocks.rbegin(), t.blocks.rend());
  for (auto& b : bs) {
    std::reverse(b.win.begin(), b.win.end());
    b.waxing = !b.waxing;
  }
  return Tito::from_blocks(t.n, std::move(bs));
}

Tito psi_negate(const Tito& t) {
  std::vector<Block> bs = t.blocks;
  for (auto& b : bs) {
    for (auto& x : b.win) x = -x;
    b.waxing = !b.waxing;
  }
  return Tito::from_blocks(t.n, std::move(bs));
}

bool leq_tito(const Tito& t1, const Tito& t2) {
  if (t1.n != t2.n) throw std::invalid_argument("leq_tito: mismatched n");
  const int n = t1.n;
  for (i64 a = 1; a <= n; a++)
    for (i64 b = a + 1; b <= a + 3 * n; b++)
      if (t1.is_inversion({a, b}) && !t2.is_inversion({a, b})) return false;
  // eventual tail status for residue pair (r,s), pairs (a,b) with a≡r, b≡s, b-a large
  auto tail = [n](const Tito& t, int r, int s) {
    auto [br, rr] = t.locate(r);
    auto [bs, rs] = t.locate(s);
    (void)rr; (void)rs;
    return bs < br || (bs == br && !t.blocks[bs].waxing);
  };
  for (int r = 1; r <= n; r++)
    for (int s = 1; s <= n; s++)
      if (tail(t1, r, s) && !tail(t2, r, s)) return false;
  return true;
}

Tito tito_from_order(int n, const std::function<bool(i64, i64)>& prec) {
  if (n < 2) throw std::invalid_argument("tito_from_order: n must be at least 2");
  std::vector<bool> waxing(n + 1);
  for (int r = 1; r <= n; r++) waxing[r] = prec(r, i64(r) + n);
  // whole r-class precedes the s-class iff even the latest in-window
  // representative of r does; for waning classes translates descend
  auto before = [&](int r, int s) {
    return prec(waxing[r] ? i64(r) + 3 * n : i64(r) - 3 * n, s);
  };
  std::vector<int> uf(n + 1);
  for (int r = 1; r <= n; r++) uf[r] = r;
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (int r = 1; r <= n; r++)
    for (int s = r + 1; s <= n; s++)
      if (!before(r, s) && !before(s, r)) uf[find(r)] = find(s);
  std::vector<std::vector<int>> groups;
  for (int r = 1; r <= n; r++) {
    if (find(r) != r) continue;
    groups.emplace_back();
    for (int s = 1; s <= n; s++)
      if (find(s) == r) groups.back().push_back(s);
  }
  std::sort(groups.begin(), groups.end(),
            [&](const std::vector<int>& A, const std::vector<int>& B) { return before(A[0], B[0]); });
  std::vector<Block> bs;
  for (const auto& g : groups) {
    const int w1 = g[0];
    const bool wax = waxing[w1];
    for (int r : g)
      if (waxing[r] != wax) throw std::invalid_argument("tito_from_order: mixed block kind");
    const i64 stop = wax ? i64(w1) + n : i64(w1) - n;  // first translate past the window
    std::vector<i64> win{w1};
    for (int s : g) {
      if (s == w1) continue;
      std::optional<i64> rep;
      for (int k = -3; k <= 3; k++) {
        const i64 y = s + i64(k) * n;
        if (prec(w1, y) && prec(y, stop)) {
          if (rep) throw std::invalid_argument("tito_from_order: ambiguous representative");
          rep = y;
        }
      }
      if (!rep) throw std::invalid_argument("tito_from_order: no representative in window");
      win.push_back(*rep);
    }
    std::sort(win.begin(), win.end(), [&](i64 x, i64 y) { return x != y && prec(x, y); });
    bs.push_back(Block{wax, std::move(win)});
  }
  Tito t = Tito::from_blocks(n, std::move(bs));
  for (i64 x = 1; x <= n; x++)
    for (i64 y = x - 2 * n; y <= x + 2 * n; y++)
      if (x != y && t.precedes(x, y) != prec(x, y))
        throw std::invalid_argument("tito_from_order: oracle is not a periodic total order");
  return t;
}

}  // namespace ctam
