#pragma once
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctam/base.hpp"

namespace ctam {

struct Block {
  bool waxing = true;
  std::vector<i64> win;
  friend bool operator==(const Block&, const Block&) = default;
};

struct Wall {
  Refl index;  // canonical: 1 <= a <= n
  bool upper = false;
  bool imaginary(int n) const { return index.b - index.a == n; }
  friend bool operator==(const Wall&, const Wall&) = default;
};

enum class Pattern { P312, P132, P312bar, P132bar };

struct Classify {
  bool compact = false, real = false, co_real = false;
  int block_count = 0;
};

// translation-invariant total order on Z, window notation, canonical form
class Tito {
 public:
  int n = 0;
  std::vector<Block> blocks;

  static Tito from_blocks(int n, std::vector<Block> bs);
  static Tito identity(int n);

  // (block index, rank within block); lex order on these is the total order
  std::pair<int, i64> locate(i64 x) const;
  bool precedes(i64 x, i64 y) const;              // x ⪯ y
  bool is_cover(i64 x, i64 y) const;              // x ⪯ y a cover relation
  bool is_inversion(const Refl& r) const;         // b ⪯ a

  friend bool operator==(const Tito& s, const Tito& t) {
    return s.n == t.n && s.blocks == t.blocks;
  }

 private:
  std::vector<int> blk_of_, pos_of_;  // by residue 1..n
};

Tito parse_window(const std::string& text, int n);
std::string format_window(const Tito& t);

Classify classify(const Tito& t);
bool avoids(const Tito& t, Pattern p);

std::vector<Wall> walls(const Tito& t);
Tito flip(const Tito& t, const Refl& wall_index);

Tito pi_dyer_down(const Tito& t);
Tito pi_dyer_up(const Tito& t);
Tito psi_reverse(const Tito& t);
Tito psi_negate(const Tito& t);
inline Tito omega_tito(const Tito& t) { return psi_reverse(psi_negate(t)); }

// inversion-set containment: truncated window scan plus per-residue tail;
// sound on the <=3-block inputs that arise here (all 312-avoiders qualify)
bool leq_tito(const Tito& t1, const Tito& t2);

// Rebuilds window notation from a strict comparison oracle for a
// translation-invariant total order.  All probes stay inside the index window
// [1-3n, 4n]; throws std::invalid_argument when the oracle is not such an
// order (or its blocks spread representatives beyond the probe range).
Tito tito_from_order(int n, const std::function<bool(i64, i64)>& prec);

}  // namespace ctam
