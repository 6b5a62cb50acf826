#pragma once
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctam {

using i64 = long long;

inline i64 floordiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}
inline i64 floormod(i64 a, i64 b) { return a - floordiv(a, b) * b; }

// residue of x in 1..n
inline int res1(i64 x, int n) { return int(floormod(x - 1, n)) + 1; }

// reflection index (a,b), a<b, up to simultaneous translation by n;
// canonical representative has a in 1..n
struct Refl {
  i64 a = 0, b = 0;
  Refl() = default;
  Refl(i64 a_, i64 b_) : a(a_), b(b_) {}
  Refl canon(int n) const {
    i64 t = a - res1(a, n);
    return {a - t, b - t};
  }
  friend bool operator==(const Refl&, const Refl&) = default;
  friend auto operator<=>(const Refl&, const Refl&) = default;
};

// exact rational, i64 backing; enough headroom for all matrix work here
struct Rat {
  i64 num = 0, den = 1;
  Rat() = default;
  Rat(i64 v) : num(v), den(1) {}
  Rat(i64 n_, i64 d_) : num(n_), den(d_) { reduce(); }
  void reduce() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  friend Rat operator+(Rat x, Rat y) { return Rat(x.num * y.den + y.num * x.den, x.den * y.den); }
  friend Rat operator-(Rat x, Rat y) { return Rat(x.num * y.den - y.num * x.den, x.den * y.den); }
  friend Rat operator*(Rat x, Rat y) { return Rat(x.num * y.num, x.den * y.den); }
  friend Rat operator/(Rat x, Rat y) { return Rat(x.num * y.den, x.den * y.num); }
  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator<(const Rat& x, const Rat& y) { return x.num * y.den < y.num * x.den; }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }
  bool is_integer() const { return den == 1; }
};

// unsigned bignum, base 1e9 little-endian; only addition and printing needed
struct BigUint {
  std::vector<uint32_t> d;  // empty = 0
  BigUint() = default;
  BigUint(uint64_t v) {
    while (v) { d.push_back(uint32_t(v % 1000000000)); v /= 1000000000; }
  }
  BigUint& operator+=(const BigUint& o) {
    uint64_t carry = 0;
    size_t m = std::max(d.size(), o.d.size());
    d.resize(m, 0);
    for (size_t i = 0; i < m; i++) {
      uint64_t s = carry + d[i] + (i < o.d.size() ? o.d[i] : 0);
      d[i] = uint32_t(s % 1000000000);
      carry = s / 1000000000;
    }
    if (carry) d.push_back(uint32_t(carry));
    return *this;
  }
  bool is_zero() const { return d.empty(); }
  friend bool operator==(const BigUint&, const BigUint&) = default;
  std::string str() const {
    if (d.empty()) return "0";
    std::string s = std::to_string(d.back());
    for (size_t i = d.size() - 1; i-- > 0;) {
      std::string p = std::to_string(d[i]);
      s += std::string(9 - p.size(), '0') + p;
    }
    return s;
  }
};

}  // namespace ctam
