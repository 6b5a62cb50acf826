#pragma once
#include <complex>
#include <string>
#include <vector>

#include "ctam/base.hpp"

namespace ctam {

// integer polynomial in q, dense little-endian coefficients
struct QPoly {
  std::vector<i64> c;

  QPoly() = default;
  explicit QPoly(i64 constant) : c{constant} { trim(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return int(c.size()) - 1; }
  i64 coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  i64 at_one() const {
    i64 s = 0;
    for (i64 x : c) s += x;
    return s;
  }
  QPoly subst_power(int step) const;  // q -> q^step
  std::complex<double> eval_root(i64 k, i64 omega) const;
  std::string str() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, i64 s);
  friend bool operator==(const QPoly&, const QPoly&) = default;
};

QPoly q_int(int N, int step = 1);                 // [N] in q^step
QPoly divexact(const QPoly& num, const QPoly& den);

enum class CatKind { A, B };
QPoly q_catalan(CatKind kind, int rank);          // rank 0 allowed (constant 1)
QPoly atam_sieve_poly(int n);

}  // namespace ctam
