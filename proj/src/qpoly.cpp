#include "ctam/qpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace ctam {

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] = a.coeff(i) + b.coeff(i);
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] = a.coeff(i) - b.coeff(i);
  r.trim();
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.c.empty() || b.c.empty()) return QPoly{};
  QPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); i++)
    for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

QPoly operator*(const QPoly& a, i64 s) {
  QPoly r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

QPoly QPoly::subst_power(int step) const {
  QPoly r;
  if (c.empty()) return r;
  r.c.assign((c.size() - 1) * step + 1, 0);
  for (size_t i = 0; i < c.size(); i++) r.c[i * step] = c[i];
  r.trim();
  return r;
}

std::complex<double> QPoly::eval_root(i64 k, i64 omega) const {
  // bucket coefficients by exponent mod omega, then sum over the omega-th roots
  std::vector<i64> bucket(size_t(omega), 0);
  for (size_t i = 0; i < c.size(); i++) bucket[i % omega] += c[i];
  std::complex<double> s = 0;
  const double tau = 2.0 * std::acos(-1.0);
  for (i64 r = 0; r < omega; r++)
    if (bucket[r])
      s += double(bucket[r]) *
           std::exp(std::complex<double>(0, tau * double((r * k) % omega) / double(omega)));
  return s;
}

std::string QPoly::str() const {
  if (c.empty()) return "0";
  std::string s;
  for (size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += c[i] > 0 ? " + " : " - ";
    else if (c[i] < 0) s += "-";
    i64 a = c[i] < 0 ? -c[i] : c[i];
    if (a != 1 || i == 0) s += std::to_string(a);
    if (i >= 1) s += "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

QPoly q_int(int N, int step) {
  QPoly r;
  r.c.assign(size_t((N - 1) * step + 1), 0);
  for (int i = 0; i < N; i++) r.c[size_t(i * step)] = 1;
  return r;
}

QPoly divexact(const QPoly& num, const QPoly& den) {
  if (den.c.empty()) throw std::domain_error("divexact: zero divisor");
  QPoly rem = num, q;
  if (num.c.size() < den.c.size()) {
    if (!num.c.empty()) throw std::domain_error("divexact: nonzero remainder");
    return q;
  }
  q.c.assign(num.c.size() - den.c.size() + 1, 0);
  const i64 lead = den.c.back();
  for (size_t i = q.c.size(); i-- > 0;) {
    i64 t = rem.coeff(i + den.c.size() - 1);
    if (t % lead != 0) throw std::domain_error("divexact: nonzero remainder");
    q.c[i] = t / lead;
    if (q.c[i])
      for (size_t j = 0; j < den.c.size(); j++) rem.c[i + j] -= q.c[i] * den.c[j];
  }
  rem.trim();
  if (!rem.c.empty()) throw std::domain_error("divexact: nonzero remainder");
  q.trim();
  return q;
}

QPoly q_catalan(CatKind kind, int rank) {
  QPoly num(1), den(1);
  for (int i = 1; i <= rank; i++) {
    if (kind == CatKind::B) {
      num = num * q_int(2 * rank + 2 * i);
      den = den * q_int(2 * i);
    } else {
      num = num * q_int(rank + i + 2);
      den = den * q_int(i + 1);
    }
  }
  return divexact(num, den);
}

QPoly atam_sieve_poly(int n) {
  const int eps = (n % 2 == 1) ? 1 : 2;
  QPoly catB = q_catalan(CatKind::B, n).subst_power(n - 1);
  QPoly catA = q_catalan(CatKind::A, n - 2);
  return catB - q_int(2 * n, 2 * (n - 1)) * catA.at_one() +
         q_int(n, 4 * (n - 1)) * catA.subst_power(2 * eps);
}

}  // namespace ctam
