#include "ratpoly.hpp"

#include <qplane/error.hpp>

#include <algorithm>

namespace qplane::detail {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem) {
  if (b.empty()) throw DivisionByZero();
  rem = a;
  trim(rem);
  const int db = degree(b);
  if (degree(rem) < db) {
    quot.clear();
    return;
  }
  quot.assign(rem.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead_inv = 1 / b.back();
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    mpq_class c = rem.back() * lead_inv;
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quot);
}

RatPoly rem(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  return r;
}

RatPoly inverse_mod(const RatPoly& a, const RatPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  RatPoly r0 = m, r1 = rem(a, m);
  RatPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw DivisionByZero();
  const mpq_class inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  return rem(s0, m);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

RatPoly cyclotomic_polynomial(int n) {
  // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d
  RatPoly p(n + 1, mpq_class(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RatPoly q, r;
    divmod(p, cyclotomic_polynomial(d), q, r);
    p = std::move(q);
  }
  return p;
}

}  // namespace qplane::detail
