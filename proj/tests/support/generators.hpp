#pragma once

#include <qplane/classify.hpp>
#include <qplane/isotropy.hpp>
#include <qplane/linsolve.hpp>
#include <qplane/parser.hpp>

#include <map>
#include <random>
#include <string>
#include <vector>

namespace qtest {

using namespace qplane;

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
};

inline FieldElem random_scalar(const Field& f, Rng& rng, bool nonzero = false) {
  for (;;) {
    FieldElem c = f.integer(rng.uniform(-3, 3));
    if (rng.coin(0.4)) c = c + f.integer(rng.uniform(-2, 2)) * f.q_power(rng.uniform(-2, 3));
    if (f.kind() == FieldKind::GenericQ && rng.coin(0.15) && !c.is_zero())
      c = c / (f.q() + f.integer(rng.uniform(1, 3)));
    if (!nonzero || !c.is_zero()) return c;
  }
}

inline QElem random_elem(const Field& f, Rng& rng, int max_deg, double density = 0.3) {
  QElem a(f);
  for (int d = 0; d <= max_deg; ++d)
    for (int j = 0; j <= d; ++j)
      if (rng.coin(density)) a.add_term({d - j, j}, random_scalar(f, rng));
  return a;
}

/// Basis of all sigma-derivations with images of degree <= max_deg, computed
/// as the kernel of the compatibility map. Independent of the classification.
inline std::vector<SigmaDerivation> derivation_basis(const Automorphism& sigma, int max_deg) {
  static std::map<std::string, std::vector<SigmaDerivation>> cache;
  const std::string key = sigma.field().name() + "|" + sigma.to_string() + "|" + std::to_string(max_deg);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Field& f = sigma.field();
  std::vector<Monomial> monos;
  for (int d = 0; d <= max_deg; ++d)
    for (int j = 0; j <= d; ++j) monos.push_back({d - j, j});
  const std::size_t n = monos.size();
  std::vector<QElem> residuals;
  for (int img = 0; img < 2; ++img)
    for (const auto& m : monos) {
      const QElem unit = QElem::monomial(f.one(), m);
      residuals.push_back(img == 0 ? compatibility_residual(sigma, unit, QElem(f))
                                   : compatibility_residual(sigma, QElem(f), unit));
    }
  std::vector<Monomial> rows;
  for (int d = 0; d <= max_deg + 1; ++d)
    for (int j = 0; j <= d; ++j) rows.push_back({d - j, j});
  FieldMatrix a;
  for (const auto& r : rows) {
    std::vector<FieldElem> row;
    for (const auto& res : residuals) row.push_back(res.coeff(r));
    a.rows.push_back(std::move(row));
  }
  std::vector<SigmaDerivation> basis;
  for (const auto& v : null_space(std::move(a), 2 * n, f)) {
    QElem dx(f), dy(f);
    for (std::size_t k = 0; k < n; ++k) {
      dx.add_term(monos[k], v[k]);
      dy.add_term(monos[k], v[n + k]);
    }
    basis.push_back(SigmaDerivation::validate(sigma, dx, dy));
  }
  cache.emplace(key, basis);
  return basis;
}

inline SigmaDerivation random_derivation(const Automorphism& sigma, Rng& rng, int max_deg, double density = 0.3) {
  SigmaDerivation d = SigmaDerivation::zero(sigma);
  for (const auto& b : derivation_basis(sigma, max_deg))
    if (rng.coin(density)) d = d + random_scalar(sigma.field(), rng, true) * b;
  return d;
}

inline Automorphism aut(const Field& f, const std::string& s) { return parse_automorphism(s, f); }
inline QElem el(const Field& f, const std::string& s) { return parse_expr(s, f); }
inline FieldElem sc(const Field& f, const std::string& s) { return parse_scalar(s, f); }

/// Twists covering every family: q-power scalars, P_x / P_y cases, generic.
inline std::vector<Automorphism> sigma_pool(const Field& f) {
  std::vector<std::string> specs;
  if (f.kind() == FieldKind::GenericQ) {
    specs = {"toric:1,1", "toric:q,q", "toric:1/q,q", "toric:q^2,1/q^3", "toric:2,3", "toric:q^2,5", "toric:q,1/q"};
  } else if (f.t() == 2) {
    specs = {"toric:1,1", "toric:-1,-1", "toric:2,3", "toric:-1,1", "toric:3,3",
             "flip:1,1", "flip:1,-1", "flip:2,3", "flip:2,1/2", "flip:-2,1/2"};
  } else {
    specs = {"toric:1,1", "toric:q,q", "toric:q^2,q", "toric:2,5", "toric:q,1", "toric:-1,q"};
  }
  std::vector<Automorphism> out;
  for (const auto& s : specs) out.push_back(aut(f, s));
  return out;
}

}  // namespace qtest
