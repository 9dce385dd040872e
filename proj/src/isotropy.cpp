#include <qplane/center.hpp>
#include <qplane/isotropy.hpp>

#include <numeric>

namespace qplane {

namespace {

FieldElem sign(const Field& f, long e) { return f.integer(e % 2 == 0 ? 1 : -1); }

long gcd_all(const std::vector<long>& v) {
  long g = 0;
  for (long e : v) g = std::gcd(g, e);
  return g;
}

}  // namespace

CharacterLattice gamma_lattice(const ToricDecomposition& dec, const Automorphism& sigma) {
  if (!sigma.is_toric()) throw WrongSigmaKind("gamma lattice requires a toric twist");
  const TwistedCenterDesc zc = twisted_center(sigma);
  CharacterLattice lat;
  for (const auto& [m, c] : dec.w.terms())
    if (!zc.contains_monomial(m)) lat.insert(m.i, m.j);
  for (std::size_t r = 0; r < dec.a_poly.size(); ++r)
    if (!dec.a_poly[r].is_zero()) lat.insert(1, -static_cast<long>(r));
  for (std::size_t s = 0; s < dec.b_poly.size(); ++s)
    if (!dec.b_poly[s].is_zero()) lat.insert(-static_cast<long>(s), 1);
  if (dec.mn) {
    for (const QElem* lambda : {&dec.lambda1, &dec.lambda2})
      for (const auto& [m, c] : lambda->terms()) lat.insert(dec.mn->first + m.i, dec.mn->second + m.j);
  }
  return lat;
}

BinomialSystem exact_flip_system(const SigmaDerivation& d) {
  const Field& f = d.field();
  BinomialSystem sys(f);
  const QElem& dx = d.dx();
  const QElem& dy = d.dy();
  std::set<std::pair<int, int>> support;
  for (const QElem* e : {&dx, &dy})
    for (const auto& [m, c] : e->terms()) {
      support.insert({m.i, m.j});
      support.insert({m.j, m.i});
    }
  if (d.sigma().is_toric()) {
    // eta = Flip(u, v): eta(y^j x^i) = u^i v^j (-1)^(ij) y^i x^j
    // eta(dx) = u dy, eta(dy) = v dx
    for (auto [i, j] : support) {
      const FieldElem s = sign(f, static_cast<long>(i) * j);
      sys.require(dy.coeff({j, i}), i - 1, j, s * dx.coeff({i, j}));
      sys.require(dx.coeff({j, i}), i, j - 1, s * dy.coeff({i, j}));
    }
  } else {
    // eta = Flip(mu, kappa mu): eta(dx) = mu dy, eta(dy) = kappa mu dx
    const FieldElem kappa = d.sigma().mu2() / d.sigma().mu1();
    for (auto [i, j] : support) {
      const FieldElem s = sign(f, static_cast<long>(i) * j) * kappa.pow(j);
      sys.require(dy.coeff({j, i}), i + j - 1, 0, s * dx.coeff({i, j}));
      sys.require(kappa * dx.coeff({j, i}), i + j - 1, 0, s * dy.coeff({i, j}));
    }
  }
  return sys;
}

namespace {

// eta = Flip(u, v) commuting with toric sigma = (gamma, gamma), q = -1.
BinomialSystem isotoric_conditions(const ToricDecomposition& dec, const Automorphism& sigma) {
  const Field& f = sigma.field();
  BinomialSystem sys(f);
  const bool gamma_minus_one = sigma.mu1() == f.integer(-1);

  // (i) eta(w) - w in Z_gamma; w carries no Z_gamma part, so eta(w) = w
  std::set<std::pair<int, int>> support;
  for (const auto& [m, c] : dec.w.terms()) {
    support.insert({m.i, m.j});
    support.insert({m.j, m.i});
  }
  for (auto [i, j] : support)
    sys.require(dec.w.coeff({j, i}), i, j, sign(f, static_cast<long>(i) * j) * dec.w.coeff({i, j}));

  // (ii) a(y) = v^-1 b(uy), b(x) = u^-1 a(vx)
  if (gamma_minus_one) {
    const std::size_t n = std::max(dec.a_poly.size(), dec.b_poly.size());
    auto at = [&](const std::vector<FieldElem>& p, std::size_t r) { return r < p.size() ? p[r] : f.zero(); };
    for (std::size_t r = 0; r < n; ++r) {
      const long rr = static_cast<long>(r);
      sys.require(at(dec.a_poly, r), rr, -1, at(dec.b_poly, r));
      sys.require(at(dec.b_poly, r), -1, rr, at(dec.a_poly, r));
    }
  }

  // (iii) lambda1 = c eta(lambda2), lambda2 = c eta(lambda1); c = 1 or -uv
  if (dec.mn) {
    const long shift = gamma_minus_one ? 1 : 0;
    const FieldElem c = gamma_minus_one ? f.integer(-1) : f.one();
    std::set<std::pair<int, int>> lsupport;
    for (const QElem* l : {&dec.lambda1, &dec.lambda2})
      for (const auto& [m, coeff] : l->terms()) {
        lsupport.insert({m.i, m.j});
        lsupport.insert({m.j, m.i});
      }
    for (auto [i, j] : lsupport) {
      const FieldElem s = c * sign(f, static_cast<long>(i) * j);
      sys.require(dec.lambda1.coeff({j, i}), i + shift, j + shift, s * dec.lambda2.coeff({i, j}));
      sys.require(dec.lambda2.coeff({j, i}), i + shift, j + shift, s * dec.lambda1.coeff({i, j}));
    }
  }
  return sys;
}

// Published criterion for eta_mu = Flip(mu, (beta/alpha) mu), flip sigma.
BinomialSystem isoflip_conditions(const FlipDecomposition& dec, const Automorphism& sigma) {
  const Field& f = sigma.field();
  const FieldElem& alpha = sigma.mu1();
  const FieldElem& beta = sigma.mu2();
  const FieldElem kappa = beta / alpha;
  BinomialSystem sys(f);

  // eta_mu(w) = w: eta_mu(y^j x^i) = mu^(i+j) kappa^j (-1)^(ij) y^i x^j
  std::set<std::pair<int, int>> support;
  for (const auto& [m, c] : dec.w.terms()) {
    support.insert({m.i, m.j});
    support.insert({m.j, m.i});
  }
  for (auto [i, j] : support)
    sys.require(dec.w.coeff({j, i}), i + j, 0,
                sign(f, static_cast<long>(i) * j) * kappa.pow(j) * dec.w.coeff({i, j}));

  // b_r = -beta^-1 mu^(k-1) (-1)^(k-r+r(k-r)) kappa^(k-r) b_(k-r)
  for (const auto& s : dec.slices) {
    const int k = s.k;
    auto b = [&](int r) { return r == 0 ? s.b0 : f.zero(); };
    for (int r = 0; r <= k; ++r) {
      const FieldElem factor =
          -beta.inverse() * sign(f, k - r + static_cast<long>(r) * (k - r)) * kappa.pow(k - r);
      sys.require(b(r), k - 1, 0, factor * b(k - r));
    }
  }
  return sys;
}

}  // namespace

IsotropyDescriptor isotropy_toric_sigma(const SigmaDerivation& d) {
  if (!d.sigma().is_toric()) throw WrongSigmaKind("toric isotropy requires a toric twist");
  const ToricDecomposition dec = decompose_toric(d);
  IsotropyDescriptor desc;
  desc.lattice = gamma_lattice(dec, d.sigma());
  desc.structure = snf_invariant_factors(desc.lattice);
  if (d.field().q_is_minus_one() && d.sigma().mu1() == d.sigma().mu2()) {
    desc.flip_conditions = isotoric_conditions(dec, d.sigma());
    desc.exact_flip_conditions = exact_flip_system(d);
    desc.flip_part = desc.flip_conditions->solvable() ? FlipPart::Conditions : FlipPart::Empty;
  }
  return desc;
}

IsotropyDescriptor isotropy_flip_sigma(const SigmaDerivation& d) {
  const FlipDecomposition dec = decompose_flip(d);
  IsotropyDescriptor desc;
  desc.sigma_is_flip = true;
  std::set<long> exps;
  for (const auto& [m, c] : dec.w.terms()) exps.insert(m.i + m.j);
  for (const auto& s : dec.slices) exps.insert(std::labs(s.k - 1));
  exps.erase(0);
  desc.diagonal_exponents.assign(exps.begin(), exps.end());
  desc.diagonal_order = gcd_all(desc.diagonal_exponents);
  desc.lattice.insert(1, -1);
  for (long e : desc.diagonal_exponents) desc.lattice.insert(e, 0);
  desc.structure = snf_invariant_factors(desc.lattice);
  desc.flip_conditions = isoflip_conditions(dec, d.sigma());
  desc.exact_flip_conditions = exact_flip_system(d);
  desc.flip_part = desc.exact_flip_conditions->solvable() ? FlipPart::Conditions : FlipPart::Empty;
  return desc;
}

IsotropyDescriptor isotropy(const SigmaDerivation& d) {
  return d.sigma().is_toric() ? isotropy_toric_sigma(d) : isotropy_flip_sigma(d);
}

bool member(const Automorphism& rho, const SigmaDerivation& d) {
  const Field& f = rho.field();
  const SigmaDerivation dd = &d.field() == &f ? d : lift(d, f);
  if (!centralizer_contains(dd.sigma(), rho)) return false;
  if (!(apply_aut(rho, dd.dx()) == apply(dd, rho.image_x()))) return false;
  return apply_aut(rho, dd.dy()) == apply(dd, rho.image_y());
}

bool IsotropyDescriptor::predicts(const Automorphism& rho, const Automorphism& sigma, bool use_exact) const {
  const Field& f = rho.field();
  const Automorphism s = &sigma.field() == &f ? sigma : lift(sigma, f);
  if (!centralizer_contains(s, rho)) return false;
  // scalar exponents of rho relative to a root of unity are not available in
  // general, so toric characters are evaluated directly
  auto character_ok = [&](const FieldElem& m1, const FieldElem& m2) {
    for (auto [u, v] : lattice.vectors())
      if (!(m1.pow(u) * m2.pow(v)).is_one()) return false;
    return true;
  };
  if (rho.is_toric()) return character_ok(rho.mu1(), rho.mu2());
  const auto& sys = use_exact ? exact_flip_conditions : flip_conditions;
  if (!sys) return false;
  if (sigma_is_flip) return sys->satisfied_by(rho.mu1(), f.one());
  return sys->satisfied_by(rho.mu1(), rho.mu2());
}

}  // namespace qplane
