#include <qplane/center.hpp>
#include <qplane/linsolve.hpp>
#include <qplane/skew_derivation.hpp>

#include <vector>

namespace qplane {

QElem compatibility_residual(const Automorphism& sigma, const QElem& u, const QElem& v) {
  const Field& f = sigma.field();
  const QElem x = QElem::x(f);
  const QElem y = QElem::y(f);
  const QElem lhs = u * sigma.image_y() + x * v;
  const QElem rhs = v * sigma.image_x() + y * u;
  return lhs - f.q() * rhs;
}

SigmaDerivation SigmaDerivation::validate(const Automorphism& sigma, const QElem& dx, const QElem& dy) {
  const Field& f = sigma.field();
  if (&dx.field() != &f || &dy.field() != &f)
    throw ModeError("generator images and automorphism from different fields");
  QElem residual = compatibility_residual(sigma, dx, dy);
  if (!residual.is_zero()) throw IncompatibleImages(std::move(residual));
  return SigmaDerivation(sigma, dx, dy);
}

SigmaDerivation SigmaDerivation::zero(const Automorphism& sigma) {
  return SigmaDerivation(sigma, QElem(sigma.field()), QElem(sigma.field()));
}

SigmaDerivation operator+(const SigmaDerivation& a, const SigmaDerivation& b) {
  if (!(a.sigma_ == b.sigma_)) throw WrongSigmaKind("cannot add derivations with different twists");
  return SigmaDerivation(a.sigma_, a.dx_ + b.dx_, a.dy_ + b.dy_);
}

SigmaDerivation operator-(const SigmaDerivation& a, const SigmaDerivation& b) {
  if (!(a.sigma_ == b.sigma_)) throw WrongSigmaKind("cannot subtract derivations with different twists");
  return SigmaDerivation(a.sigma_, a.dx_ - b.dx_, a.dy_ - b.dy_);
}

SigmaDerivation operator*(const FieldElem& c, const SigmaDerivation& d) {
  return SigmaDerivation(d.sigma_, c * d.dx_, c * d.dy_);
}

SigmaDerivation SigmaDerivation::homogeneous_part(int k) const {
  return SigmaDerivation(sigma_, dx_.homogeneous_part(k), dy_.homogeneous_part(k));
}

namespace {

// delta(g^0), ..., delta(g^n) together with g^0..g^n and sigma(g)^0..sigma(g)^n.
struct PowerTable {
  std::vector<QElem> power;
  std::vector<QElem> sigma_power;
  std::vector<QElem> delta_power;

  PowerTable(const QElem& g, const QElem& sigma_g, const QElem& delta_g, int n) {
    const Field& f = g.field();
    power.push_back(QElem::constant(f.one()));
    sigma_power.push_back(QElem::constant(f.one()));
    delta_power.push_back(QElem(f));
    for (int k = 1; k <= n; ++k) {
      // delta(g^k) = delta(g^(k-1)) sigma(g) + g^(k-1) delta(g)
      delta_power.push_back(delta_power[k - 1] * sigma_g + power[k - 1] * delta_g);
      power.push_back(power[k - 1] * g);
      sigma_power.push_back(sigma_power[k - 1] * sigma_g);
    }
  }
};

}  // namespace

QElem apply(const SigmaDerivation& d, const QElem& a) {
  const Field& f = d.field();
  if (&a.field() != &f) throw ModeError("element and derivation from different fields");
  int max_i = 0, max_j = 0;
  for (const auto& [m, c] : a.terms()) {
    max_i = std::max(max_i, m.i);
    max_j = std::max(max_j, m.j);
  }
  const PowerTable xs(QElem::x(f), d.sigma().image_x(), d.dx(), max_i);
  const PowerTable ys(QElem::y(f), d.sigma().image_y(), d.dy(), max_j);
  QElem result(f);
  for (const auto& [m, c] : a.terms()) {
    // delta(y^j x^i) = delta(y^j) sigma(x^i) + y^j delta(x^i)
    QElem term = ys.delta_power[m.j] * xs.sigma_power[m.i] + ys.power[m.j] * xs.delta_power[m.i];
    result += c * term;
  }
  return result;
}

SigmaDerivation inner_from(const QElem& w, const Automorphism& sigma) {
  const Field& f = sigma.field();
  const QElem x = QElem::x(f);
  const QElem y = QElem::y(f);
  return SigmaDerivation::validate(sigma, w * sigma.image_x() - x * w, w * sigma.image_y() - y * w);
}

SigmaDerivation conjugate(const Automorphism& rho, const SigmaDerivation& d) {
  const Automorphism rho_inv = rho.inverse();
  const Automorphism twist = aut_compose(aut_compose(rho, d.sigma()), rho_inv);
  const QElem dx = apply_aut(rho, apply(d, rho_inv.image_x()));
  const QElem dy = apply_aut(rho, apply(d, rho_inv.image_y()));
  return SigmaDerivation::validate(twist, dx, dy);
}

namespace {

std::optional<QElem> is_inner_toric(const SigmaDerivation& d) {
  const Field& f = d.field();
  const FieldElem& alpha = d.sigma().mu1();
  const FieldElem& beta = d.sigma().mu2();
  const TwistedCenterDesc zc = twisted_center(d.sigma());

  // delta_w(x) = sum w_ij (alpha - q^j) y^j x^(i+1)
  // delta_w(y) = sum w_ij (beta - q^-i) q^i y^(j+1) x^i
  for (const auto& [m, c] : d.dx().terms())
    if (m.i == 0) return std::nullopt;
  for (const auto& [m, c] : d.dy().terms())
    if (m.j == 0) return std::nullopt;

  QElem w(f);
  auto solve_at = [&](Monomial m) -> bool {
    if (zc.contains_monomial(m)) return true;
    if (w.terms().count(m)) return true;
    const FieldElem c = d.dx().coeff({m.i + 1, m.j});
    const FieldElem e = d.dy().coeff({m.i, m.j + 1});
    const FieldElem ax = alpha - f.q_power(m.j);
    const FieldElem by = beta - f.q_power(-m.i);
    if (!ax.is_zero()) w.add_term(m, c / ax);
    else if (!by.is_zero()) w.add_term(m, e / (f.q_power(m.i) * by));
    return true;
  };
  for (const auto& [m, c] : d.dx().terms()) solve_at({m.i - 1, m.j});
  for (const auto& [m, c] : d.dy().terms()) solve_at({m.i, m.j - 1});

  if (!(inner_from(w, d.sigma()) == d)) return std::nullopt;
  return w;
}

// Flip sigma preserves total degree, so each degree-k slice of delta must be
// induced by the degree-(k-1) slice of w. Solve each slice exactly.
std::optional<QElem> is_inner_flip(const SigmaDerivation& d) {
  const Field& f = d.field();
  const int top = std::max(d.dx().degree(), d.dy().degree());
  QElem w(f);
  for (int k = 0; k <= top; ++k) {
    const QElem sx = d.dx().homogeneous_part(k);
    const QElem sy = d.dy().homogeneous_part(k);
    if (sx.is_zero() && sy.is_zero()) continue;
    if (k == 0) return std::nullopt;
    // unknowns: coefficients of y^l x^(k-1-l), l = 0..k-1
    std::vector<SigmaDerivation> basis;
    for (int l = 0; l < k; ++l)
      basis.push_back(inner_from(QElem::monomial(f.one(), {k - 1 - l, l}), d.sigma()));
    // equations: coefficients of y^l x^(k-l) in both images
    FieldMatrix a;
    std::vector<FieldElem> rhs;
    for (int img = 0; img < 2; ++img) {
      const QElem& target = img == 0 ? sx : sy;
      for (int l = 0; l <= k; ++l) {
        const Monomial m{k - l, l};
        std::vector<FieldElem> row;
        for (const auto& b : basis) row.push_back((img == 0 ? b.dx() : b.dy()).coeff(m));
        a.rows.push_back(std::move(row));
        rhs.push_back(target.coeff(m));
      }
    }
    auto sol = solve_linear(std::move(a), std::move(rhs), basis.size(), f);
    if (!sol) return std::nullopt;
    for (int l = 0; l < k; ++l) w.add_term({k - 1 - l, l}, (*sol)[l]);
  }
  if (!(inner_from(w, d.sigma()) == d)) return std::nullopt;
  return w;
}

}  // namespace

std::optional<QElem> is_inner(const SigmaDerivation& d) {
  if (d.is_zero()) return QElem(d.field());
  return d.sigma().is_toric() ? is_inner_toric(d) : is_inner_flip(d);
}

SigmaDerivation lift(const SigmaDerivation& d, const Field& target) {
  return SigmaDerivation::validate(lift(d.sigma(), target), lift(d.dx(), target), lift(d.dy(), target));
}

}  // namespace qplane
