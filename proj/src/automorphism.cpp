#include <qplane/automorphism.hpp>
#include <qplane/error.hpp>

namespace qplane {

Automorphism Automorphism::toric(const FieldElem& mu1, const FieldElem& mu2) {
  if (&mu1.field() != &mu2.field()) throw ModeError("automorphism scalars from different fields");
  if (mu1.is_zero() || mu2.is_zero()) throw Error(ErrorCode::Incompatible, "automorphism scalars must be nonzero");
  return Automorphism(AutKind::Toric, mu1, mu2);
}

Automorphism Automorphism::flip(const FieldElem& mu1, const FieldElem& mu2) {
  if (&mu1.field() != &mu2.field()) throw ModeError("automorphism scalars from different fields");
  if (!mu1.field().q_is_minus_one())
    throw ModeError("flip automorphisms exist only for q = -1 (field cyclotomic:2), not " +
                    mu1.field().name());
  if (mu1.is_zero() || mu2.is_zero()) throw Error(ErrorCode::Incompatible, "automorphism scalars must be nonzero");
  return Automorphism(AutKind::Flip, mu1, mu2);
}

Automorphism Automorphism::identity(const Field& field) { return toric(field.one(), field.one()); }

QElem Automorphism::image_x() const {
  return QElem::monomial(mu1_, is_toric() ? Monomial{1, 0} : Monomial{0, 1});
}

QElem Automorphism::image_y() const {
  return QElem::monomial(mu2_, is_toric() ? Monomial{0, 1} : Monomial{1, 0});
}

Automorphism Automorphism::inverse() const {
  if (is_toric()) return toric(mu1_.inverse(), mu2_.inverse());
  // Flip(u, v) o Flip(1/v, 1/u) = id
  return flip(mu2_.inverse(), mu1_.inverse());
}

std::string Automorphism::to_string() const {
  return std::string(is_toric() ? "toric:" : "flip:") + mu1_.to_string() + "," + mu2_.to_string();
}

QElem apply_aut(const Automorphism& rho, const QElem& a) {
  if (&rho.field() != &a.field()) throw ModeError("automorphism and element from different fields");
  const Field& f = a.field();
  QElem r(f);
  for (const auto& [m, c] : a.terms()) {
    FieldElem s = c * rho.mu1().pow(m.i) * rho.mu2().pow(m.j);
    if (rho.is_toric()) {
      r.add_term(m, s);
    } else {
      // (m2 x)^j (m1 y)^i = m1^i m2^j x^j y^i = m1^i m2^j (-1)^(ij) y^i x^j
      if ((static_cast<long>(m.i) * m.j) % 2 != 0) s = -s;
      r.add_term({m.j, m.i}, s);
    }
  }
  return r;
}

Automorphism aut_compose(const Automorphism& f, const Automorphism& g) {
  if (&f.field() != &g.field()) throw ModeError("automorphisms from different fields");
  if (f.is_toric() && g.is_toric()) return Automorphism::toric(f.mu1() * g.mu1(), f.mu2() * g.mu2());
  if (f.is_flip() && g.is_toric())
    // x -> g1 x -> g1 f1 y
    return Automorphism::flip(f.mu1() * g.mu1(), f.mu2() * g.mu2());
  if (f.is_toric() && g.is_flip())
    // x -> g1 y -> g1 f2 y
    return Automorphism::flip(g.mu1() * f.mu2(), g.mu2() * f.mu1());
  // x -> g1 y -> g1 f2 x
  return Automorphism::toric(g.mu1() * f.mu2(), g.mu2() * f.mu1());
}

bool centralizer_contains(const Automorphism& sigma, const Automorphism& rho) {
  return aut_compose(rho, sigma) == aut_compose(sigma, rho);
}

Automorphism lift(const Automorphism& rho, const Field& target) {
  return rho.is_toric() ? Automorphism::toric(lift(rho.mu1(), target), lift(rho.mu2(), target))
                        : Automorphism::flip(lift(rho.mu1(), target), lift(rho.mu2(), target));
}

}  // namespace qplane
