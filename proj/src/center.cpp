#include <qplane/center.hpp>

namespace qplane {

bool is_central_monomial(const Field& field, Monomial m) {
  const int t = field.t();
  if (t == 0) return m.i == 0 && m.j == 0;
  return m.i % t == 0 && m.j % t == 0;
}

bool center_membership(const QElem& a) {
  for (const auto& [m, c] : a.terms())
    if (!is_central_monomial(a.field(), m)) return false;
  return true;
}

std::optional<Monomial> twisted_center_generator(const Automorphism& sigma) {
  if (!sigma.is_toric()) return std::nullopt;
  const Field& f = sigma.field();
  auto j = is_q_power(sigma.mu1());
  auto minus_i = is_q_power(sigma.mu2());
  if (!j || !minus_i) return std::nullopt;
  long i = -*minus_i;
  long jj = *j;
  if (f.kind() == FieldKind::RootOfUnity) {
    i = ((i % f.t()) + f.t()) % f.t();
  } else if (i < 0 || jj < 0) {
    return std::nullopt;
  }
  return Monomial{static_cast<int>(i), static_cast<int>(jj)};
}

TwistedCenterDesc twisted_center(const Automorphism& sigma) {
  TwistedCenterDesc d;
  d.t = sigma.field().t();
  auto gen = twisted_center_generator(sigma);
  if (!gen) return d;
  if (*gen == Monomial{0, 0}) {
    d.kind = TwistedCenterDesc::Kind::FullPolynomialCenter;
  } else {
    d.kind = TwistedCenterDesc::Kind::CenterTimesMonomial;
    d.monomial = *gen;
  }
  return d;
}

bool TwistedCenterDesc::contains_monomial(Monomial m) const {
  switch (kind) {
    case Kind::Zero:
      return false;
    case Kind::FullPolynomialCenter:
      return t == 0 ? (m.i == 0 && m.j == 0) : (m.i % t == 0 && m.j % t == 0);
    case Kind::CenterTimesMonomial:
      if (m.i < monomial.i || m.j < monomial.j) return false;
      if (t == 0) return m == monomial;
      return (m.i - monomial.i) % t == 0 && (m.j - monomial.j) % t == 0;
  }
  return false;
}

bool TwistedCenterDesc::contains(const QElem& a) const {
  for (const auto& [m, c] : a.terms())
    if (!contains_monomial(m)) return false;
  return true;
}

std::string TwistedCenterDesc::to_string() const {
  const std::string center = t == 0 ? "K" : "K[x^" + std::to_string(t) + ",y^" + std::to_string(t) + "]";
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::FullPolynomialCenter:
      return center;
    case Kind::CenterTimesMonomial: {
      std::string mono;
      if (monomial.j > 0) mono = monomial.j == 1 ? "y" : "y^" + std::to_string(monomial.j);
      if (monomial.i > 0)
        mono += (mono.empty() ? "" : "*") + (monomial.i == 1 ? std::string("x") : "x^" + std::to_string(monomial.i));
      return center + "*" + mono;
    }
  }
  return "0";
}

}  // namespace qplane
