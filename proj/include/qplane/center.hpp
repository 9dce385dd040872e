#pragma once

#include <qplane/automorphism.hpp>

#include <optional>

namespace qplane {

/// a lies in the center K[x^t, y^t] (K alone when q is generic).
bool center_membership(const QElem& a);

/// y^j x^i is central: t | i and t | j (only (0,0) for generic q).
bool is_central_monomial(const Field& field, Monomial m);

/// The sigma-twisted center Z_sigma = { a : a sigma(b) = b a for all b }.
/// Infinite-dimensional in general, so it is described rather than listed.
struct TwistedCenterDesc {
  enum class Kind { Zero, FullPolynomialCenter, CenterTimesMonomial };

  Kind kind = Kind::Zero;
  Monomial monomial{};  // meaningful for CenterTimesMonomial
  int t = 0;            // period of the center; 0 for generic q

  /// Whether y^j x^i lies in Z_sigma.
  bool contains_monomial(Monomial m) const;
  bool contains(const QElem& a) const;
  std::string to_string() const;
};

TwistedCenterDesc twisted_center(const Automorphism& sigma);

/// For toric sigma = (alpha, beta): the least (i, j) >= 0 with alpha = q^j and
/// beta = q^(-i), i.e. the generator y^j x^i of Z_sigma over the center.
std::optional<Monomial> twisted_center_generator(const Automorphism& sigma);

}  // namespace qplane
