#pragma once

#include <qplane/automorphism.hpp>
#include <qplane/error.hpp>

#include <optional>

namespace qplane {

/// Raised when generator images violate u sigma(y) + x v = q (v sigma(x) + y u).
class IncompatibleImages : public Error {
 public:
  explicit IncompatibleImages(QElem residual)
      : Error(ErrorCode::Incompatible,
              "images are not compatible with xy = q yx; residual " + residual.to_string()),
        residual_(std::move(residual)) {}

  const QElem& residual() const { return residual_; }

 private:
  QElem residual_;
};

/// A sigma-derivation, stored by its twisting automorphism and the images of
/// the generators. Every instance satisfies the compatibility identity.
class SigmaDerivation {
 public:
  /// Checks the compatibility identity by full normal-form expansion.
  static SigmaDerivation validate(const Automorphism& sigma, const QElem& dx, const QElem& dy);
  static SigmaDerivation zero(const Automorphism& sigma);

  const Automorphism& sigma() const { return sigma_; }
  const QElem& dx() const { return dx_; }
  const QElem& dy() const { return dy_; }
  const Field& field() const { return sigma_.field(); }
  bool is_zero() const { return dx_.is_zero() && dy_.is_zero(); }

  /// Sum of two derivations with the same twist.
  friend SigmaDerivation operator+(const SigmaDerivation& a, const SigmaDerivation& b);
  friend SigmaDerivation operator-(const SigmaDerivation& a, const SigmaDerivation& b);
  friend SigmaDerivation operator*(const FieldElem& c, const SigmaDerivation& d);

  friend bool operator==(const SigmaDerivation&, const SigmaDerivation&) = default;

  /// Degree-k part: images restricted to total degree k. Valid for flip
  /// sigma and for toric sigma alike, since both preserve total degree.
  SigmaDerivation homogeneous_part(int k) const;

 private:
  SigmaDerivation(Automorphism sigma, QElem dx, QElem dy)
      : sigma_(std::move(sigma)), dx_(std::move(dx)), dy_(std::move(dy)) {}

  Automorphism sigma_;
  QElem dx_;
  QElem dy_;
};

/// u sigma(y) + x v - q (v sigma(x) + y u); zero iff (u, v) extends.
QElem compatibility_residual(const Automorphism& sigma, const QElem& u, const QElem& v);

/// delta(a) via the twisted Leibniz rule delta(ab) = delta(a) sigma(b) + a delta(b).
QElem apply(const SigmaDerivation& d, const QElem& a);

/// The inner sigma-derivation b -> w sigma(b) - b w.
SigmaDerivation inner_from(const QElem& w, const Automorphism& sigma);

/// rho delta rho^-1, twisted by rho sigma rho^-1.
SigmaDerivation conjugate(const Automorphism& rho, const SigmaDerivation& d);

/// A witness w with inner_from(w, sigma) = d, or nullopt if d is not inner.
/// The witness has no component in the twisted center, which makes it unique.
std::optional<QElem> is_inner(const SigmaDerivation& d);

SigmaDerivation lift(const SigmaDerivation& d, const Field& target);

}  // namespace qplane
