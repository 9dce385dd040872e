#pragma once

#include <qplane/qelem.hpp>

namespace qplane {

enum class AutKind { Toric, Flip };

/// Automorphism of K_q[x,y]:
///   Toric(m1, m2): x -> m1 x, y -> m2 y
///   Flip(m1, m2):  x -> m1 y, y -> m2 x   (only when q = -1)
class Automorphism {
 public:
  static Automorphism toric(const FieldElem& mu1, const FieldElem& mu2);
  static Automorphism flip(const FieldElem& mu1, const FieldElem& mu2);
  static Automorphism identity(const Field& field);

  AutKind kind() const { return kind_; }
  bool is_toric() const { return kind_ == AutKind::Toric; }
  bool is_flip() const { return kind_ == AutKind::Flip; }
  const FieldElem& mu1() const { return mu1_; }
  const FieldElem& mu2() const { return mu2_; }
  const Field& field() const { return mu1_.field(); }

  QElem image_x() const;
  QElem image_y() const;

  Automorphism inverse() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

  /// "toric:<mu1>,<mu2>" / "flip:<mu1>,<mu2>"
  std::string to_string() const;

 private:
  Automorphism(AutKind kind, FieldElem mu1, FieldElem mu2)
      : kind_(kind), mu1_(std::move(mu1)), mu2_(std::move(mu2)) {}

  AutKind kind_;
  FieldElem mu1_;
  FieldElem mu2_;
};

QElem apply_aut(const Automorphism& rho, const QElem& a);

/// f o g, i.e. apply g first.
Automorphism aut_compose(const Automorphism& f, const Automorphism& g);

/// rho sigma = sigma rho
bool centralizer_contains(const Automorphism& sigma, const Automorphism& rho);

Automorphism lift(const Automorphism& rho, const Field& target);

}  // namespace qplane
