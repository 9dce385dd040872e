#pragma once

// Elements of the quantum plane K_q[x,y], xy = q yx, in normal form
// sum c_ij y^j x^i.

#include <qplane/field.hpp>

#include <map>
#include <string>

namespace qplane {

/// Exponent pair of the normal-form monomial y^j x^i, stored as (i, j) =
/// (x-exponent, y-exponent).
struct Monomial {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Orders by (j, i); the printer walks it backwards.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  }
};

class QElem {
 public:
  using Terms = std::map<Monomial, FieldElem, MonomialOrder>;

  explicit QElem(const Field& field) : field_(&field) {}

  static QElem constant(const FieldElem& c);
  static QElem monomial(const FieldElem& c, Monomial m);
  static QElem x(const Field& field) { return monomial(field.one(), {1, 0}); }
  static QElem y(const Field& field) { return monomial(field.one(), {0, 1}); }

  const Field& field() const { return *field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FieldElem coeff(Monomial m) const;
  /// Largest total degree of a monomial; -1 for zero.
  int degree() const;
  /// Terms of total degree exactly k.
  QElem homogeneous_part(int k) const;
  bool is_constant() const;

  /// Adds c * y^j x^i.
  void add_term(Monomial m, const FieldElem& c);

  QElem operator-() const;
  friend QElem operator+(const QElem& a, const QElem& b);
  friend QElem operator-(const QElem& a, const QElem& b);
  friend QElem operator*(const QElem& a, const QElem& b);
  friend QElem operator*(const FieldElem& c, const QElem& a);
  QElem& operator+=(const QElem& b);
  QElem& operator-=(const QElem& b);

  friend bool operator==(const QElem& a, const QElem& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// "c*y^j*x^i" terms, (j, i) descending.
  std::string to_string() const;

 private:
  const Field* field_;
  Terms terms_;
};

/// Product in normal form: (y^a x^b)(y^c x^d) = q^(b c) y^(a+c) x^(b+d).
QElem q_mul(const QElem& a, const QElem& b);

QElem pow(const QElem& a, int e);

QElem lift(const QElem& a, const Field& target);

std::ostream& operator<<(std::ostream& os, const QElem& a);

}  // namespace qplane
