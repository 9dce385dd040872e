#pragma once

// Exact coefficient fields for the quantum plane.
//
// Two families are supported:
//   * GenericQ      K = F(q), rational functions in an indeterminate q.
//   * RootOfUnity   K = F with q = a primitive t-th root of unity.
// In both cases the constants F are a cyclotomic field Q(z), z = zeta_n, where
// n is the conductor. By default n = 1 (F = Q) for GenericQ and n = t for
// RootOfUnity, so that q = z. Larger conductors adjoin further roots of unity,
// which the isotropy sampling oracle needs; in RootOfUnity mode t | n and
// q = z^(n/t).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qplane {

namespace detail {
using Cyclo = std::vector<mpq_class>;  // element of Q(z), reduced mod Phi_n
using QPoly = std::vector<Cyclo>;      // polynomial in q over Q(z)
}  // namespace detail

enum class FieldKind { GenericQ, RootOfUnity };

/// Order of q together with the field family; t = 0 in GenericQ mode.
struct FieldMode {
  FieldKind kind = FieldKind::GenericQ;
  int t = 0;

  friend bool operator==(const FieldMode&, const FieldMode&) = default;
};

class FieldElem;

/// A coefficient field. Instances are interned: there is exactly one object
/// per (kind, t, conductor), so fields compare by address.
class Field {
 public:
  static const Field& generic(int adjoin = 1);
  static const Field& root_of_unity(int t, int adjoin = 1);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  FieldKind kind() const { return mode_.kind; }
  FieldMode mode() const { return mode_; }
  int t() const { return mode_.t; }
  int conductor() const { return conductor_; }
  bool q_is_minus_one() const { return mode_.kind == FieldKind::RootOfUnity && mode_.t == 2; }

  /// The same family with the n-th roots of unity adjoined to the constants.
  const Field& with_roots_of_unity(int n) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem integer(long value) const;
  FieldElem rational(const mpq_class& value) const;
  FieldElem q() const;
  FieldElem q_power(long k) const;
  /// zeta_order^k; order must divide the conductor.
  FieldElem root_of_unity_power(int order, long k) const;

  /// "generic", "cyclotomic:3", "generic[z=zeta_8]", ...
  std::string name() const;

  // Internals shared with the arithmetic code.
  int cyclo_degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const detail::Cyclo& modulus() const { return modulus_; }
  const detail::Cyclo& zeta_power(long e) const;

 private:
  Field(FieldMode mode, int conductor);

  FieldMode mode_;
  int conductor_;
  detail::Cyclo modulus_;
  std::vector<detail::Cyclo> zeta_powers_;  // z^0 .. z^(n-1), reduced
};

/// An element of a Field. Immutable value type with canonical representation:
///   GenericQ     num/den coprime, den monic (leading coefficient 1);
///   RootOfUnity  a single constant of Q(z) reduced modulo Phi_n.
/// Equality is structural.
class FieldElem {
 public:
  const Field& field() const { return *field_; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True when the element is a constant of Q (no q, no z).
  std::optional<mpq_class> as_rational() const;

  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

  const detail::QPoly& numerator() const { return num_; }
  const detail::QPoly& denominator() const { return den_; }

 private:
  friend class Field;
  friend FieldElem lift(const FieldElem&, const Field&);
  FieldElem(const Field* field, detail::QPoly num, detail::QPoly den);
  void normalize();

  const Field* field_;
  detail::QPoly num_;
  detail::QPoly den_;
};

/// q^k in canonical form; the exponent is reduced mod t in RootOfUnity mode.
FieldElem q_power(const Field& field, long k);

/// The exponent j with a = q^j, if a is exactly such a power. In RootOfUnity
/// mode the least j in [0, t) is returned. Throws DivisionByZero on a = 0.
std::optional<long> is_q_power(const FieldElem& a);

/// Embeds a into a field of the same family whose conductor is a multiple of
/// a's conductor.
FieldElem lift(const FieldElem& a, const Field& target);

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

}  // namespace qplane
