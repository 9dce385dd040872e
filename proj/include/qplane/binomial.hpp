#pragma once

#include <qplane/field.hpp>

#include <string>
#include <vector>

namespace qplane {

/// u^u_exp * v^v_exp = value
struct BinomialEquation {
  long u_exp;
  long v_exp;
  FieldElem value;
};

/// A conjunction of binomial equations in two nonzero unknowns u, v (or a
/// single unknown, with v_exp = 0 throughout).
class BinomialSystem {
 public:
  explicit BinomialSystem(const Field& field) : field_(&field) {}

  /// Records lhs = u^a v^b * rhs. Trivial when both sides vanish, contradictory
  /// when exactly one does.
  void require(const FieldElem& lhs, long a, long b, const FieldElem& rhs);
  void add(BinomialEquation eq);
  void mark_contradictory() { contradictory_ = true; }

  const std::vector<BinomialEquation>& equations() const { return equations_; }
  bool contradictory() const { return contradictory_; }
  const Field& field() const { return *field_; }

  bool satisfied_by(const FieldElem& u, const FieldElem& v) const;

  /// Whether some (u, v) in (K*)^2, K algebraically closed, satisfies all
  /// equations: every integer relation among exponent vectors must map the
  /// values to 1.
  bool solvable() const;

  /// Equations with duplicates removed, rendered as "u^a*v^b=c".
  std::vector<std::string> describe(const char* u_name = "u", const char* v_name = "v") const;

 private:
  const Field* field_;
  std::vector<BinomialEquation> equations_;
  bool contradictory_ = false;
};

BinomialSystem lift(const BinomialSystem& s, const Field& target);

}  // namespace qplane
