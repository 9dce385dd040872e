#include <qplane/binomial.hpp>
#include <qplane/lattice.hpp>

#include <set>

namespace qplane {

void BinomialSystem::require(const FieldElem& lhs, long a, long b, const FieldElem& rhs) {
  if (lhs.is_zero() && rhs.is_zero()) return;
  if (lhs.is_zero() || rhs.is_zero()) {
    contradictory_ = true;
    return;
  }
  add({a, b, lhs / rhs});
}

void BinomialSystem::add(BinomialEquation eq) {
  if (eq.u_exp == 0 && eq.v_exp == 0) {
    if (!eq.value.is_one()) contradictory_ = true;
    return;
  }
  for (const auto& e : equations_)
    if (e.u_exp == eq.u_exp && e.v_exp == eq.v_exp && e.value == eq.value) return;
  equations_.push_back(std::move(eq));
}

bool BinomialSystem::satisfied_by(const FieldElem& u, const FieldElem& v) const {
  if (contradictory_) return false;
  for (const auto& e : equations_) {
    const FieldElem value = lift(e.value, u.field());
    if (!(u.pow(e.u_exp) * v.pow(e.v_exp) == value)) return false;
  }
  return true;
}

bool BinomialSystem::solvable() const {
  if (contradictory_) return false;
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& e : equations_) rows.push_back({mpz_class(e.u_exp), mpz_class(e.v_exp)});
  for (const auto& k : integer_left_kernel(rows, 2)) {
    FieldElem prod = field_->one();
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) prod = prod * equations_[i].value.pow(k[i].get_si());
    if (!prod.is_one()) return false;
  }
  return true;
}

std::vector<std::string> BinomialSystem::describe(const char* u_name, const char* v_name) const {
  std::vector<std::string> out;
  if (contradictory_) out.push_back("0=1");
  auto power = [](const char* name, long e) {
    std::string s = name;
    if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    return s;
  };
  for (const auto& e : equations_) {
    std::string lhs;
    if (e.u_exp != 0) lhs = power(u_name, e.u_exp);
    if (e.v_exp != 0) lhs += (lhs.empty() ? "" : "*") + power(v_name, e.v_exp);
    out.push_back(lhs + "=" + e.value.to_string());
  }
  return out;
}

BinomialSystem lift(const BinomialSystem& s, const Field& target) {
  BinomialSystem r(target);
  if (s.contradictory()) r.mark_contradictory();
  for (const auto& e : s.equations()) r.add({e.u_exp, e.v_exp, lift(e.value, target)});
  return r;
}

}  // namespace qplane
