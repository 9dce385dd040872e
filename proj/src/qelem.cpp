#include <qplane/error.hpp>
#include <qplane/qelem.hpp>

#include <ostream>
#include <sstream>

namespace qplane {

QElem QElem::constant(const FieldElem& c) { return monomial(c, {0, 0}); }

QElem QElem::monomial(const FieldElem& c, Monomial m) {
  if (m.i < 0 || m.j < 0) throw Error(ErrorCode::Internal, "negative exponent in monomial");
  QElem r(c.field());
  if (!c.is_zero()) r.terms_.emplace(m, c);
  return r;
}

FieldElem QElem::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

int QElem::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

QElem QElem::homogeneous_part(int k) const {
  QElem r(*field_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) r.terms_.emplace(m, c);
  return r;
}

bool QElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

void QElem::add_term(Monomial m, const FieldElem& c) {
  if (&c.field() != field_) throw ModeError("coefficient from a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QElem QElem::operator-() const {
  QElem r(*field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

QElem& QElem::operator+=(const QElem& b) {
  if (b.field_ != field_) throw ModeError("mixed fields in quantum plane sum");
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

QElem& QElem::operator-=(const QElem& b) {
  if (b.field_ != field_) throw ModeError("mixed fields in quantum plane difference");
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

QElem operator+(const QElem& a, const QElem& b) {
  QElem r = a;
  r += b;
  return r;
}

QElem operator-(const QElem& a, const QElem& b) {
  QElem r = a;
  r -= b;
  return r;
}

QElem operator*(const FieldElem& c, const QElem& a) {
  QElem r(a.field());
  if (c.is_zero()) return r;
  for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, c * v);
  return r;
}

QElem q_mul(const QElem& a, const QElem& b) {
  if (&a.field() != &b.field()) throw ModeError("mixed fields in quantum plane product");
  const Field& f = a.field();
  QElem r(f);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      FieldElem c = ca * cb;
      const long twist = static_cast<long>(ma.i) * mb.j;
      if (twist != 0) c = c * f.q_power(twist);
      r.add_term({ma.i + mb.i, ma.j + mb.j}, c);
    }
  return r;
}

QElem operator*(const QElem& a, const QElem& b) { return q_mul(a, b); }

QElem pow(const QElem& a, int e) {
  QElem r = QElem::constant(a.field().one());
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

namespace {

bool has_top_level_sum(const std::string& s, std::size_t from) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    else if (s[k] == ')') --depth;
    else if (depth == 0 && k >= from && k > 0 && (s[k] == '+' || s[k] == '-')) return true;
  }
  return false;
}

}  // namespace

std::string QElem::to_string() const {
  if (terms_.empty()) return "0";
  if (is_constant()) return terms_.begin()->second.to_string();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.to_string();
    bool negative = false;
    if (coeff.front() == '-' && !has_top_level_sum(coeff, 1)) {
      negative = true;
      coeff.erase(0, 1);
    }
    if (has_top_level_sum(coeff, 0)) coeff = "(" + coeff + ")";
    if (negative) os << "-";
    else if (!first) os << "+";
    first = false;
    std::string mono;
    auto power = [](const char* v, int e) {
      std::string s = v;
      if (e > 1) s += "^" + std::to_string(e);
      return s;
    };
    if (m.j > 0) mono = power("y", m.j);
    if (m.i > 0) mono += (mono.empty() ? "" : "*") + power("x", m.i);
    if (mono.empty()) os << coeff;
    else if (coeff == "1") os << mono;
    else os << coeff << "*" << mono;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QElem& a) { return os << a.to_string(); }

QElem lift(const QElem& a, const Field& target) {
  QElem r(target);
  for (const auto& [m, c] : a.terms()) r.add_term(m, lift(c, target));
  return r;
}

}  // namespace qplane
