#include <qplane/error.hpp>
#include <qplane/field.hpp>

#include "ratpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace qplane {

using detail::Cyclo;
using detail::QPoly;

namespace {

// ---- Q(z) constants -------------------------------------------------------

Cyclo c_one() { return Cyclo{mpq_class(1)}; }

bool c_is_one(const Cyclo& a) { return a.size() == 1 && a[0] == 1; }

Cyclo c_add(const Cyclo& a, const Cyclo& b) { return detail::add(a, b); }
Cyclo c_sub(const Cyclo& a, const Cyclo& b) { return detail::sub(a, b); }

Cyclo c_neg(Cyclo a) {
  for (auto& c : a) c = -c;
  return a;
}

Cyclo c_mul(const Cyclo& a, const Cyclo& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const mpq_class& s = a.size() == 1 ? a[0] : b[0];
    Cyclo r = a.size() == 1 ? b : a;
    for (auto& c : r) c *= s;
    return r;
  }
  Cyclo r = detail::mul(a, b);
  if (detail::degree(r) >= f.cyclo_degree()) r = detail::rem(r, f.modulus());
  return r;
}

Cyclo c_inv(const Cyclo& a, const Field& f) {
  if (a.empty()) throw DivisionByZero();
  if (a.size() == 1) return Cyclo{1 / a[0]};
  return detail::inverse_mod(a, f.modulus());
}

// ---- polynomials in q over Q(z) -------------------------------------------

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int qp_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qp_one() { return QPoly{c_one()}; }

bool qp_is_one(const QPoly& p) { return p.size() == 1 && c_is_one(p[0]); }

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = c_add(a[i], b[i]);
    else if (i < a.size()) r[i] = a[i];
    else r[i] = b[i];
  }
  qp_trim(r);
  return r;
}

QPoly qp_neg(QPoly a) {
  for (auto& c : a) c = c_neg(std::move(c));
  return a;
}

QPoly qp_mul(const QPoly& a, const QPoly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      r[i + j] = c_add(r[i + j], c_mul(a[i], b[j], f));
    }
  }
  qp_trim(r);
  return r;
}

QPoly qp_scale(QPoly a, const Cyclo& s, const Field& f) {
  for (auto& c : a) c = c_mul(c, s, f);
  qp_trim(a);
  return a;
}

void qp_divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem, const Field& f) {
  if (b.empty()) throw DivisionByZero();
  rem = a;
  qp_trim(rem);
  const int db = qp_degree(b);
  if (qp_degree(rem) < db) {
    quot.clear();
    return;
  }
  quot.assign(rem.size() - b.size() + 1, Cyclo{});
  const Cyclo lead_inv = c_inv(b.back(), f);
  while (qp_degree(rem) >= db) {
    const int shift = qp_degree(rem) - db;
    Cyclo c = c_mul(rem.back(), lead_inv, f);
    for (int i = 0; i <= db; ++i) rem[shift + i] = c_sub(rem[shift + i], c_mul(c, b[i], f));
    rem.back().clear();
    qp_trim(rem);
    quot[shift] = std::move(c);
  }
  qp_trim(quot);
}

int lowest_index(const QPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) return static_cast<int>(i);
  return -1;
}

bool is_q_monomial(const QPoly& p) { return !p.empty() && lowest_index(p) == qp_degree(p); }

QPoly q_monomial(int k) {
  QPoly p(k + 1);
  p[k] = c_one();
  return p;
}

QPoly qp_monic(QPoly p, const Field& f) {
  if (p.empty() || c_is_one(p.back())) return p;
  return qp_scale(std::move(p), c_inv(p.back(), f), f);
}

QPoly qp_gcd(QPoly a, QPoly b, const Field& f) {
  if (a.empty()) return qp_monic(std::move(b), f);
  if (b.empty()) return qp_monic(std::move(a), f);
  if (qp_degree(a) == 0 || qp_degree(b) == 0) return qp_one();
  if (is_q_monomial(a) || is_q_monomial(b)) {
    return q_monomial(std::min(lowest_index(a), lowest_index(b)));
  }
  while (!b.empty()) {
    QPoly quot, r;
    qp_divmod(a, b, quot, r, f);
    a = std::move(b);
    b = std::move(r);
  }
  return qp_monic(std::move(a), f);
}

QPoly qp_exact_div(const QPoly& a, const QPoly& b, const Field& f) {
  if (qp_is_one(b)) return a;
  QPoly quot, r;
  qp_divmod(a, b, quot, r, f);
  if (!r.empty()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return quot;
}

// ---- printing -------------------------------------------------------------

std::string rational_string(const mpq_class& c) { return c.get_str(); }

// Polynomial with rational coefficients in the given symbol, highest degree
// first, e.g. "-q-1", "3/2*z^2+z".
std::string rat_poly_string(const Cyclo& p, const std::string& sym) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = static_cast<int>(p.size()) - 1; e >= 0; --e) {
    const mpq_class& c = p[e];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    first = false;
    if (e == 0) {
      os << rational_string(mag);
      continue;
    }
    if (mag != 1) os << rational_string(mag) << "*";
    os << sym;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

bool is_composite(const std::string& s) {
  std::string_view body = s;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  return body.find_first_of("+-*/") != std::string_view::npos;
}

std::string paren_if_composite(const std::string& s) { return is_composite(s) ? "(" + s + ")" : s; }

std::string symbol_for_constants(const Field& f) {
  if (f.kind() == FieldKind::RootOfUnity && f.conductor() == f.t()) return "q";
  return "z";
}

// Polynomial in q whose coefficients are constants of Q(z).
std::string qpoly_string(const QPoly& p, const Field& f) {
  if (p.empty()) return "0";
  const std::string csym = symbol_for_constants(f);
  std::ostringstream os;
  bool first = true;
  for (int e = qp_degree(p); e >= 0; --e) {
    const Cyclo& c = p[e];
    if (c.empty()) continue;
    std::string coeff;
    bool negative = false;
    if (c.size() == 1) {
      negative = c[0] < 0;
      coeff = rational_string(abs(c[0]));
    } else {
      coeff = "(" + rat_poly_string(c, csym) + ")";
    }
    if (negative) os << "-";
    else if (!first) os << "+";
    first = false;
    if (e == 0) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << coeff << "*";
    os << "q";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// ---- Field ----------------------------------------------------------------

Field::Field(FieldMode mode, int conductor)
    : mode_(mode), conductor_(conductor), modulus_(detail::cyclotomic_polynomial(conductor)) {
  zeta_powers_.reserve(conductor);
  Cyclo p = c_one();
  const Cyclo z = conductor == 1 ? c_one() : Cyclo{mpq_class(0), mpq_class(1)};
  for (int e = 0; e < conductor; ++e) {
    zeta_powers_.push_back(p);
    p = detail::rem(detail::mul(p, z), modulus_);
  }
}

namespace {
const Field& intern(FieldMode mode, int conductor,
                    std::unique_ptr<Field> (*make)(FieldMode, int)) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(registry_mutex());
  auto key = std::make_tuple(static_cast<int>(mode.kind), mode.t, conductor);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, make(mode, conductor)).first;
  return *it->second;
}
}  // namespace

const Field& Field::generic(int adjoin) {
  if (adjoin < 1) throw ModeError("adjoined root-of-unity order must be positive");
  return intern(FieldMode{FieldKind::GenericQ, 0}, adjoin, [](FieldMode m, int n) {
    return std::unique_ptr<Field>(new Field(m, n));
  });
}

const Field& Field::root_of_unity(int t, int adjoin) {
  if (t < 2) throw ModeError("order of q must be at least 2");
  if (adjoin < 1) throw ModeError("adjoined root-of-unity order must be positive");
  const int n = std::lcm(t, adjoin);
  return intern(FieldMode{FieldKind::RootOfUnity, t}, n, [](FieldMode m, int n) {
    return std::unique_ptr<Field>(new Field(m, n));
  });
}

const Field& Field::with_roots_of_unity(int n) const {
  const int c = std::lcm(conductor_, n);
  return kind() == FieldKind::GenericQ ? generic(c) : root_of_unity(t(), c);
}

const Cyclo& Field::zeta_power(long e) const {
  long r = e % conductor_;
  if (r < 0) r += conductor_;
  return zeta_powers_[r];
}

FieldElem Field::zero() const { return FieldElem(this, {}, qp_one()); }
FieldElem Field::one() const { return FieldElem(this, qp_one(), qp_one()); }
FieldElem Field::integer(long value) const { return rational(mpq_class(value)); }

FieldElem Field::rational(const mpq_class& value) const {
  if (value == 0) return zero();
  mpq_class v = value;
  v.canonicalize();
  return FieldElem(this, QPoly{Cyclo{v}}, qp_one());
}

FieldElem Field::q() const { return q_power(1); }

FieldElem Field::q_power(long k) const {
  if (kind() == FieldKind::RootOfUnity) {
    long r = k % t();
    if (r < 0) r += t();
    return FieldElem(this, QPoly{zeta_power(r * (conductor_ / t()))}, qp_one());
  }
  if (k >= 0) return FieldElem(this, q_monomial(static_cast<int>(k)), qp_one());
  return FieldElem(this, qp_one(), q_monomial(static_cast<int>(-k)));
}

FieldElem Field::root_of_unity_power(int order, long k) const {
  if (order < 1 || conductor_ % order != 0)
    throw ModeError("field " + name() + " does not contain the primitive " +
                    std::to_string(order) + "-th roots of unity");
  return FieldElem(this, QPoly{zeta_power(k * (conductor_ / order))}, qp_one());
}

std::string Field::name() const {
  std::string base = kind() == FieldKind::GenericQ ? "generic" : "cyclotomic:" + std::to_string(t());
  const int natural = kind() == FieldKind::GenericQ ? 1 : t();
  if (conductor_ != natural) base += "[z=zeta_" + std::to_string(conductor_) + "]";
  return base;
}

// ---- FieldElem ------------------------------------------------------------

FieldElem::FieldElem(const Field* field, QPoly num, QPoly den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {}

void FieldElem::normalize() {
  qp_trim(num_);
  if (num_.empty()) {
    den_ = qp_one();
    return;
  }
  if (den_.empty()) throw DivisionByZero();
  if (qp_degree(den_) > 0) {
    QPoly g = qp_gcd(num_, den_, *field_);
    if (qp_degree(g) > 0) {
      num_ = qp_exact_div(num_, g, *field_);
      den_ = qp_exact_div(den_, g, *field_);
    }
  }
  if (!c_is_one(den_.back())) {
    Cyclo inv = c_inv(den_.back(), *field_);
    num_ = qp_scale(std::move(num_), inv, *field_);
    den_ = qp_scale(std::move(den_), inv, *field_);
  }
}

bool FieldElem::is_one() const { return qp_is_one(num_) && qp_is_one(den_); }

std::optional<mpq_class> FieldElem::as_rational() const {
  if (num_.empty()) return mpq_class(0);
  if (num_.size() == 1 && num_[0].size() == 1 && qp_is_one(den_)) return num_[0][0];
  return std::nullopt;
}

FieldElem FieldElem::operator-() const { return FieldElem(field_, qp_neg(num_), den_); }

namespace {
void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (&a.field() != &b.field())
    throw ModeError("mixed fields: " + a.field().name() + " and " + b.field().name());
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Field& f = *a.field_;
  if (a.den_ == b.den_) {
    FieldElem r(a.field_, qp_add(a.num_, b.num_), a.den_);
    if (qp_degree(r.den_) > 0) r.normalize();
    else qp_trim(r.num_);
    return r;
  }
  FieldElem r(a.field_, qp_add(qp_mul(a.num_, b.den_, f), qp_mul(b.num_, a.den_, f)),
              qp_mul(a.den_, b.den_, f));
  r.normalize();
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  const Field& f = *a.field_;
  if (a.is_zero() || b.is_zero()) return f.zero();
  FieldElem r(a.field_, qp_mul(a.num_, b.num_, f), qp_mul(a.den_, b.den_, f));
  if (qp_degree(r.den_) > 0) r.normalize();
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  FieldElem r(field_, den_, num_);
  r.normalize();
  return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = field_->one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string FieldElem::to_string() const {
  const Field& f = *field_;
  if (f.kind() == FieldKind::RootOfUnity) {
    return num_.empty() ? "0" : rat_poly_string(num_[0], symbol_for_constants(f));
  }
  if (f.conductor() > 1) {
    const std::string n = qpoly_string(num_, f);
    if (qp_is_one(den_)) return n;
    return paren_if_composite(n) + "/" + paren_if_composite(qpoly_string(den_, f));
  }
  // Over Q print with integer coefficients: scale num and den by the unique
  // positive rational making all coefficients integral with joint content 1.
  mpz_class lcm_den = 1, content = 0;
  for (const QPoly* p : {&num_, &den_})
    for (const Cyclo& c : *p)
      if (!c.empty()) lcm_den = lcm(lcm_den, mpz_class(c[0].get_den()));
  for (const QPoly* p : {&num_, &den_})
    for (const Cyclo& c : *p)
      if (!c.empty()) content = gcd(content, mpz_class(c[0].get_num() * (lcm_den / c[0].get_den())));
  const mpq_class scale = mpq_class(lcm_den) / mpq_class(content);
  const QPoly n = qp_scale(num_, Cyclo{scale}, f);
  const QPoly d = qp_scale(den_, Cyclo{scale}, f);
  const std::string ns = qpoly_string(n, f);
  if (qp_is_one(d)) return ns;
  return paren_if_composite(ns) + "/" + paren_if_composite(qpoly_string(d, f));
}

std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.to_string(); }

FieldElem q_power(const Field& field, long k) { return field.q_power(k); }

std::optional<long> is_q_power(const FieldElem& a) {
  if (a.is_zero()) throw DivisionByZero();
  const Field& f = a.field();
  if (f.kind() == FieldKind::RootOfUnity) {
    for (long j = 0; j < f.t(); ++j)
      if (f.q_power(j) == a) return j;
    return std::nullopt;
  }
  const QPoly& num = a.numerator();
  const QPoly& den = a.denominator();
  if (qp_is_one(den) && is_q_monomial(num) && c_is_one(num.back())) return qp_degree(num);
  if (qp_is_one(num) && is_q_monomial(den)) return -qp_degree(den);
  return std::nullopt;
}

FieldElem lift(const FieldElem& a, const Field& target) {
  const Field& src = a.field();
  if (&src == &target) return a;
  if (src.kind() != target.kind() || src.t() != target.t() ||
      target.conductor() % src.conductor() != 0)
    throw ModeError("cannot embed " + src.name() + " into " + target.name());
  const long step = target.conductor() / src.conductor();
  auto lift_const = [&](const Cyclo& c) {
    Cyclo r;
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e] == 0) continue;
      Cyclo term = target.zeta_power(static_cast<long>(e) * step);
      for (auto& x : term) x *= c[e];
      r = c_add(r, term);
    }
    return r;
  };
  QPoly num, den;
  for (const Cyclo& c : a.numerator()) num.push_back(lift_const(c));
  for (const Cyclo& c : a.denominator()) den.push_back(lift_const(c));
  FieldElem r(&target, std::move(num), std::move(den));
  r.normalize();
  return r;
}

}  // namespace qplane
