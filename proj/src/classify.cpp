#include <qplane/center.hpp>
#include <qplane/classify.hpp>

namespace qplane {

namespace {

void trim(std::vector<FieldElem>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

void require_toric(const Automorphism& sigma) {
  if (!sigma.is_toric()) throw WrongSigmaKind("operation requires a toric twist");
}

void require_flip(const Automorphism& sigma) {
  if (!sigma.field().q_is_minus_one()) throw ModeError("flip decomposition requires q = -1");
  if (!sigma.is_flip()) throw WrongSigmaKind("operation requires a flip twist");
}

Monomial shift(Monomial m, int di, int dj) { return {m.i + di, m.j + dj}; }

}  // namespace

std::optional<std::pair<int, int>> minimal_mn(const Automorphism& sigma) {
  auto gen = twisted_center_generator(sigma);
  if (!gen) return std::nullopt;
  return std::pair<int, int>{gen->i, gen->j};
}

SigmaDerivation px_family(const std::vector<FieldElem>& a, const Automorphism& sigma) {
  const Field& f = sigma.field();
  QElem dx(f);
  for (std::size_t r = 0; r < a.size(); ++r) dx.add_term({0, static_cast<int>(r)}, a[r]);
  return SigmaDerivation::validate(sigma, dx, QElem(f));
}

SigmaDerivation py_family(const std::vector<FieldElem>& b, const Automorphism& sigma) {
  const Field& f = sigma.field();
  QElem dy(f);
  for (std::size_t s = 0; s < b.size(); ++s) dy.add_term({static_cast<int>(s), 0}, b[s]);
  return SigmaDerivation::validate(sigma, QElem(f), dy);
}

SigmaDerivation lambda_dx(const QElem& lambda, const Automorphism& sigma) {
  const Field& f = sigma.field();
  auto mn = minimal_mn(sigma);
  if (!mn) throw WrongSigmaKind("sigma admits no D_x family");
  if (!center_membership(lambda)) throw Error(ErrorCode::Incompatible, "lambda is not central");
  const QElem h = QElem::monomial(f.one(), {mn->first, mn->second});
  return SigmaDerivation::validate(sigma, lambda * h * QElem::x(f), QElem(f));
}

SigmaDerivation lambda_dy(const QElem& lambda, const Automorphism& sigma) {
  const Field& f = sigma.field();
  auto mn = minimal_mn(sigma);
  if (!mn) throw WrongSigmaKind("sigma admits no D_y family");
  if (!center_membership(lambda)) throw Error(ErrorCode::Incompatible, "lambda is not central");
  const QElem h = QElem::monomial(f.one(), {mn->first, mn->second});
  return SigmaDerivation::validate(sigma, QElem(f), lambda * h * QElem::y(f));
}

ToricDecomposition decompose_toric(const SigmaDerivation& d) {
  require_toric(d.sigma());
  const Field& f = d.field();
  const FieldElem& alpha = d.sigma().mu1();
  const FieldElem& beta = d.sigma().mu2();
  const TwistedCenterDesc zc = twisted_center(d.sigma());

  ToricDecomposition dec{QElem(f), {}, {}, minimal_mn(d.sigma()), QElem(f), QElem(f)};

  // delta(x) = a(y) + sum c_ij y^j x^i x,  delta(y) = b(x) + sum d_ij (y^j x^i) y
  std::map<Monomial, std::pair<FieldElem, FieldElem>, MonomialOrder> cd;
  auto slot = [&](Monomial m) -> std::pair<FieldElem, FieldElem>& {
    auto it = cd.find(m);
    if (it == cd.end()) it = cd.emplace(m, std::make_pair(f.zero(), f.zero())).first;
    return it->second;
  };
  for (const auto& [m, c] : d.dx().terms()) {
    if (m.i == 0) {
      if (dec.a_poly.size() <= static_cast<std::size_t>(m.j)) dec.a_poly.resize(m.j + 1, f.zero());
      dec.a_poly[m.j] = c;
    } else {
      slot(shift(m, -1, 0)).first = c;
    }
  }
  for (const auto& [m, c] : d.dy().terms()) {
    if (m.j == 0) {
      if (dec.b_poly.size() <= static_cast<std::size_t>(m.i)) dec.b_poly.resize(m.i + 1, f.zero());
      dec.b_poly[m.i] = c;
    } else {
      slot(shift(m, 0, -1)).second = c / f.q_power(m.i);
    }
  }
  trim(dec.a_poly);
  trim(dec.b_poly);

  for (const auto& [m, pair] : cd) {
    const auto& [c, e] = pair;
    if (zc.contains_monomial(m)) {
      const Monomial central{m.i - dec.mn->first, m.j - dec.mn->second};
      if (!c.is_zero()) dec.lambda1.add_term(central, c);
      if (!e.is_zero()) dec.lambda2.add_term(central, e);
      continue;
    }
    const FieldElem ax = alpha - f.q_power(m.j);
    const FieldElem by = beta - f.q_power(-m.i);
    if (!(c * by == e * ax)) throw Error(ErrorCode::Internal, "cross-consistency failure at a validated input");
    dec.w.add_term(m, ax.is_zero() ? e / by : c / ax);
  }
  return dec;
}

QElem flip_slice_witness(const std::vector<FieldElem>& b, const FieldElem& beta) {
  const Field& f = beta.field();
  const int k = static_cast<int>(b.size()) - 1;
  QElem w(f);
  for (int l = 1; l <= k; ++l) {
    FieldElem acc = f.zero();
    for (int r = l; r <= k; ++r) acc = acc + b[r] * beta.pow(r - l);
    w.add_term({k - l, l - 1}, -acc);
  }
  return w;
}

SigmaDerivation flip_slice(const std::vector<FieldElem>& b, const Automorphism& sigma) {
  require_flip(sigma);
  const Field& f = sigma.field();
  const int k = static_cast<int>(b.size()) - 1;
  const FieldElem& alpha = sigma.mu1();
  const FieldElem inv_beta = sigma.mu2().inverse();
  // a_0 beta + b_0 = 0
  // a_l beta + (-1)^l b_l = (-1)^(k-l) alpha b_(l-1) - a_(l-1)
  // a_k + alpha b_k = 0 is left to validation
  std::vector<FieldElem> a;
  a.push_back(-b[0] * inv_beta);
  for (int l = 1; l <= k; ++l) {
    const FieldElem bl = l % 2 == 0 ? b[l] : -b[l];
    const FieldElem prev = (k - l) % 2 == 0 ? alpha * b[l - 1] : -(alpha * b[l - 1]);
    a.push_back((prev - a[l - 1] - bl) * inv_beta);
  }
  QElem dx(f), dy(f);
  for (int l = 0; l <= k; ++l) {
    dy.add_term({k - l, l}, b[l]);
    dx.add_term({k - l, l}, a[l]);
  }
  return SigmaDerivation::validate(sigma, dx, dy);
}

FlipDecomposition decompose_flip(const SigmaDerivation& d) {
  require_flip(d.sigma());
  const Field& f = d.field();
  const FieldElem& alpha = d.sigma().mu1();
  const FieldElem& beta = d.sigma().mu2();
  FlipDecomposition dec{QElem(f), {}};
  const int top = std::max(d.dx().degree(), d.dy().degree());
  for (int k = 0; k <= top; ++k) {
    const SigmaDerivation slice = d.homogeneous_part(k);
    if (slice.is_zero()) continue;
    std::vector<FieldElem> b;
    for (int l = 0; l <= k; ++l) b.push_back(slice.dy().coeff({k - l, l}));
    if (!(flip_slice(b, d.sigma()) == slice))
      throw Error(ErrorCode::Internal, "flip slice not determined by its y-image");

    const bool special = alpha * beta == f.integer(k % 2 == 0 ? 1 : -1);
    if (special) {
      FieldElem s = b[0];
      for (int r = 1; r <= k; ++r) s = s + b[r] * beta.pow(r);
      if (!s.is_zero()) {
        dec.slices.push_back({k, s});
        b[0] = b[0] - s;
      }
    }
    const QElem wk = flip_slice_witness(b, beta);
    if (!(inner_from(wk, d.sigma()) == flip_slice(b, d.sigma())))
      throw Error(ErrorCode::Internal, "flip slice witness does not induce the inner part");
    dec.w += wk;
  }
  return dec;
}

SigmaDerivation recombine(const ToricDecomposition& dec, const Automorphism& sigma) {
  require_toric(sigma);
  SigmaDerivation d = inner_from(dec.w, sigma);
  if (!dec.a_poly.empty()) d = d + px_family(dec.a_poly, sigma);
  if (!dec.b_poly.empty()) d = d + py_family(dec.b_poly, sigma);
  if (!dec.lambda1.is_zero()) d = d + lambda_dx(dec.lambda1, sigma);
  if (!dec.lambda2.is_zero()) d = d + lambda_dy(dec.lambda2, sigma);
  return d;
}

SigmaDerivation recombine(const FlipDecomposition& dec, const Automorphism& sigma) {
  require_flip(sigma);
  SigmaDerivation d = inner_from(dec.w, sigma);
  for (const auto& s : dec.slices) {
    std::vector<FieldElem> b(s.k + 1, sigma.field().zero());
    b[0] = s.b0;
    d = d + flip_slice(b, sigma);
  }
  return d;
}

}  // namespace qplane
