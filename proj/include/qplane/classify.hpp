#pragma once

#include <qplane/skew_derivation.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace qplane {

/// delta = [w,_]_sigma + P_x + P_y + lambda1 D_x + lambda2 D_y for toric sigma,
/// with P_x(x) = a(y), P_y(y) = b(x), D_x(x) = (y^n x^m) x, D_y(y) = (y^n x^m) y.
struct ToricDecomposition {
  QElem w;
  std::vector<FieldElem> a_poly;  // a_r, r = 0..; empty unless beta = q
  std::vector<FieldElem> b_poly;  // b_s, s = 0..; empty unless alpha = q^-1
  std::optional<std::pair<int, int>> mn;
  QElem lambda1;  // central
  QElem lambda2;  // central
};

/// One non-inner degree-k component, canonical form delta_k(y) = b0 x^k.
struct FlipSlice {
  int k;
  FieldElem b0;
};

struct FlipDecomposition {
  QElem w;
  std::vector<FlipSlice> slices;
};

ToricDecomposition decompose_toric(const SigmaDerivation& d);
FlipDecomposition decompose_flip(const SigmaDerivation& d);

SigmaDerivation recombine(const ToricDecomposition& dec, const Automorphism& sigma);
SigmaDerivation recombine(const FlipDecomposition& dec, const Automorphism& sigma);

/// P_x with P_x(x) = a(y), P_y = 0 on x.
SigmaDerivation px_family(const std::vector<FieldElem>& a, const Automorphism& sigma);
/// P_y with P_y(y) = b(x).
SigmaDerivation py_family(const std::vector<FieldElem>& b, const Automorphism& sigma);
/// lambda D_x and lambda D_y; lambda must be central and sigma must admit (m, n).
SigmaDerivation lambda_dx(const QElem& lambda, const Automorphism& sigma);
SigmaDerivation lambda_dy(const QElem& lambda, const Automorphism& sigma);

/// Degree-k flip slice with delta_k(y) = sum b_l y^l x^(k-l); delta_k(x) is
/// determined by compatibility. When alpha beta = (-1)^k it is
/// -beta^-1 sum (-1)^l b_l y^l x^(k-l).
SigmaDerivation flip_slice(const std::vector<FieldElem>& b, const Automorphism& sigma);

/// w_k = -sum_{l=1..k} (sum_{r=l..k} b_r beta^(r-l)) y^(l-1) x^(k-l)
QElem flip_slice_witness(const std::vector<FieldElem>& b, const FieldElem& beta);

/// The minimal (m, n) with alpha = q^n, beta = q^-m for toric sigma.
std::optional<std::pair<int, int>> minimal_mn(const Automorphism& sigma);

}  // namespace qplane
