#pragma once

#include <qplane/binomial.hpp>
#include <qplane/classify.hpp>
#include <qplane/lattice.hpp>

#include <optional>
#include <vector>

namespace qplane {

/// Gamma(delta) for toric sigma.
CharacterLattice gamma_lattice(const ToricDecomposition& dec, const Automorphism& sigma);

enum class FlipPart { NotApplicable, Empty, Conditions };

/// Description of Aut_delta.
///
/// Toric sigma: the toric part is the kernel of `lattice` in the torus. Flip
/// sigma: the toric part is {Toric(mu, mu) : mu^e = 1 for e in diagonal_exponents},
/// which is also the kernel of `lattice` = {(1,-1)} + {(e,0)}.
///
/// The flip coset is described by binomial conditions on the flip
/// automorphism: in (u, v) for eta = Flip(u, v) when sigma is toric, in u = mu
/// for eta = Flip(mu, (beta/alpha) mu) when sigma is a flip.
/// `flip_conditions` are assembled family by family from the decomposition;
/// `exact_flip_conditions` compare generator images directly.
struct IsotropyDescriptor {
  CharacterLattice lattice;
  TorusSubgroupStructure structure;

  bool sigma_is_flip = false;
  std::vector<long> diagonal_exponents;
  long diagonal_order = 0;  // mu^g = 1; 0 means every mu

  FlipPart flip_part = FlipPart::NotApplicable;
  std::optional<BinomialSystem> flip_conditions;
  std::optional<BinomialSystem> exact_flip_conditions;

  /// Whether rho lies in Aut_delta according to this description. Scalars of
  /// rho may live in an extension of the derivation's field.
  bool predicts(const Automorphism& rho, const Automorphism& sigma, bool use_exact = false) const;
};

IsotropyDescriptor isotropy_toric_sigma(const SigmaDerivation& d);
IsotropyDescriptor isotropy_flip_sigma(const SigmaDerivation& d);
IsotropyDescriptor isotropy(const SigmaDerivation& d);

/// rho sigma = sigma rho and rho delta = delta rho, checked on generators.
bool member(const Automorphism& rho, const SigmaDerivation& d);

/// Conditions on eta = Flip(u, v) (toric sigma) or eta = Flip(mu, kappa mu)
/// (flip sigma) from eta(delta(x)) = delta(eta(x)), eta(delta(y)) = delta(eta(y)).
BinomialSystem exact_flip_system(const SigmaDerivation& d);

}  // namespace qplane
