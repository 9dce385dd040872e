#include "support/generators.hpp"

#include <doctest.h>

using namespace qplane;
using qtest::aut;
using qtest::el;
using qtest::sc;

namespace {

CharacterLattice gamma_of(const SigmaDerivation& d) { return gamma_lattice(decompose_toric(d), d.sigma()); }

}  // namespace

TEST_CASE("gamma lattice examples") {
  const Field& g = Field::generic();
  const Automorphism s = aut(g, "toric:2,3");
  CHECK(gamma_of(inner_from(QElem::y(g), s)) == CharacterLattice{{0, 1}});
  CHECK(gamma_of(SigmaDerivation::zero(s)).empty());
  const Automorphism sq = aut(g, "toric:2,q");
  for (int r = 0; r < 4; ++r)
    CHECK(gamma_of(SigmaDerivation::validate(sq, pow(QElem::y(g), r), QElem(g))) == CharacterLattice{{1, -r}});
  const Automorphism sp = aut(g, "toric:1/q,5");
  CHECK(gamma_of(SigmaDerivation::validate(sp, QElem(g), el(g, "x^2"))) == CharacterLattice{{-2, 1}});
  const Automorphism sl = aut(g, "toric:q^2,1/q^3");
  CHECK(gamma_of(lambda_dy(el(g, "4"), sl)) == CharacterLattice{{3, 2}});
  const ToricDecomposition empty{QElem(g), {}, {}, {}, QElem(g), QElem(g)};
  CHECK_THROWS_AS(gamma_lattice(empty, aut(Field::root_of_unity(2), "flip:1,1")), WrongSigmaKind);
}

TEST_CASE("generic inner derivation of x^a + y^b has isotropy mu_a x mu_b") {
  const Field& g = Field::generic();
  const Automorphism s = aut(g, "toric:2,3");
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const SigmaDerivation d = inner_from(pow(QElem::x(g), a) + pow(QElem::y(g), b), s);
      const IsotropyDescriptor iso = isotropy_toric_sigma(d);
      CHECK(iso.lattice == CharacterLattice{{a, 0}, {0, b}});
      CHECK(iso.structure.d1 == std::gcd(a, b));
      CHECK(iso.structure.d2 == std::lcm(a, b));
      CHECK(iso.structure.order == a * b);
      CHECK(iso.flip_part == FlipPart::NotApplicable);
    }
}

TEST_CASE("member examples") {
  const Field& g = Field::generic();
  const Automorphism s = aut(g, "toric:2,3");
  const SigmaDerivation d = inner_from(QElem::y(g), s);
  CHECK(member(aut(g, "toric:5,1"), d));
  CHECK_FALSE(member(aut(g, "toric:1,2"), d));
  CHECK(member(Automorphism::identity(g), d));

  const Field& m1 = Field::root_of_unity(2);
  const Automorphism sf = aut(m1, "flip:1,1");
  const SigmaDerivation r = flip_slice({m1.one(), m1.zero(), m1.zero()}, sf);
  CHECK_FALSE(member(aut(m1, "toric:-1,-1"), r));
  CHECK(member(aut(m1, "toric:1,1"), r));
  CHECK_FALSE(member(aut(m1, "toric:1,-1"), r));
}

TEST_CASE("ordinary derivations at q = -1: lambda1 = lambda2 = x^2 y^2") {
  const Field& m1 = Field::root_of_unity(2);
  const Automorphism id = Automorphism::identity(m1);
  const QElem lam = el(m1, "x^2*y^2");
  const SigmaDerivation d = lambda_dx(lam, id) + lambda_dy(lam, id);
  const IsotropyDescriptor iso = isotropy_toric_sigma(d);
  REQUIRE(iso.flip_conditions.has_value());
  CHECK(iso.flip_part == FlipPart::Conditions);
  CHECK(iso.flip_conditions->describe() == std::vector<std::string>{"u^2*v^2=1"});
  CHECK(iso.lattice == CharacterLattice{{2, 2}});
}

TEST_CASE("gamma = -1 with P_x and P_y gives u = v") {
  const Field& m1 = Field::root_of_unity(2);
  const Automorphism s = aut(m1, "toric:-1,-1");
  const SigmaDerivation d = SigmaDerivation::validate(s, QElem::y(m1), QElem::x(m1));
  const IsotropyDescriptor iso = isotropy_toric_sigma(d);
  REQUIRE(iso.flip_conditions.has_value());
  CHECK(iso.flip_conditions->describe() == std::vector<std::string>{"u*v^(-1)=1", "u^(-1)*v=1"});
  const Field& f4 = m1.with_roots_of_unity(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Automorphism eta =
          Automorphism::flip(f4.root_of_unity_power(4, a), f4.root_of_unity_power(4, b));
      CHECK(member(eta, d) == (a == b));
      CHECK(iso.predicts(eta, s) == (a == b));
    }
}

TEST_CASE("flip twist: diagonal conditions") {
  const Field& m1 = Field::root_of_unity(2);
  const Automorphism s = aut(m1, "flip:2,3");
  const IsotropyDescriptor inner = isotropy_flip_sigma(inner_from(el(m1, "y*x"), s));
  CHECK(inner.diagonal_exponents == std::vector<long>{2});
  CHECK(inner.diagonal_order == 2);
  CHECK(inner.structure.order == 2);

  const Automorphism s2 = aut(m1, "flip:2,1/2");
  const SigmaDerivation r = flip_slice({m1.one(), m1.zero(), m1.zero()}, s2);
  const IsotropyDescriptor res = isotropy_flip_sigma(r);
  CHECK(res.diagonal_exponents == std::vector<long>{1});
  CHECK(res.structure.order == 1);

  const IsotropyDescriptor zero = isotropy_flip_sigma(SigmaDerivation::zero(s));
  CHECK(zero.diagonal_exponents.empty());
  CHECK(zero.diagonal_order == 0);
  CHECK_FALSE(zero.structure.is_finite);
  CHECK(zero.flip_part == FlipPart::Conditions);
  CHECK(zero.exact_flip_conditions->equations().empty());
  CHECK(zero.flip_conditions->equations().empty());
}

TEST_CASE("flip twist: closed-form flip conditions are empty for canonical residuals") {
  const Field& m1 = Field::root_of_unity(2);
  const Automorphism s = aut(m1, "flip:1,-1");
  const SigmaDerivation d = SigmaDerivation::validate(s, QElem::x(m1), QElem::x(m1));
  const IsotropyDescriptor iso = isotropy_flip_sigma(d);
  CHECK(iso.flip_conditions->contradictory());
  CHECK(iso.exact_flip_conditions->contradictory());
  CHECK(iso.flip_part == FlipPart::Empty);
  const Field& f8 = m1.with_roots_of_unity(8);
  for (int a = 0; a < 8; ++a) {
    const FieldElem mu = f8.root_of_unity_power(8, a);
    CHECK_FALSE(member(Automorphism::flip(mu, -mu), d));
  }
}

TEST_CASE("flip twist: exact conditions for a degree zero residual") {
  // alpha beta = 1, k = 0: delta(y) = b0, delta(x) = -b0/beta
  const Field& m1 = Field::root_of_unity(2);
  const Automorphism s = aut(m1, "flip:2,1/2");
  const SigmaDerivation d = flip_slice({m1.one()}, s);
  const IsotropyDescriptor iso = isotropy_flip_sigma(d);
  CHECK(iso.flip_part == FlipPart::Conditions);
  const Field& f8 = m1.with_roots_of_unity(8);
  const FieldElem kappa = lift(s.mu2() / s.mu1(), f8);
  int hits = 0;
  for (const FieldElem& mu : {f8.integer(-2), f8.integer(2), f8.one(), f8.integer(-1)}) {
    const Automorphism eta = Automorphism::flip(mu, kappa * mu);
    const bool m = member(eta, d);
    hits += m;
    CHECK(iso.predicts(eta, s, true) == m);
  }
  CHECK(hits == 1);
}
