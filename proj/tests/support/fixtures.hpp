#pragma once

#include "generators.hpp"

namespace qtest {

struct Fixture {
  std::string name;
  SigmaDerivation d;
};

/// Derivations covering every family in every mode, plus seeded random ones.
inline std::vector<Fixture> isotropy_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](const std::string& name, const SigmaDerivation& d) { out.push_back({name, d}); };

  const Field& g = Field::generic();
  {
    const Automorphism s = aut(g, "toric:2,3");
    add("generic inner y", inner_from(el(g, "y"), s));
    add("generic inner x^3+y^2", inner_from(el(g, "x^3+y^2"), s));
    add("generic inner y*x^2-q*y^3", inner_from(el(g, "y*x^2-q*y^3"), s));
    add("generic zero", SigmaDerivation::zero(s));
    const Automorphism sx = aut(g, "toric:2,q");
    add("generic P_x y^2", SigmaDerivation::validate(sx, el(g, "y^2"), QElem(g)));
    add("generic P_x 1+y^3 plus inner", SigmaDerivation::validate(sx, el(g, "1+y^3"), QElem(g)) + inner_from(el(g, "x^2"), sx));
    const Automorphism sy = aut(g, "toric:1/q,5");
    add("generic P_y x^4", SigmaDerivation::validate(sy, QElem(g), el(g, "x^4")));
    const Automorphism sb = aut(g, "toric:1/q,q");
    add("generic P_x and P_y", SigmaDerivation::validate(sb, el(g, "y^2"), el(g, "x^3")));
    const Automorphism sl = aut(g, "toric:q^2,1/q^3");
    add("generic lambda D_x", lambda_dx(el(g, "3"), sl));
    add("generic lambda D_y plus inner", lambda_dy(el(g, "1"), sl) + inner_from(el(g, "y"), sl));
    const Automorphism id = Automorphism::identity(g);
    add("generic Euler x", lambda_dx(el(g, "1"), id));
    add("generic Euler x and y", lambda_dx(el(g, "1"), id) + lambda_dy(el(g, "2"), id) + inner_from(el(g, "y*x^2"), id));
  }
  const Field& c3 = Field::root_of_unity(3);
  {
    add("zeta3 realization x^6+y^3", inner_from(el(c3, "x^6+y^3"), aut(c3, "toric:2,5")));
    const Automorphism s = aut(c3, "toric:q^2,q");
    add("zeta3 lambda D_x", lambda_dx(el(c3, "1+x^3"), s));
    add("zeta3 lambda D_y", lambda_dy(el(c3, "y^3"), s));
    add("zeta3 P_x P_y inner", SigmaDerivation::validate(s, el(c3, "y"), el(c3, "x^2")) + inner_from(el(c3, "y*x"), s));
    const Automorphism id = Automorphism::identity(c3);
    add("zeta3 ordinary", lambda_dx(el(c3, "x^3"), id) + inner_from(el(c3, "y+x"), id));
    add("zeta3 inner generic sigma", inner_from(el(c3, "y^2*x+x^4"), aut(c3, "toric:2,q")));
  }
  const Field& m1 = Field::root_of_unity(2);
  {
    const Automorphism id = Automorphism::identity(m1);
    add("q=-1 ordinary x^2y^2", lambda_dx(el(m1, "x^2*y^2"), id) + lambda_dy(el(m1, "x^2*y^2"), id));
    add("q=-1 ordinary x^2 / y^2", lambda_dx(el(m1, "x^2"), id) + lambda_dy(el(m1, "y^2"), id));
    add("q=-1 ordinary inner yx", inner_from(el(m1, "y*x"), id));
    add("q=-1 ordinary inner x+y", inner_from(el(m1, "x+y"), id));
    add("q=-1 ordinary mixed", inner_from(el(m1, "x"), id) + lambda_dx(el(m1, "1"), id));
    const Automorphism mm = aut(m1, "toric:-1,-1");
    add("q=-1 gamma -1 P_x P_y", SigmaDerivation::validate(mm, el(m1, "y"), el(m1, "x")));
    add("q=-1 gamma -1 P_x only", SigmaDerivation::validate(mm, el(m1, "y^3"), QElem(m1)));
    add("q=-1 gamma -1 lambda", lambda_dx(el(m1, "1"), mm) + lambda_dy(el(m1, "x^2"), mm));
    add("q=-1 gamma -1 inner", inner_from(el(m1, "x+2*y"), mm));
    add("q=-1 toric 3,3 inner", inner_from(el(m1, "x^2+y^2"), aut(m1, "toric:3,3")));
    add("q=-1 toric 2,3 inner", inner_from(el(m1, "y*x+x"), aut(m1, "toric:2,3")));
    add("q=-1 toric 1,-1 P_x", SigmaDerivation::validate(aut(m1, "toric:1,-1"), el(m1, "y^2"), QElem(m1)));
    const Automorphism f11 = aut(m1, "flip:1,1");
    add("flip 1,1 inner yx", inner_from(el(m1, "y*x"), f11));
    add("flip 1,1 residual k=2", flip_slice({m1.one(), m1.zero(), m1.zero()}, f11));
    add("flip 1,1 residual k=0", flip_slice({m1.integer(3)}, f11));
    add("flip 1,1 zero", SigmaDerivation::zero(f11));
    const Automorphism f1m = aut(m1, "flip:1,-1");
    add("flip 1,-1 residual k=1", flip_slice({m1.one(), m1.zero()}, f1m));
    add("flip 1,-1 residual k=3 plus inner", flip_slice({m1.integer(2), m1.zero(), m1.zero(), m1.zero()}, f1m) +
                                                 inner_from(el(m1, "x^2-y"), f1m));
    add("flip 2,3 inner", inner_from(el(m1, "x^2+y*x+1"), aut(m1, "flip:2,3")));
    add("flip 2,1/2 residual k=2", flip_slice({m1.one(), m1.zero(), m1.zero()}, aut(m1, "flip:2,1/2")));
    add("flip 2,1/2 inner x", inner_from(el(m1, "x"), aut(m1, "flip:2,1/2")));
    add("flip -2,1/2 residual k=1", flip_slice({m1.integer(5), m1.zero()}, aut(m1, "flip:-2,1/2")));
  }

  Rng rng(2024);
  for (const Field* f : {&g, &c3, &m1})
    for (const auto& sigma : sigma_pool(*f))
      for (int n = 0; n < 2; ++n)
        add("random " + f->name() + " " + sigma.to_string() + " #" + std::to_string(n),
            random_derivation(sigma, rng, 3, 0.35));
  return out;
}

}  // namespace qtest
