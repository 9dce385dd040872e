#include "support/generators.hpp"

#include <qplane/center.hpp>

#include <doctest.h>

using namespace qplane;
using qtest::el;

TEST_CASE("q_mul examples") {
  const Field& g = Field::generic();
  const QElem x = QElem::x(g), y = QElem::y(g);
  CHECK(q_mul(x, y) == g.q() * (y * x));
  CHECK((x * y).to_string() == "q*y*x");
  const QElem a = el(g, "3*y^2*x+q");
  CHECK(q_mul(QElem::constant(g.one()), a) == a);
  CHECK(q_mul(y * x, y * x) == g.q() * el(g, "y^2*x^2"));
  CHECK((x * x * y).to_string() == "q^2*y*x^2");
}

TEST_CASE("q_mul is associative and distributive") {
  qtest::Rng rng(5);
  for (const Field* f : {&Field::generic(), &Field::root_of_unity(3), &Field::root_of_unity(2)}) {
    for (int n = 0; n < 25; ++n) {
      const QElem a = qtest::random_elem(*f, rng, 2);
      const QElem b = qtest::random_elem(*f, rng, 2);
      const QElem c = qtest::random_elem(*f, rng, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("degree is additive on monomials") {
  const Field& f = Field::root_of_unity(5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const QElem m = QElem::monomial(f.one(), {i, j});
      const QElem p = m * QElem::monomial(f.one(), {j, i});
      CHECK(p.degree() == 2 * (i + j));
      CHECK(p.size() == 1);
    }
}

TEST_CASE("printing") {
  const Field& g = Field::generic();
  CHECK(QElem(g).to_string() == "0");
  CHECK(el(g, "x + (q-1)*x*y^2").to_string() == "(q^3-q^2)*y^2*x+x");
  CHECK(el(g, "-y - 1/q").to_string() == "-y-1/q");
  CHECK(el(g, "y/(q^2-q) - (q+1)*x").to_string() == "1/(q^2-q)*y+(-q-1)*x");
  CHECK(el(g, "1/(q^2-q)").to_string() == "1/(q^2-q)");
  CHECK(el(Field::root_of_unity(2), "x*y").to_string() == "-y*x");
}

TEST_CASE("zero coefficients are never stored") {
  const Field& g = Field::generic();
  QElem a = el(g, "x+y");
  a -= QElem::x(g);
  CHECK(a.size() == 1);
  CHECK((a - a).is_zero());
  CHECK((a - a).terms().empty());
}

TEST_CASE("center membership") {
  const Field& g = Field::generic();
  const Field& m1 = Field::root_of_unity(2);
  CHECK(center_membership(el(g, "5")));
  CHECK_FALSE(center_membership(el(g, "x")));
  CHECK(center_membership(el(m1, "x^2*y^2")));
  CHECK_FALSE(center_membership(el(m1, "x^2*y")));
  CHECK(center_membership(el(Field::root_of_unity(3), "x^3+y^6*x^3+7")));
}

TEST_CASE("center membership agrees with commuting with generators") {
  qtest::Rng rng(8);
  for (const Field* f : {&Field::generic(), &Field::root_of_unity(2), &Field::root_of_unity(3)}) {
    const QElem x = QElem::x(*f), y = QElem::y(*f);
    for (int n = 0; n < 40; ++n) {
      QElem a(*f);
      for (int k = 0; k < 3; ++k) {
        const int t = f->t() == 0 ? 1 : f->t();
        const int i = rng.coin() ? t * rng.uniform(0, 2) : rng.uniform(0, 4);
        const int j = rng.coin() ? t * rng.uniform(0, 2) : rng.uniform(0, 4);
        a.add_term({i, j}, qtest::random_scalar(*f, rng, true));
      }
      const bool commutes = a * x == x * a && a * y == y * a;
      CHECK(center_membership(a) == commutes);
    }
  }
}
