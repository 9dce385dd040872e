#include "support/generators.hpp"
#include "support/snf_oracle.hpp"

#include <doctest.h>

using namespace qplane;

TEST_CASE("snf examples") {
  const auto a = snf_invariant_factors({{2, 0}, {0, 3}});
  CHECK(a.d1 == 1);
  CHECK(a.d2 == 6);
  CHECK(a.is_finite);
  CHECK(a.order == 6);
  const auto b = snf_invariant_factors({{1, 1}});
  CHECK(b.d1 == 1);
  CHECK(b.d2 == 0);
  CHECK_FALSE(b.is_finite);
  CHECK_FALSE(b.order.has_value());
  const auto c = snf_invariant_factors({});
  CHECK(c.d1 == 0);
  CHECK(c.d2 == 0);
  CHECK_FALSE(c.is_finite);
}

TEST_CASE("lattice drops the zero vector and duplicates") {
  CharacterLattice lat{{0, 0}, {1, 2}, {1, 2}};
  CHECK(lat.vectors().size() == 1);
  CHECK(to_string(lat) == "{(1,2)}");
}

TEST_CASE("smith diagonal of a general matrix") {
  const auto d = smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
}

TEST_CASE("snf agrees with determinantal divisors and the finiteness scan") {
  qtest::Rng rng(31);
  for (int n = 0; n < 300; ++n) {
    CharacterLattice lat;
    const int size = rng.uniform(0, 4);
    for (int k = 0; k < size; ++k) lat.insert(rng.uniform(-9, 9), rng.uniform(-9, 9));
    const auto s = snf_invariant_factors(lat);
    const auto [d1, d2] = qtest::determinantal_factors(lat);
    CHECK(s.d1 == d1);
    CHECK(s.d2 == d2);
    bool independent_pair = false;
    for (auto [a, b] : lat.vectors())
      for (auto [c, d] : lat.vectors()) independent_pair = independent_pair || a * d - b * c != 0;
    CHECK(s.is_finite == independent_pair);
    if (s.d1 != 0 && s.d2 != 0) CHECK(s.d2 % s.d1 == 0);
  }
}

TEST_CASE("integer left kernel") {
  const std::vector<std::vector<mpz_class>> rows = {{2, 0}, {0, 3}, {4, 6}, {1, 1}};
  const auto k = integer_left_kernel(rows, 2);
  CHECK(k.size() == 2);
  for (const auto& v : k) {
    mpz_class s0 = 0, s1 = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s0 += v[i] * rows[i][0];
      s1 += v[i] * rows[i][1];
    }
    CHECK(s0 == 0);
    CHECK(s1 == 0);
  }
}

TEST_CASE("binomial systems") {
  const Field& m1 = Field::root_of_unity(2);
  BinomialSystem s(m1);
  s.add({2, 2, m1.one()});
  CHECK(s.solvable());
  s.add({1, 1, m1.integer(-1)});
  CHECK(s.solvable());
  s.add({3, 3, m1.one()});
  CHECK_FALSE(s.solvable());  // (uv)^3 = 1 and uv = -1

  BinomialSystem t(m1);
  t.require(m1.one(), 1, 0, m1.zero());
  CHECK(t.contradictory());
  CHECK_FALSE(t.solvable());

  const Field& g = Field::generic();
  BinomialSystem u(g);
  u.add({1, -1, g.q()});
  u.add({2, -2, g.q_power(2)});
  CHECK(u.solvable());
  u.add({0, 0, g.integer(2)});
  CHECK_FALSE(u.solvable());
  const Field& f8 = Field::root_of_unity(2, 8);
  BinomialSystem w(f8);
  w.add({1, 0, f8.root_of_unity_power(8, 1)});
  CHECK(w.satisfied_by(f8.root_of_unity_power(8, 1), f8.one()));
  CHECK_FALSE(w.satisfied_by(f8.root_of_unity_power(8, 3), f8.one()));
  CHECK(w.describe("mu", "v") == std::vector<std::string>{"mu=z"});
}

TEST_CASE("binomial solvability matches brute force over roots of unity") {
  const Field& f = Field::root_of_unity(2, 12);
  qtest::Rng rng(13);
  for (int n = 0; n < 80; ++n) {
    BinomialSystem s(f);
    const int k = rng.uniform(1, 3);
    for (int e = 0; e < k; ++e)
      s.add({rng.uniform(-3, 3), rng.uniform(-3, 3), f.root_of_unity_power(12, rng.uniform(0, 11))});
    // exponents bounded by 3 and values in mu_12: any solution can be taken in mu_144,
    // so only test the direction that brute force over mu_12 can certify
    bool found = false;
    for (int a = 0; a < 12 && !found; ++a)
      for (int b = 0; b < 12 && !found; ++b)
        found = s.satisfied_by(f.root_of_unity_power(12, a), f.root_of_unity_power(12, b));
    if (found) CHECK(s.solvable());
    if (!s.solvable()) CHECK_FALSE(found);
  }
}
