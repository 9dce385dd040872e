#pragma once

#include <qplane/lattice.hpp>

#include <numeric>

namespace qtest {

/// Invariant factors of Z^2 / L from determinantal divisors: d1 = gcd of all
/// entries, d1 d2 = gcd of all 2x2 minors.
inline std::pair<long, long> determinantal_factors(const qplane::CharacterLattice& lat) {
  long g1 = 0, g2 = 0;
  std::vector<std::pair<long, long>> v(lat.vectors().begin(), lat.vectors().end());
  for (auto [a, b] : v) g1 = std::gcd(g1, std::gcd(a, b));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      g2 = std::gcd(g2, v[i].first * v[j].second - v[i].second * v[j].first);
  if (g1 == 0) return {0, 0};
  return {g1, g2 / g1};
}

/// Number of (a, b) in Z_n^2 killed by every character.
inline long kernel_count(const qplane::CharacterLattice& lat, long n) {
  long count = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (lat.kernel_contains(a, b, n)) ++count;
  return count;
}

}  // namespace qtest
