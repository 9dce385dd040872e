#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qplane {

/// Finite set of exponent vectors (u, v); each imposes mu1^u mu2^v = 1.
class CharacterLattice {
 public:
  CharacterLattice() = default;
  CharacterLattice(std::initializer_list<std::pair<long, long>> vs) {
    for (auto [u, v] : vs) insert(u, v);
  }

  /// (0, 0) is dropped.
  void insert(long u, long v) {
    if (u != 0 || v != 0) vectors_.insert({u, v});
  }
  const std::set<std::pair<long, long>>& vectors() const { return vectors_; }
  bool empty() const { return vectors_.empty(); }

  /// Whether mu1 = z^a, mu2 = z^b (z a primitive N-th root) satisfies every
  /// character equation.
  bool kernel_contains(long a, long b, long n) const;

  friend bool operator==(const CharacterLattice&, const CharacterLattice&) = default;

 private:
  std::set<std::pair<long, long>> vectors_;
};

/// Kernel of all characters, isomorphic to mu_d1 x mu_d2 (mu_0 = K*).
struct TorusSubgroupStructure {
  long d1 = 0;
  long d2 = 0;
  bool is_finite = false;
  std::optional<long> order;

  friend bool operator==(const TorusSubgroupStructure&, const TorusSubgroupStructure&) = default;
};

/// Smith normal form of the stacked rows; returns the diagonal entries (all
/// nonnegative, each dividing the next), padded with zeros to the column count.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> rows, std::size_t cols);

TorusSubgroupStructure snf_invariant_factors(const CharacterLattice& lat);

/// A basis of { k in Z^n : sum k_i rows_i = 0 }.
std::vector<std::vector<mpz_class>> integer_left_kernel(const std::vector<std::vector<mpz_class>>& rows,
                                                        std::size_t cols);

std::string to_string(const CharacterLattice& lat);

}  // namespace qplane
