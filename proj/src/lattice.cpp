#include <qplane/lattice.hpp>

#include <numeric>
#include <sstream>

namespace qplane {

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// Reduces the rows below/columns right of (p, p) so that m[p][p] divides
// everything in its row and column, and those entries become zero.
void clear_pivot(Matrix& m, std::size_t p, std::size_t cols) {
  const std::size_t rows = m.size();
  for (;;) {
    // bring the smallest nonzero entry of the submatrix to (p, p)
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = p; i < rows; ++i)
      for (std::size_t j = p; j < cols; ++j)
        if (m[i][j] != 0 && (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) bi = i, bj = j;
    if (bi == rows) return;
    std::swap(m[p], m[bi]);
    swap_cols(m, p, bj);

    bool clean = true;
    for (std::size_t i = p + 1; i < rows; ++i) {
      if (m[i][p] == 0) continue;
      const mpz_class q = floor_div(m[i][p], m[p][p]);
      for (std::size_t j = p; j < cols; ++j) m[i][j] -= q * m[p][j];
      if (m[i][p] != 0) clean = false;
    }
    for (std::size_t j = p + 1; j < cols; ++j) {
      if (m[p][j] == 0) continue;
      const mpz_class q = floor_div(m[p][j], m[p][p]);
      for (std::size_t i = p; i < rows; ++i) m[i][j] -= q * m[i][p];
      if (m[p][j] != 0) clean = false;
    }
    if (!clean) continue;

    // divisibility of the remaining block
    bool divides = true;
    for (std::size_t i = p + 1; i < rows && divides; ++i)
      for (std::size_t j = p + 1; j < cols; ++j)
        if (m[i][j] % m[p][p] != 0) {
          for (std::size_t jj = p; jj < cols; ++jj) m[p][jj] += m[i][jj];
          divides = false;
          break;
        }
    if (divides) return;
  }
}

}  // namespace

std::vector<mpz_class> smith_diagonal(Matrix m, std::size_t cols) {
  std::vector<mpz_class> diag;
  const std::size_t steps = std::min(m.size(), cols);
  for (std::size_t p = 0; p < steps; ++p) {
    clear_pivot(m, p, cols);
    diag.push_back(abs(m[p][p]));
  }
  diag.resize(cols, 0);
  return diag;
}

TorusSubgroupStructure snf_invariant_factors(const CharacterLattice& lat) {
  Matrix rows;
  for (auto [u, v] : lat.vectors()) rows.push_back({mpz_class(u), mpz_class(v)});
  const auto diag = smith_diagonal(rows, 2);
  TorusSubgroupStructure s;
  s.d1 = diag[0].get_si();
  s.d2 = diag[1].get_si();
  s.is_finite = s.d1 > 0 && s.d2 > 0;
  if (s.is_finite) s.order = s.d1 * s.d2;
  return s;
}

bool CharacterLattice::kernel_contains(long a, long b, long n) const {
  for (auto [u, v] : vectors_) {
    long e = (u % n * (a % n) + v % n * (b % n)) % n;
    if (e != 0) return false;
  }
  return true;
}

Matrix integer_left_kernel(const Matrix& rows, std::size_t cols) {
  // Row-reduce [rows | I] with unimodular operations; rows of the identity
  // block whose left part vanishes span the kernel.
  const std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = rows[i];
    m[i].resize(cols + n, 0);
    m[i][cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i)
        if (m[i][c] != 0 && (best == n || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == n) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (m[i][c] == 0) continue;
        const mpz_class q = floor_div(m[i][c], m[r][c]);
        for (std::size_t j = 0; j < cols + n; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  Matrix kernel;
  for (std::size_t i = r; i < n; ++i) kernel.emplace_back(m[i].begin() + cols, m[i].end());
  return kernel;
}

std::string to_string(const CharacterLattice& lat) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [u, v] : lat.vectors()) {
    os << (first ? "" : ",") << "(" << u << "," << v << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace qplane
