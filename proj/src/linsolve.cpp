#include <qplane/linsolve.hpp>

namespace qplane {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<FieldElem>>& rows, std::vector<FieldElem>* b,
                              std::size_t unknowns) {
  const std::size_t n_rows = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && rows[p][c].is_zero()) ++p;
    if (p == n_rows) continue;
    std::swap(rows[p], rows[r]);
    if (b) std::swap((*b)[p], (*b)[r]);
    const FieldElem inv = rows[r][c].inverse();
    for (std::size_t k = c; k < unknowns; ++k) rows[r][k] = rows[r][k] * inv;
    if (b) (*b)[r] = (*b)[r] * inv;
    for (std::size_t o = 0; o < n_rows; ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const FieldElem factor = rows[o][c];
      for (std::size_t k = c; k < unknowns; ++k) rows[o][k] -= factor * rows[r][k];
      if (b) (*b)[o] -= factor * (*b)[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  return pivot_col;
}

}  // namespace

std::vector<std::vector<FieldElem>> null_space(FieldMatrix a, std::size_t unknowns, const Field& field) {
  const std::vector<std::size_t> pivots = rref(a.rows, nullptr, unknowns);
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(unknowns, field.zero());
    v[f] = field.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElem>> solve_linear(FieldMatrix a, std::vector<FieldElem> b,
                                                   std::size_t unknowns, const Field& field) {
  const std::size_t n_rows = a.rows.size();
  const std::vector<std::size_t> pivot_col = rref(a.rows, &b, unknowns);
  const std::size_t r = pivot_col.size();
  for (std::size_t o = r; o < n_rows; ++o)
    if (!b[o].is_zero()) return std::nullopt;
  std::vector<FieldElem> x(unknowns, field.zero());
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k];
  return x;
}

}  // namespace qplane
