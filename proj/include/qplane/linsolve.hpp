#pragma once

#include <qplane/field.hpp>

#include <optional>
#include <vector>

namespace qplane {

/// Dense matrix over a Field, row-major.
struct FieldMatrix {
  std::vector<std::vector<FieldElem>> rows;
};

/// Some solution of A x = b by exact Gauss-Jordan elimination (free variables
/// set to zero), or nullopt when the system is inconsistent. `unknowns` is the
/// column count, needed when A has no rows.
std::optional<std::vector<FieldElem>> solve_linear(FieldMatrix a, std::vector<FieldElem> b,
                                                   std::size_t unknowns, const Field& field);

/// A basis of { x : A x = 0 }, one vector per free column.
std::vector<std::vector<FieldElem>> null_space(FieldMatrix a, std::size_t unknowns, const Field& field);

}  // namespace qplane
