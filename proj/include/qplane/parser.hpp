#pragma once

#include <qplane/automorphism.hpp>
#include <qplane/error.hpp>

#include <string_view>

namespace qplane {

/// "generic" or "cyclotomic:<t>"; adjoin > 1 also adjoins the primitive
/// adjoin-th roots of unity, available in expressions as z.
const Field& parse_field(std::string_view name, int adjoin = 1);

/// expr := term (('+'|'-') term)*
/// term := unary (('*'|'/') unary)*      division only by nonzero scalars
/// unary := '-' unary | atom ('^' nat)*
/// atom := integer | 'q' | 'z' | 'x' | 'y' | '(' expr ')'
QElem parse_expr(std::string_view src, const Field& field);

/// A parsed expression that must be a constant.
FieldElem parse_scalar(std::string_view src, const Field& field);

/// "toric:<a>,<b>" or "flip:<a>,<b>"
Automorphism parse_automorphism(std::string_view src, const Field& field);

}  // namespace qplane
