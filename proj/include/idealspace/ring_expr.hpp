#ifndef IDEALSPACE_RING_EXPR_HPP
#define IDEALSPACE_RING_EXPR_HPP

#include <string_view>

#include "idealspace/ring.hpp"

namespace idealspace {

/// Builds a ring from an expression such as "Z2xZ2xZ2", "Z12/(4)",
/// "Z12@(2)" or "Z6xZ6/((2,2))".
///
///   expr   := factor ( 'x' factor | '/(' elems ')' | '@(' elems ')' )*
///   factor := 'Z' int | '(' expr ')'
///   elem   := ['-'] int | '(' elem (',' elem)* ')'
///
/// Operators apply left to right; '/' and '@' act on the product of every
/// factor to their left at the same nesting level. An integer literal k in a
/// non-cyclic ring means k·1; tuples address product components. The
/// returned ring's label is the normalized expression.
///
/// Throws ParseError (with the offending position), InvalidSize for Z0/Z1,
/// CapExceeded, ImproperIdeal and ZeroInMultiplicativeSet.
RingPtr parse_ring_expression(std::string_view text, const Limits& limits = {});

}  // namespace idealspace

#endif  // IDEALSPACE_RING_EXPR_HPP
