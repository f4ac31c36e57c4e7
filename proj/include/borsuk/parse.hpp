#pragma once

#include <string_view>

#include "borsuk/abelian.hpp"
#include "borsuk/space.hpp"

namespace borsuk {

/// Group literals: `0`, `Z`, `Z^r`, `Z/n` joined by `+`.
/// Throws ParseError (with a 1-based column) or DomainError (Z/1, Z/0).
abelian::FgAbelianGroup parse_group(std::string_view text);

/// Space literals: `*`, `S^n`, `CP^n`, `M(<group>, n)`, `K(<group>, n)`,
/// `x` for product, `v` for wedge (product binds tighter), parentheses.
/// The tree is returned as written, not canonicalized; a chain `a v b v c`
/// becomes one three-summand wedge.
/// Throws ParseError, or DomainError for M(A,1), CP^1 and friends.
spaces::SpaceExpr parse_space(std::string_view text);

}  // namespace borsuk
