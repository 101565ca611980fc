#pragma once

// Text front end for elements and scalars.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        division by scalars only
//   unary  := '-' unary | power
//   power  := atom ('^' int)*
//   atom   := integer | q<i> | l<ij> | l<i>_<j> | c<t> | x<i> | y<i> | z<i> | '(' expr ')'
//
// Juxtaposition is not multiplication. Errors carry the byte offset.

#include <string_view>

#include "qweyl/presentation.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

NormalElement parse_element(std::string_view src, const PresentationId& p);

/// Scalar-only variant (generators are rejected).
Scalar parse_scalar(std::string_view src);

}  // namespace qweyl
