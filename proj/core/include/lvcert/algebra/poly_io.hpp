#pragma once

#include <lvcert/algebra/ratfn.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lvcert {

// Text form: one line per monomial, "t^<a> r^<b> <coefficient>", sorted by
// (a, b). The zero polynomial has no lines. A rational function is its
// numerator block, a line "---", then its denominator block.

void write_poly(std::ostream& out, const BiPoly& p);
void write_ratfn(std::ostream& out, const RatFn& f);
std::string poly_to_text(const BiPoly& p);
std::string ratfn_to_text(const RatFn& f);

/// Parses a single monomial line. Throws AlgebraError on malformed input.
BiPoly::Term parse_monomial_line(std::string_view line);
BiPoly parse_poly(std::string_view text);
RatFn parse_ratfn(std::string_view text);

/// Human-readable infix form such as "2*t^2*r + 3", used in reports.
std::string to_infix(const BiPoly& p);

/// Parses an infix expression over integers, t and r with + - * ^ and
/// parentheses, e.g. "6*t^2*(t+1)^31*(2*t^2+6*t+5)".
BiPoly parse_expression(std::string_view text);

}  // namespace lvcert
