#pragma once

#include <lvcert/potts/coefficients.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lvcert {

class MagicFactorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MagicFactor {
    CaseKind kind = CaseKind::MinQ5;
    std::string expression;
    BiPoly m;
};

/// Factored form of the multiplier for each case, as transcribed.
std::string_view magic_factor_text(CaseKind kind);

/// Parses a factored expression and checks that it is nonzero and that every
/// top-level factor, and so the expanded product, has only non-negative
/// coefficients. Throws MagicFactorError otherwise.
MagicFactor load_magic_factor(CaseKind kind, std::string_view expression);
MagicFactor magic_factor(CaseKind kind);

}  // namespace lvcert
