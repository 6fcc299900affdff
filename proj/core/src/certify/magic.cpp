#include <lvcert/certify/magic.hpp>

#include <lvcert/algebra/poly_io.hpp>

#include <string>
#include <vector>

namespace lvcert {

namespace {

constexpr std::string_view min_q5_text =
    "6 t^2 (t+1)^31 (2t^2+6 t+5) (16 t^10+176 t^9+888 t^8+2676 t^7+"
    "5309t^6+7260 t^5+6996 t^4+4760 t^3+2224 t^2+660 t+100)";

constexpr std::string_view min_qge6_text =
    "2 (r+3) (r+4) (t+1)^35 (r^4 t^9+9 r^4 t^8+36 r^4 t^7+84 r^4 t^6+126 r^4 t^5+"
    "126 r^4 t^4+84 r^4 t^3+36 r^4 t^2+9 r^4 t+r^4+11 r^3 t^9+105 r^3 t^8+"
    "447 r^3 t^7+1117 r^3 t^6+1809 r^3 t^5+1971 r^3 t^4+1445 r^3 t^3+"
    "687 r^3 t^2+192 r^3 t+24 r^3+39 r^2 t^9+411 r^2 t^8+1926 r^2 t^7+"
    "5286 r^2 t^6+9393 r^2 t^5+11241 r^2 t^4+9090 r^2 t^3+4806 r^2 t^2+"
    "1512 r^2 t+216 r^2+51 r t^9+645 r t^8+3477 r t^7+10715 r t^6+"
    "21096 r t^5+27816 r t^4+24812 r t^3+14580 r t^2+5184 r t+"
    "864 r+18 t^9+342 t^8+2250 t^7+7954 t^6+17508 t^5+"
    "25428 t^4+24888 t^3+16200 t^2+6480 t+1296)";

constexpr std::string_view max_text = "2*(t + 1)^25";

/// Top-level factors of a product written by juxtaposition or '*'. A text
/// with a top-level '+' or '-' is a single factor.
std::vector<std::string> top_level_factors(std::string_view text)
{
    std::vector<std::string> pieces;
    std::string current;
    int depth = 0;
    auto flush = [&]() {
        if (!current.empty())
            pieces.push_back(std::move(current));
        current.clear();
    };
    for (char c : text) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (depth == 0 && (c == '+' || c == '-'))
            return {std::string(text)};
        if (depth == 0 && (c == ' ' || c == '*' || c == '\t')) {
            flush();
            continue;
        }
        current += c;
    }
    flush();
    std::vector<std::string> factors;
    for (auto& piece : pieces) {
        if (!factors.empty() && (piece.front() == '^' || factors.back().back() == '^'))
            factors.back() += piece;
        else
            factors.push_back(std::move(piece));
    }
    return factors;
}

}  // namespace

std::string_view magic_factor_text(CaseKind kind)
{
    switch (kind) {
    case CaseKind::MinQ5:
        return min_q5_text;
    case CaseKind::MinQGe6:
        return min_qge6_text;
    case CaseKind::MaxQGe5:
        return max_text;
    }
    throw MagicFactorError("unknown case");
}

MagicFactor load_magic_factor(CaseKind kind, std::string_view expression)
{
    MagicFactor f;
    f.kind = kind;
    f.expression = std::string(expression);
    try {
        f.m = parse_expression(expression);
    }
    catch (const AlgebraError& e) {
        throw MagicFactorError(std::string("magic factor does not parse: ") + e.what());
    }
    if (f.m.is_zero())
        throw MagicFactorError("magic factor is zero");
    for (const auto& factor : top_level_factors(expression)) {
        BiPoly expanded;
        try {
            expanded = parse_expression(factor);
        }
        catch (const AlgebraError& e) {
            throw MagicFactorError("magic factor " + factor + " does not parse: " + e.what());
        }
        auto report = coeff_sign_report(expanded);
        if (!report.all_nonnegative)
            throw MagicFactorError("magic factor " + factor + " has a negative coefficient at " +
                                   to_string(*report.witness));
    }
    auto report = coeff_sign_report(f.m);
    if (!report.all_nonnegative)
        throw MagicFactorError("magic factor has a negative coefficient at " + to_string(*report.witness));
    return f;
}

MagicFactor magic_factor(CaseKind kind) { return load_magic_factor(kind, magic_factor_text(kind)); }

}  // namespace lvcert
