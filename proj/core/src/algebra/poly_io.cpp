#include <lvcert/algebra/poly_io.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

namespace lvcert {

namespace {

std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::uint32_t parse_exponent(std::string_view token, char var)
{
    if (token.size() < 3 || token[0] != var || token[1] != '^')
        throw AlgebraError("malformed monomial token: " + std::string(token));
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data() + 2, token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw AlgebraError("malformed exponent: " + std::string(token));
    return value;
}

}  // namespace

void write_poly(std::ostream& out, const BiPoly& p)
{
    for (const auto& term : p.terms())
        out << "t^" << term.mono.t_deg << " r^" << term.mono.r_deg << ' ' << term.coeff.get_str() << '\n';
}

void write_ratfn(std::ostream& out, const RatFn& f)
{
    write_poly(out, f.num());
    out << "---\n";
    write_poly(out, f.den());
}

std::string poly_to_text(const BiPoly& p)
{
    std::ostringstream out;
    write_poly(out, p);
    return out.str();
}

std::string ratfn_to_text(const RatFn& f)
{
    std::ostringstream out;
    write_ratfn(out, f);
    return out.str();
}

BiPoly::Term parse_monomial_line(std::string_view line)
{
    line = strip(line);
    auto sp1 = line.find(' ');
    if (sp1 == std::string_view::npos)
        throw AlgebraError("malformed monomial line: " + std::string(line));
    auto rest = strip(line.substr(sp1 + 1));
    auto sp2 = rest.find(' ');
    if (sp2 == std::string_view::npos)
        throw AlgebraError("malformed monomial line: " + std::string(line));
    BiPoly::Term term;
    term.mono.t_deg = parse_exponent(line.substr(0, sp1), 't');
    term.mono.r_deg = parse_exponent(rest.substr(0, sp2), 'r');
    auto coeff = std::string(strip(rest.substr(sp2 + 1)));
    if (coeff.empty() || term.coeff.set_str(coeff, 10) != 0)
        throw AlgebraError("malformed coefficient: " + coeff);
    return term;
}

BiPoly parse_poly(std::string_view text)
{
    std::vector<BiPoly::Term> terms;
    std::optional<Monomial> previous;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = strip(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty())
            continue;
        auto term = parse_monomial_line(line);
        if (previous && !(*previous < term.mono))
            throw AlgebraError("monomials out of order at: " + std::string(line));
        if (sgn(term.coeff) == 0)
            throw AlgebraError("zero coefficient stored at: " + std::string(line));
        previous = term.mono;
        terms.push_back(std::move(term));
    }
    return BiPoly::from_terms(std::move(terms));
}

RatFn parse_ratfn(std::string_view text)
{
    std::size_t pos = 0;
    while (true) {
        auto found = text.find("---", pos);
        if (found == std::string_view::npos)
            throw AlgebraError("rational function text lacks '---' separator");
        bool line_start = found == 0 || text[found - 1] == '\n';
        if (line_start)
            return RatFn(parse_poly(text.substr(0, found)), parse_poly(text.substr(found + 3)));
        pos = found + 3;
    }
}

std::string to_infix(const BiPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& term = *it;
        BigInt c = term.coeff;
        if (first) {
            if (sgn(c) < 0)
                out << '-';
        }
        else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        bool has_var = term.mono.t_deg > 0 || term.mono.r_deg > 0;
        bool need_star = false;
        if (c != 1 || !has_var) {
            out << c.get_str();
            need_star = true;
        }
        auto var = [&](char name, std::uint32_t e) {
            if (e == 0)
                return;
            if (need_star)
                out << '*';
            out << name;
            if (e > 1)
                out << '^' << e;
            need_star = true;
        };
        var('t', term.mono.t_deg);
        var('r', term.mono.r_deg);
    }
    return out.str();
}

}  // namespace lvcert
