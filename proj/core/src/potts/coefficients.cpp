#include <lvcert/potts/coefficients.hpp>

#include <stdexcept>

namespace lvcert {

BiPoly CaseSpec::q() const
{
    switch (kind) {
    case CaseKind::MinQ5:
        return BiPoly(5);
    case CaseKind::MinQGe6:
        return BiPoly::r() + BiPoly(6);
    case CaseKind::MaxQGe5:
        return BiPoly::r() + BiPoly(5);
    }
    throw std::logic_error("unknown case");
}

long CaseSpec::q_at(long r0) const
{
    switch (kind) {
    case CaseKind::MinQ5:
        return 5;
    case CaseKind::MinQGe6:
        return r0 + 6;
    case CaseKind::MaxQGe5:
        return r0 + 5;
    }
    throw std::logic_error("unknown case");
}

long CaseSpec::r_for_q(long q) const
{
    switch (kind) {
    case CaseKind::MinQ5:
        if (q != 5)
            throw std::invalid_argument("case q5 requires q = 5");
        return 0;
    case CaseKind::MinQGe6:
        if (q < 6)
            throw std::invalid_argument("case qge6 requires q >= 6");
        return q - 6;
    case CaseKind::MaxQGe5:
        if (q < 5)
            throw std::invalid_argument("case max requires q >= 5");
        return q - 5;
    }
    throw std::logic_error("unknown case");
}

std::string CaseSpec::name() const
{
    switch (kind) {
    case CaseKind::MinQ5:
        return "q5";
    case CaseKind::MinQGe6:
        return "qge6";
    case CaseKind::MaxQGe5:
        return "max";
    }
    throw std::logic_error("unknown case");
}

CaseSpec CaseSpec::parse(std::string_view name)
{
    if (name == "q5")
        return min_q5();
    if (name == "qge6")
        return min_qge6();
    if (name == "max")
        return max_qge5();
    throw std::invalid_argument("unknown case '" + std::string(name) + "' (expected q5, qge6 or max)");
}

BiPoly falling_factorial(const BiPoly& x, int k)
{
    BiPoly out(1);
    for (int i = 0; i < k; ++i)
        out *= x - BiPoly(i);
    return out;
}

RatFn multiplicity(const LocalView& view, int ell, const CaseSpec& spec)
{
    int k = ell - view.colour_count;
    if (k < 0)
        throw std::invalid_argument("multiplicity: ell below q_L");
    BigInt factorial = 1;
    for (int i = 2; i <= k; ++i)
        factorial *= i;
    return RatFn(falling_factorial(spec.q() - BiPoly(view.colour_count), k), BiPoly(factorial));
}

RatFn CoeffRecord::c() const { return RatFn(n_c, ztilde * BiPoly(2)); }

RatFn CoeffRecord::gamma(std::size_t s) const { return RatFn(n_gamma.at(s), ztilde * BiPoly(d)); }

CoeffRecord coefficients_from_tally(const ColourTally& tally, const CaseSpec& spec, int view_id)
{
    std::vector<BiPoly> ff;
    BiPoly base = spec.q() - BiPoly(tally.q_l);
    for (int k = 0; k <= tally.max_extras; ++k)
        ff.push_back(falling_factorial(base, k));
    std::vector<BiPoly> powers;
    BiPoly one_plus_t = BiPoly::t() + BiPoly(1);
    powers.emplace_back(1);
    for (int j = 1; j <= tally.m_max; ++j)
        powers.push_back(powers.back() * one_plus_t);

    auto assemble = [&](const std::vector<std::vector<std::int64_t>>& grid) {
        std::vector<BiPoly> per_k(ff.size());
        for (int m = 0; m <= tally.m_max; ++m)
            for (std::size_t k = 0; k < ff.size(); ++k)
                if (grid[m][k] != 0) {
                    BiPoly term = powers[tally.m_max - m];
                    term *= BigInt(static_cast<long>(grid[m][k]));
                    per_k[k] += term;
                }
        std::vector<const BiPoly*> factors, polys;
        for (std::size_t k = 0; k < ff.size(); ++k)
            if (!per_k[k].is_zero()) {
                factors.push_back(&ff[k]);
                polys.push_back(&per_k[k]);
            }
        return linear_combination(factors, polys);
    };

    CoeffRecord rec;
    rec.view_id = view_id;
    rec.d = tally.d;
    rec.ztilde = assemble(tally.count);
    rec.n_c = assemble(tally.centre);
    for (const auto& g : tally.gamma)
        rec.n_gamma.push_back(assemble(g));
    return rec;
}

CoeffRecord coefficient_vectors(const LocalView& view, const CaseSpec& spec, int view_id)
{
    return coefficients_from_tally(tally_colour_classes(view), spec, view_id);
}

BiPoly local_partition_function(const LocalView& view, const CaseSpec& spec)
{
    return coefficient_vectors(view, spec).ztilde;
}

}  // namespace lvcert
