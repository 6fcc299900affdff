#include <lvcert/certify/crosscheck.hpp>

#include <stdexcept>

namespace lvcert {

CrosscheckResult crosscheck_lp(const Catalogue& catalogue, const std::vector<CoeffRecord>& records,
                               const CaseSpec& spec, const Rational& t0, const Rational& r0, LpSense sense)
{
    if (t0 < 0 || r0 < 0)
        throw std::invalid_argument("crosscheck_lp needs t0 >= 0 and r0 >= 0");
    if (records.size() != catalogue.views.size())
        throw std::invalid_argument("crosscheck_lp: one record per view required");
    std::size_t n = records.size();
    std::size_t parts = records.empty() ? 0 : records.front().n_gamma.size();

    std::vector<std::vector<Rational>> a(1 + parts, std::vector<Rational>(n));
    std::vector<Rational> b(1 + parts, Rational(0));
    std::vector<Rational> c(n);
    b[0] = 1;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& rec = records[j];
        Rational z = rec.ztilde.eval(t0, r0);
        if (z == 0)
            throw std::runtime_error("local partition function vanishes at the evaluation point");
        a[0][j] = 1;
        c[j] = rec.n_c.eval(t0, r0) / (2 * z);
        for (std::size_t s = 0; s < parts; ++s)
            a[1 + s][j] = rec.n_gamma[s].eval(t0, r0) / (rec.d * z);
    }

    CrosscheckResult out;
    out.spec = spec;
    out.sense = sense;
    out.t0 = t0;
    out.r0 = r0;
    auto lp = solve_lp(a, b, c, sense);
    out.status = lp.status;
    out.pivots = lp.pivots;
    if (lp.status == LpStatus::Optimal) {
        out.optimum = lp.value;
        for (std::size_t j = 0; j < n; ++j)
            if (lp.x[j] > 0)
                out.support.push_back(static_cast<int>(j));
    }
    if (sense == LpSense::Minimise)
        out.reference = reference_model(ReferenceGraph::K44, spec).u.eval(t0, r0);
    else
        out.reference = records.at(k5_view(catalogue)).c().eval(t0, r0);
    return out;
}

}  // namespace lvcert
