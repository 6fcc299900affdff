#pragma once

#include <lvcert/algebra/ratfn.hpp>
#include <lvcert/localview/local_view.hpp>
#include <lvcert/potts/local_colouring.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lvcert {

enum class CaseKind { MinQ5, MinQGe6, MaxQGe5 };

/// Substitution e^beta = 1 + t together with q = 5, q = r + 6 or q = r + 5.
struct CaseSpec {
    CaseKind kind = CaseKind::MinQ5;

    /// q as a polynomial in r.
    BiPoly q() const;
    /// Value of q at r = r0.
    long q_at(long r0) const;
    /// r such that q_at(r) == q; throws if q is outside the case's range.
    long r_for_q(long q) const;
    /// "q5", "qge6" or "max".
    std::string name() const;

    static CaseSpec parse(std::string_view name);
    static CaseSpec min_q5() { return {CaseKind::MinQ5}; }
    static CaseSpec min_qge6() { return {CaseKind::MinQGe6}; }
    static CaseSpec max_qge5() { return {CaseKind::MaxQGe5}; }
};

/// x (x - 1) ... (x - k + 1).
BiPoly falling_factorial(const BiPoly& x, int k);

/// binom(q - q_L, ell - q_L) as a function of r (denominator (ell - q_L)!).
RatFn multiplicity(const LocalView& view, int ell, const CaseSpec& spec);

/// Exact LP data for one view. c = n_c / (2 Ztilde) and
/// gamma[s] = n_gamma[s] / (d Ztilde), with s indexing partitions_of(d).
struct CoeffRecord {
    int view_id = -1;
    int d = 0;
    BiPoly ztilde;
    BiPoly n_c;
    std::vector<BiPoly> n_gamma;

    RatFn c() const;
    RatFn gamma(std::size_t s) const;
};

/// Ztilde = sum over colourings of (1 + t)^(m_max - m).
BiPoly local_partition_function(const LocalView& view, const CaseSpec& spec);

CoeffRecord coefficient_vectors(const LocalView& view, const CaseSpec& spec, int view_id = -1);
CoeffRecord coefficients_from_tally(const ColourTally& tally, const CaseSpec& spec, int view_id = -1);

}  // namespace lvcert
