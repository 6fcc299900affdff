#include <lvcert/algebra/bipoly.hpp>

#include <algorithm>

namespace lvcert {

namespace {

// Dense accumulation grid used by multiplication; indices are (t, r).
class Grid {
public:
    Grid(std::size_t t_size, std::size_t r_size)
        : t_size_(t_size), r_size_(r_size), cells_(t_size * r_size), touched_(t_size * r_size, 0)
    {
    }

    void addmul(std::uint32_t t, std::uint32_t r, const BigInt& a, const BigInt& b)
    {
        auto i = index(t, r);
        mpz_addmul(cells_[i].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        touched_[i] = 1;
    }

    void add(std::uint32_t t, std::uint32_t r, const BigInt& a)
    {
        auto i = index(t, r);
        cells_[i] += a;
        touched_[i] = 1;
    }

    std::vector<BiPoly::Term> collect()
    {
        std::vector<BiPoly::Term> out;
        for (std::size_t t = 0; t < t_size_; ++t)
            for (std::size_t r = 0; r < r_size_; ++r) {
                auto i = t * r_size_ + r;
                if (touched_[i] && sgn(cells_[i]) != 0)
                    out.push_back({Monomial{static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(r)},
                                   std::move(cells_[i])});
            }
        return out;
    }

private:
    std::size_t index(std::uint32_t t, std::uint32_t r) const { return t * r_size_ + r; }

    std::size_t t_size_;
    std::size_t r_size_;
    std::vector<BigInt> cells_;
    std::vector<char> touched_;
};

// Univariate polynomial in r, dense, index = degree, no trailing zeros.
using UPoly = std::vector<BigInt>;

void trim(UPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

std::optional<UPoly> udivide_exact(UPoly a, const UPoly& b)
{
    if (b.empty())
        throw AlgebraError("exact_divide: division by zero polynomial");
    trim(a);
    if (a.empty())
        return UPoly{};
    if (a.size() < b.size())
        return std::nullopt;
    UPoly quotient(a.size() - b.size() + 1);
    const BigInt& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        if (!mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        BigInt c = a.back() / lead;
        for (std::size_t i = 0; i < b.size(); ++i)
            mpz_submul(a[shift + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        quotient[shift] = c;
        trim(a);
    }
    if (!a.empty())
        return std::nullopt;
    trim(quotient);
    return quotient;
}

// p as a list of r-polynomials indexed by t-degree.
std::vector<UPoly> to_dense(const BiPoly& p)
{
    std::vector<UPoly> out(static_cast<std::size_t>(p.t_degree() + 1));
    for (const auto& term : p.terms()) {
        auto& row = out[term.mono.t_deg];
        if (row.size() <= term.mono.r_deg)
            row.resize(term.mono.r_deg + 1);
        row[term.mono.r_deg] = term.coeff;
    }
    return out;
}

BiPoly from_dense(const std::vector<UPoly>& rows)
{
    std::vector<BiPoly::Term> terms;
    for (std::size_t t = 0; t < rows.size(); ++t)
        for (std::size_t r = 0; r < rows[t].size(); ++r)
            if (sgn(rows[t][r]) != 0)
                terms.push_back({Monomial{static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(r)},
                                 rows[t][r]});
    return BiPoly::from_terms(std::move(terms));
}

}  // namespace

BiPoly::BiPoly(long value) : BiPoly(BigInt(value)) {}

BiPoly::BiPoly(const BigInt& value)
{
    if (sgn(value) != 0)
        terms_.push_back({Monomial{}, value});
}

BiPoly BiPoly::monomial(std::uint32_t t_deg, std::uint32_t r_deg, const BigInt& coeff)
{
    BiPoly p;
    if (sgn(coeff) != 0)
        p.terms_.push_back({Monomial{t_deg, r_deg}, coeff});
    return p;
}

BiPoly BiPoly::t() { return monomial(1, 0); }
BiPoly BiPoly::r() { return monomial(0, 1); }

BiPoly BiPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    BiPoly p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == term.mono)
            p.terms_.back().coeff += term.coeff;
        else
            p.terms_.push_back(std::move(term));
    }
    std::erase_if(p.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
    return p;
}

int BiPoly::t_degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(terms_.back().mono.t_deg);
}

int BiPoly::r_degree() const
{
    int deg = -1;
    for (const auto& term : terms_)
        deg = std::max(deg, static_cast<int>(term.mono.r_deg));
    return deg;
}

BigInt BiPoly::coeff(std::uint32_t t_deg, std::uint32_t r_deg) const
{
    Monomial key{t_deg, r_deg};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& term, const Monomial& m) { return term.mono < m; });
    if (it != terms_.end() && it->mono == key)
        return it->coeff;
    return 0;
}

BigInt BiPoly::content() const
{
    BigInt g = 0;
    for (const auto& term : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

BiPoly BiPoly::at_r_zero() const
{
    BiPoly p;
    for (const auto& term : terms_)
        if (term.mono.r_deg == 0)
            p.terms_.push_back(term);
    return p;
}

BiPoly BiPoly::shift_r(long shift) const
{
    if (shift == 0 || terms_.empty())
        return *this;
    int rdeg = r_degree();
    // binom[b][j] for b <= rdeg
    std::vector<std::vector<BigInt>> binom(rdeg + 1);
    for (int b = 0; b <= rdeg; ++b) {
        binom[b].resize(b + 1);
        for (int j = 0; j <= b; ++j)
            mpz_bin_uiui(binom[b][j].get_mpz_t(), b, j);
    }
    BigInt s = shift;
    std::vector<BigInt> spow(rdeg + 1);
    spow[0] = 1;
    for (int i = 1; i <= rdeg; ++i)
        spow[i] = spow[i - 1] * s;

    Grid grid(t_degree() + 1, rdeg + 1);
    for (const auto& term : terms_) {
        int b = static_cast<int>(term.mono.r_deg);
        for (int j = 0; j <= b; ++j) {
            BigInt factor = binom[b][j] * spow[b - j];
            grid.addmul(term.mono.t_deg, j, term.coeff, factor);
        }
    }
    BiPoly p;
    p.terms_ = grid.collect();
    return p;
}

Rational BiPoly::eval(const Rational& t0, const Rational& r0) const
{
    if (terms_.empty())
        return 0;
    std::vector<Rational> tp(t_degree() + 1), rp(r_degree() + 1);
    tp[0] = 1;
    for (std::size_t i = 1; i < tp.size(); ++i)
        tp[i] = tp[i - 1] * t0;
    rp[0] = 1;
    for (std::size_t i = 1; i < rp.size(); ++i)
        rp[i] = rp[i - 1] * r0;
    Rational sum = 0;
    for (const auto& term : terms_)
        sum += Rational(term.coeff) * tp[term.mono.t_deg] * rp[term.mono.r_deg];
    sum.canonicalize();
    return sum;
}

BiPoly BiPoly::operator-() const
{
    BiPoly p = *this;
    for (auto& term : p.terms_)
        term.coeff = -term.coeff;
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& other)
{
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
            merged.push_back(std::move(*a++));
        }
        else if (a == terms_.end() || b->mono < a->mono) {
            merged.push_back(*b++);
        }
        else {
            BigInt c = a->coeff + b->coeff;
            if (sgn(c) != 0)
                merged.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) { return *this += -other; }

BiPoly& BiPoly::operator*=(const BiPoly& other)
{
    *this = *this * other;
    return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar)
{
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_)
        term.coeff *= scalar;
    return *this;
}

BiPoly BiPoly::divide_scalar(const BigInt& divisor) const
{
    if (sgn(divisor) == 0)
        throw AlgebraError("divide_scalar: division by zero");
    BiPoly p = *this;
    for (auto& term : p.terms_) {
        if (!mpz_divisible_p(term.coeff.get_mpz_t(), divisor.get_mpz_t()))
            throw AlgebraError("divide_scalar: inexact division");
        mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), divisor.get_mpz_t());
    }
    return p;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    Grid grid(a.t_degree() + b.t_degree() + 1, a.r_degree() + b.r_degree() + 1);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            grid.addmul(x.mono.t_deg + y.mono.t_deg, x.mono.r_deg + y.mono.r_deg, x.coeff, y.coeff);
    BiPoly p;
    p.terms_ = grid.collect();
    return p;
}

bool operator==(const BiPoly& a, const BiPoly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

BiPoly pow(const BiPoly& base, unsigned exponent)
{
    BiPoly result = 1;
    BiPoly square = base;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= square;
        exponent >>= 1u;
        if (exponent > 0)
            square *= square;
    }
    return result;
}

BiPoly linear_combination(const std::vector<const BiPoly*>& factors, const std::vector<const BiPoly*>& polys)
{
    if (factors.size() != polys.size())
        throw AlgebraError("linear_combination: size mismatch");
    int tmax = -1, rmax = -1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i]->is_zero() || polys[i]->is_zero())
            continue;
        tmax = std::max(tmax, factors[i]->t_degree() + polys[i]->t_degree());
        rmax = std::max(rmax, factors[i]->r_degree() + polys[i]->r_degree());
    }
    if (tmax < 0)
        return {};
    Grid grid(tmax + 1, rmax + 1);
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (const auto& x : factors[i]->terms())
            for (const auto& y : polys[i]->terms())
                grid.addmul(x.mono.t_deg + y.mono.t_deg, x.mono.r_deg + y.mono.r_deg, x.coeff, y.coeff);
    return BiPoly::from_terms(grid.collect());
}

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q)
{
    if (q.is_zero())
        throw AlgebraError("exact_divide: division by zero polynomial");
    if (p.is_zero())
        return BiPoly{};
    auto rem = to_dense(p);
    auto div = to_dense(q);
    for (auto& row : rem)
        trim(row);
    for (auto& row : div)
        trim(row);
    std::size_t qdeg = div.size() - 1;
    if (rem.size() < div.size())
        return std::nullopt;
    std::vector<UPoly> quotient(rem.size() - qdeg);

    for (std::size_t k = rem.size(); k-- > qdeg;) {
        if (rem[k].empty())
            continue;
        auto c = udivide_exact(rem[k], div[qdeg]);
        if (!c)
            return std::nullopt;
        std::size_t shift = k - qdeg;
        for (std::size_t j = 0; j <= qdeg; ++j) {
            auto& target = rem[shift + j];
            const auto& src = div[j];
            if (src.empty())
                continue;
            if (target.size() < c->size() + src.size() - 1)
                target.resize(c->size() + src.size() - 1);
            for (std::size_t a = 0; a < c->size(); ++a)
                for (std::size_t b = 0; b < src.size(); ++b)
                    mpz_submul(target[a + b].get_mpz_t(), (*c)[a].get_mpz_t(), src[b].get_mpz_t());
            trim(target);
        }
        if (!rem[k].empty())
            return std::nullopt;
        quotient[shift] = std::move(*c);
    }
    for (const auto& row : rem)
        if (!row.empty())
            return std::nullopt;
    return from_dense(quotient);
}

SignReport coeff_sign_report(const BiPoly& p)
{
    SignReport report;
    for (const auto& term : p.terms()) {
        if (sgn(term.coeff) < 0) {
            report.all_nonnegative = false;
            report.witness = term.mono;
            return report;
        }
        if (term.mono.r_deg == 0)
            report.strictly_positive_at_r0 = true;
    }
    return report;
}

std::string to_string(const Monomial& m)
{
    return "t^" + std::to_string(m.t_deg) + " r^" + std::to_string(m.r_deg);
}

}  // namespace lvcert
