#include <lvcert/certify/simplex.hpp>

#include <stdexcept>

namespace lvcert {

namespace {

class Tableau {
public:
    // rows_[i] holds the constraint coefficients followed by the rhs; cost_
    // holds reduced costs followed by minus the objective value.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> cost;
    std::vector<int> basis;
    int pivots = 0;

    int columns() const { return static_cast<int>(cost.size()) - 1; }

    void pivot(int r, int col)
    {
        Rational inv = 1 / rows[r][col];
        for (auto& v : rows[r])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != r && rows[i][col] != 0)
                eliminate(rows[i], rows[r], col);
        if (cost[col] != 0)
            eliminate(cost, rows[r], col);
        basis[r] = col;
        ++pivots;
    }

    /// Bland's rule over columns [0, limit). Returns false when unbounded.
    bool optimise(int limit)
    {
        while (true) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return true;
            int leave = -1;
            Rational best;
            int rhs = columns();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0)
                    continue;
                Rational ratio = rows[i][rhs] / rows[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }

private:
    static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& source, int col)
    {
        Rational factor = target[col];
        for (std::size_t j = 0; j < target.size(); ++j)
            if (source[j] != 0)
                target[j] -= factor * source[j];
    }
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c, LpSense sense)
{
    int m = static_cast<int>(a.size());
    int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("solve_lp: row count mismatch");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("solve_lp: column count mismatch");

    // Phase one: artificial columns n .. n+m-1.
    Tableau tab;
    int width = n + m;
    tab.rows.assign(m, std::vector<Rational>(width + 1));
    tab.cost.assign(width + 1, Rational(0));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < n; ++j)
            tab.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        tab.rows[i][n + i] = 1;
        tab.rows[i][width] = flip ? Rational(-b[i]) : b[i];
        tab.basis[i] = n + i;
        for (int j = 0; j < n; ++j)
            tab.cost[j] -= tab.rows[i][j];
        tab.cost[width] -= tab.rows[i][width];
    }
    tab.optimise(width);

    LpResult result;
    if (tab.cost[width] != 0) {
        result.status = LpStatus::Infeasible;
        result.pivots = tab.pivots;
        return result;
    }
    // Drive remaining artificials out of the basis or drop their rows.
    for (int i = m - 1; i >= 0; --i) {
        if (tab.basis[i] < n)
            continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (tab.rows[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            tab.pivot(i, col);
        }
        else {
            tab.rows.erase(tab.rows.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
        }
    }

    // Phase two on the original columns; artificial columns are ignored.
    tab.cost.assign(width + 1, Rational(0));
    for (int j = 0; j < n; ++j)
        tab.cost[j] = sense == LpSense::Minimise ? c[j] : Rational(-c[j]);
    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
        Rational cb = tab.cost[tab.basis[i]];
        if (cb == 0)
            continue;
        for (int j = 0; j <= width; ++j)
            if (tab.rows[i][j] != 0)
                tab.cost[j] -= cb * tab.rows[i][j];
    }
    bool bounded = tab.optimise(n);
    result.pivots = tab.pivots;
    if (!bounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.rows.size(); ++i)
        result.x[tab.basis[i]] = tab.rows[i][width];
    Rational value = 0;
    for (int j = 0; j < n; ++j)
        value += c[j] * result.x[j];
    result.value = value;
    return result;
}

}  // namespace lvcert
