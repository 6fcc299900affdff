#include <lvcert/oracle/oracles.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lvcert::oracle {

namespace {

std::vector<int> frequency_pattern(const std::vector<int>& colours)
{
    std::map<int, int> freq;
    for (int c : colours)
        ++freq[c];
    std::vector<int> pattern;
    for (auto [c, k] : freq)
        pattern.push_back(k);
    std::sort(pattern.rbegin(), pattern.rend());
    return pattern;
}

std::vector<std::vector<int>> partitions_desc(int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(prefix);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            prefix.push_back(p);
            self(self, remaining - p, p);
            prefix.pop_back();
        }
    };
    recurse(recurse, d, d);
    return out;
}

Rational power(const Rational& x, int k)
{
    Rational out = 1;
    for (int i = 0; i < k; ++i)
        out *= x;
    return out;
}

}  // namespace

DirectCoefficients direct_coefficients(const LocalView& view, int q, const Rational& t0)
{
    int d = view.d;
    if (q < view.colour_count)
        throw std::invalid_argument("direct_coefficients: q below the number of boundary colours");
    int m_max = d * d - static_cast<int>(view.inner_edges.size());
    Rational x = 1 / (1 + t0);
    std::vector<Rational> weight(m_max + 1);
    for (int m = 0; m <= m_max; ++m)
        weight[m] = power(x, m);
    auto parts = partitions_desc(d);

    std::vector<std::vector<bool>> adj(d + 1, std::vector<bool>(d + 1, false));
    for (auto [a, b] : view.inner_edges)
        adj[a][b] = adj[b][a] = true;

    Rational z = 0, nc = 0;
    std::vector<Rational> ng(parts.size(), Rational(0));
    std::vector<int> col(d + 1, 1);
    while (true) {
        int m = 0, m_v = 0;
        for (int u = 1; u <= d; ++u) {
            if (col[u] == col[0])
                ++m_v;
            for (int c : view.mults[u - 1])
                if (c == col[u])
                    ++m;
            for (int w = u + 1; w <= d; ++w)
                if (adj[u][w] && col[u] == col[w])
                    ++m;
        }
        m += m_v;
        const Rational& w = weight[m];
        z += w;
        nc += m_v * w;

        std::vector<int> nv(col.begin() + 1, col.end());
        auto hv = frequency_pattern(nv);
        std::vector<int> diff(parts.size(), 0);
        for (std::size_t s = 0; s < parts.size(); ++s)
            if (parts[s] == hv)
                diff[s] += d;
        for (int u = 1; u <= d; ++u) {
            std::vector<int> nu{col[0]};
            for (int w2 = 1; w2 <= d; ++w2)
                if (adj[u][w2])
                    nu.push_back(col[w2]);
            nu.insert(nu.end(), view.mults[u - 1].begin(), view.mults[u - 1].end());
            auto hu = frequency_pattern(nu);
            for (std::size_t s = 0; s < parts.size(); ++s)
                if (parts[s] == hu)
                    --diff[s];
        }
        for (std::size_t s = 0; s < parts.size(); ++s)
            if (diff[s] != 0)
                ng[s] += diff[s] * w;

        int i = d;
        while (i >= 0 && col[i] == q) {
            col[i] = 1;
            --i;
        }
        if (i < 0)
            break;
        ++col[i];
    }

    DirectCoefficients out;
    out.ztilde = z * power(1 + t0, m_max);
    out.c = nc / (2 * z);
    for (auto& g : ng)
        out.gamma.push_back(g / (d * z));
    return out;
}

Rational direct_internal_energy(const SmallGraph& g, int q, const Rational& t0)
{
    int n = g.size();
    auto edges = g.edges();
    Rational x = 1 / (1 + t0);
    std::vector<Rational> weight(edges.size() + 1);
    for (std::size_t m = 0; m <= edges.size(); ++m)
        weight[m] = power(x, static_cast<int>(m));
    std::vector<long> count(edges.size() + 1, 0);
    std::vector<int> col(n, 0);
    while (true) {
        int m = 0;
        for (auto [a, b] : edges)
            if (col[a] == col[b])
                ++m;
        ++count[m];
        int i = n - 1;
        while (i >= 0 && col[i] == q - 1) {
            col[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++col[i];
    }
    Rational z = 0, e = 0;
    for (std::size_t m = 0; m < count.size(); ++m) {
        z += count[m] * weight[m];
        e += static_cast<long>(m) * count[m] * weight[m];
    }
    return e / (n * z);
}

}  // namespace lvcert::oracle
