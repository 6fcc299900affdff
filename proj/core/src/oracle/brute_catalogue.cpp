#include <lvcert/oracle/oracles.hpp>

#include <set>

namespace lvcert::oracle {

namespace {

std::vector<VertexPair> all_pairs(int d)
{
    std::vector<VertexPair> pairs;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            pairs.emplace_back(a, b);
    return pairs;
}

SmallGraph labelled_graph(int d, const std::vector<VertexPair>& pairs, unsigned mask)
{
    SmallGraph g(d);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u)
            g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

}  // namespace

std::vector<SmallGraph> brute_inner_graphs(int d, const CanonFn& canon)
{
    auto pairs = all_pairs(d);
    std::set<SmallGraph> forms;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask)
        forms.insert(canon(labelled_graph(d, pairs, mask)));
    return {forms.begin(), forms.end()};
}

std::vector<SmallGraph> brute_catalogue_forms(int d, const CanonFn& canon)
{
    auto pairs = all_pairs(d);
    std::set<SmallGraph> forms;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        SmallGraph inner = labelled_graph(d, pairs, mask);
        // Skeleton: centre 0, neighbours 1..d, pendant boundary vertices,
        // then one colour vertex per boundary vertex.
        std::vector<int> owner;
        for (int u = 0; u < d; ++u)
            for (int k = 0; k < d - 1 - inner.degree(u); ++k)
                owner.push_back(u + 1);
        int nb = static_cast<int>(owner.size());
        int n = 1 + d + 2 * nb;
        SmallGraph skeleton(n);
        skeleton.set_role(0, Role::Centre);
        for (int u = 1; u <= d; ++u) {
            skeleton.set_role(u, Role::Neighbour);
            skeleton.add_edge(0, u);
        }
        for (auto [a, b] : inner.edges())
            skeleton.add_edge(a + 1, b + 1);
        for (int i = 0; i < nb; ++i) {
            skeleton.set_role(1 + d + i, Role::Boundary);
            skeleton.add_edge(owner[i], 1 + d + i);
            skeleton.set_role(1 + d + nb + i, Role::Colour);
        }
        // Every set partition of the boundary, as a restricted growth string.
        std::vector<int> block(nb, 0);
        auto recurse = [&](auto&& self, int i, int used) -> void {
            if (i == nb) {
                SmallGraph g = skeleton;
                for (int j = 0; j < nb; ++j)
                    g.add_edge(1 + d + j, 1 + d + nb + block[j]);
                forms.insert(canon(g));
                return;
            }
            for (int c = 0; c <= used && c < nb; ++c) {
                block[i] = c;
                self(self, i + 1, c == used ? used + 1 : used);
            }
        };
        recurse(recurse, 0, 0);
    }
    return {forms.begin(), forms.end()};
}

}  // namespace lvcert::oracle
