#include <lvcert/certify/reference.hpp>

#include <lvcert/potts/partition.hpp>

#include <stdexcept>

namespace lvcert {

SmallGraph reference_graph(ReferenceGraph graph)
{
    if (graph == ReferenceGraph::K5) {
        SmallGraph g(5);
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                g.add_edge(a, b);
        return g;
    }
    SmallGraph g(8);
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 8; ++b)
            g.add_edge(a, b);
    return g;
}

ReferenceModel reference_model(ReferenceGraph graph, const CaseSpec& spec)
{
    SmallGraph g = reference_graph(graph);
    int n = g.size();
    auto edges = g.edges();
    int e_count = static_cast<int>(edges.size());
    auto triple = partitions_of(3);

    // weight[m][k], energy[m][k] and pattern[s][m][k] over set partitions of
    // the vertex set in restricted-growth form.
    using Grid = std::vector<std::vector<long>>;
    Grid weight(e_count + 1, std::vector<long>(n + 1, 0));
    Grid energy = weight;
    std::vector<Grid> pattern(triple.size(), weight);

    std::vector<int> colours(n, 0);
    auto recurse = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            int m = 0;
            for (auto [a, b] : edges)
                if (colours[a] == colours[b])
                    ++m;
            ++weight[m][used];
            energy[m][used] += m;
            if (graph == ReferenceGraph::K44) {
                int ext[3] = {colours[1], colours[2], colours[3]};
                int s = partition_index(triple, partition_of_multiset(ext));
                ++pattern[s][m][used];
            }
            return;
        }
        for (int c = 0; c <= used; ++c) {
            colours[i] = c;
            self(self, i + 1, c == used ? used + 1 : used);
        }
    };
    recurse(recurse, 0, 0);

    BiPoly q = spec.q();
    BiPoly one_plus_t = BiPoly::t() + BiPoly(1);
    auto assemble = [&](const Grid& grid) {
        BiPoly out;
        for (int m = 0; m <= e_count; ++m)
            for (int k = 0; k <= n; ++k)
                if (grid[m][k] != 0) {
                    BiPoly term = falling_factorial(q, k) * pow(one_plus_t, e_count - m);
                    term *= BigInt(grid[m][k]);
                    out += term;
                }
        return out;
    };

    ReferenceModel ref;
    ref.graph = graph;
    ref.spec = spec;
    ref.ztilde = assemble(weight);
    ref.u = RatFn(assemble(energy), ref.ztilde * BiPoly(n));
    if (graph == ReferenceGraph::K44)
        for (std::size_t s = 0; s < triple.size(); ++s)
            ref.pstar_by_partition.emplace(triple[s], RatFn(assemble(pattern[s]), ref.ztilde));
    return ref;
}

LocalView bipartite_view(int d, const Partition& pattern)
{
    std::vector<int> colours;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        colours.insert(colours.end(), pattern[i], static_cast<int>(i) + 1);
    if (static_cast<int>(colours.size()) != d - 1)
        throw std::invalid_argument("bipartite_view: pattern must partition d - 1");
    std::vector<std::vector<int>> lists(d, colours);
    return make_local_view(d, {}, lists);
}

LocalView complete_view(int d)
{
    std::vector<VertexPair> inner;
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            inner.emplace_back(a, b);
    return make_local_view(d, inner, std::vector<std::vector<int>>(d));
}

std::vector<int> k44_support_views(const Catalogue& catalogue)
{
    std::vector<int> ids;
    for (const auto& pattern : partitions_of(catalogue.d - 1)) {
        int id = catalogue.find(bipartite_view(catalogue.d, pattern));
        if (id < 0)
            throw SupportNotFound("K44 support view for pattern " + partition_label(pattern) +
                                  " missing from catalogue");
        ids.push_back(id);
    }
    return ids;
}

int k5_view(const Catalogue& catalogue)
{
    int id = catalogue.find(complete_view(catalogue.d));
    if (id < 0)
        throw SupportNotFound("complete view missing from catalogue");
    return id;
}

std::map<int, RatFn> k44_distribution(const Catalogue& catalogue, const ReferenceModel& ref)
{
    if (ref.graph != ReferenceGraph::K44)
        throw std::invalid_argument("k44_distribution needs the K44 reference model");
    auto ids = k44_support_views(catalogue);
    auto patterns = partitions_of(catalogue.d - 1);
    std::map<int, RatFn> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        out.emplace(ids[i], ref.pstar_by_partition.at(patterns[i]));
    return out;
}

}  // namespace lvcert
