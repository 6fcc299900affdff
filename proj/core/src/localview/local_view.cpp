#include <lvcert/localview/local_view.hpp>

#include <lvcert/graph/canon.hpp>

#include <algorithm>
#include <map>

namespace lvcert {

int LocalView::inner_degree(int u) const
{
    int deg = 0;
    for (auto [a, b] : inner_edges)
        if (a == u || b == u)
            ++deg;
    return deg;
}

bool LocalView::inner_adjacent(int a, int b) const
{
    auto e = ordered(a, b);
    return std::find(inner_edges.begin(), inner_edges.end(), e) != inner_edges.end();
}

int LocalView::boundary_size() const
{
    int total = 0;
    for (const auto& m : mults)
        total += static_cast<int>(m.size());
    return total;
}

std::string LocalView::inner_text() const
{
    std::string s;
    for (auto [a, b] : inner_edges) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(a) + '-' + std::to_string(b);
    }
    return s;
}

std::string LocalView::mults_text() const
{
    std::string s = "[";
    for (std::size_t u = 0; u < mults.size(); ++u) {
        if (u > 0)
            s += '|';
        for (std::size_t i = 0; i < mults[u].size(); ++i) {
            if (i > 0)
                s += ',';
            s += std::to_string(mults[u][i]);
        }
    }
    return s + "]";
}

SmallGraph build_simple_representation(int d, const SmallGraph& inner)
{
    if (inner.size() != d)
        throw InvalidInner("inner graph must have d vertices");
    std::vector<int> pendants(d);
    int boundary = 0;
    for (int i = 0; i < d; ++i) {
        int deg = inner.degree(i);
        if (deg > d - 1)
            throw InvalidInner("inner degree exceeds d - 1");
        pendants[i] = d - 1 - deg;
        boundary += pendants[i];
    }
    int n = 1 + d + 2 * boundary;
    if (n > SmallGraph::max_vertices)
        throw InvalidInner("representation exceeds the vertex limit");

    SmallGraph g(n);
    g.set_role(0, Role::Centre);
    for (int u = 1; u <= d; ++u) {
        g.set_role(u, Role::Neighbour);
        g.add_edge(0, u);
    }
    for (auto [a, b] : inner.edges())
        g.add_edge(a + 1, b + 1);
    int next = 1 + d;
    for (int u = 1; u <= d; ++u)
        for (int k = 0; k < pendants[u - 1]; ++k) {
            g.set_role(next, Role::Boundary);
            g.add_edge(u, next);
            ++next;
        }
    for (int k = 0; k < boundary; ++k)
        g.set_role(next++, Role::Colour);
    return g;
}

SmallGraph representation_with_colours(int d, std::span<const VertexPair> inner_edges,
                                       const std::vector<std::vector<int>>& colours)
{
    if (static_cast<int>(colours.size()) != d)
        throw InvalidInner("one colour list per neighbour required");
    SmallGraph inner(d);
    for (auto [a, b] : inner_edges) {
        if (a < 1 || b < 1 || a > d || b > d || a == b)
            throw InvalidInner("inner edge endpoints must lie in 1..d");
        inner.add_edge(a - 1, b - 1);
    }
    SmallGraph g = build_simple_representation(d, inner);
    int first_boundary = 1 + d;
    int boundary = (g.size() - first_boundary) / 2;
    int first_colour = first_boundary + boundary;

    std::map<int, int> colour_vertex;
    int b = first_boundary;
    for (int u = 1; u <= d; ++u) {
        if (static_cast<int>(colours[u - 1].size()) != d - 1 - inner.degree(u - 1))
            throw InvalidInner("colour list size must equal d - 1 - inner degree");
        for (int c : colours[u - 1]) {
            auto [it, fresh] = colour_vertex.try_emplace(c, first_colour + static_cast<int>(colour_vertex.size()));
            g.add_edge(b++, it->second);
        }
    }
    return g;
}

LocalView local_view_from_representation(const SmallGraph& rep)
{
    LocalView view;
    view.rep = canonical_form(rep);
    const auto& g = view.rep;

    int d = 0;
    while (d + 1 < g.size() && g.role(d + 1) == Role::Neighbour)
        ++d;
    if (g.size() == 0 || g.role(0) != Role::Centre || g.degree(0) != d)
        throw GraphError("not a local-view representation");
    view.d = d;

    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            if (g.adjacent(a, b))
                view.inner_edges.emplace_back(a, b);

    std::map<int, int> renumber;
    view.mults.resize(d);
    for (int u = 1; u <= d; ++u) {
        for (VertexSet s = g.neighbours(u); s; s &= s - 1) {
            int b = std::countr_zero(s);
            if (g.role(b) != Role::Boundary)
                continue;
            VertexSet cs = g.neighbours(b) & g.vertices_with_role(Role::Colour);
            if (std::popcount(cs) != 1)
                throw GraphError("boundary vertex must have exactly one colour");
            int c = std::countr_zero(cs);
            auto [it, fresh] = renumber.try_emplace(c, static_cast<int>(renumber.size()) + 1);
            view.mults[u - 1].push_back(it->second);
        }
        std::sort(view.mults[u - 1].begin(), view.mults[u - 1].end());
    }
    view.colour_count = static_cast<int>(renumber.size());
    return view;
}

LocalView make_local_view(int d, std::span<const VertexPair> inner_edges, const std::vector<std::vector<int>>& colours)
{
    return local_view_from_representation(representation_with_colours(d, inner_edges, colours));
}

LocalView local_view_of(const SmallGraph& g, int v, std::span<const int> colouring)
{
    if (g.size() == 0)
        throw NotRegular("empty graph");
    int d = g.degree(0);
    for (int w = 0; w < g.size(); ++w)
        if (g.degree(w) != d)
            throw NotRegular("graph is not regular");

    std::vector<int> nbrs;
    for (VertexSet s = g.neighbours(v); s; s &= s - 1)
        nbrs.push_back(std::countr_zero(s));
    VertexSet closed = g.neighbours(v) | (VertexSet{1} << v);

    std::vector<VertexPair> inner;
    std::vector<std::vector<int>> colours(d);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j)
            if (g.adjacent(nbrs[i], nbrs[j]))
                inner.emplace_back(i + 1, j + 1);
        for (VertexSet s = g.neighbours(nbrs[i]) & ~closed; s; s &= s - 1)
            colours[i].push_back(colouring[std::countr_zero(s)]);
    }
    return make_local_view(d, inner, colours);
}

}  // namespace lvcert
