#include <lvcert/graph/graph_io.hpp>

#include <sstream>

namespace lvcert {

std::string graph_to_text(const SmallGraph& g)
{
    std::ostringstream out;
    out << "n " << g.size() << '\n' << g.role_string() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

SmallGraph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string tag;
    int n = -1;
    if (!(in >> tag >> n) || tag != "n" || n < 0 || n > SmallGraph::max_vertices)
        throw GraphError("graph text: bad header");
    std::string roles;
    if (n > 0 && !(in >> roles))
        throw GraphError("graph text: missing role string");
    if (static_cast<int>(roles.size()) != n)
        throw GraphError("graph text: role string length does not match n");
    SmallGraph g(n);
    for (int v = 0; v < n; ++v)
        g.set_role(v, role_from_char(roles[v]));
    int u, v;
    VertexPair previous{-1, -1};
    while (in >> u >> v) {
        if (u >= v || v >= n || u < 0)
            throw GraphError("graph text: edge must satisfy 0 <= u < v < n");
        if (!(previous < VertexPair{u, v}))
            throw GraphError("graph text: edges not sorted");
        previous = {u, v};
        g.add_edge(u, v);
    }
    if (!in.eof())
        throw GraphError("graph text: malformed edge line");
    return g;
}

}  // namespace lvcert
