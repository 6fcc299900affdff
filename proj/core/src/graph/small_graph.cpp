#include <lvcert/graph/small_graph.hpp>

#include <algorithm>
#include <numeric>

namespace lvcert {

char role_char(Role role)
{
    switch (role) {
    case Role::Centre:
        return 'V';
    case Role::Neighbour:
        return 'N';
    case Role::Boundary:
        return 'B';
    case Role::Colour:
        return 'C';
    case Role::Plain:
        return 'P';
    }
    return '?';
}

Role role_from_char(char c)
{
    switch (c) {
    case 'V':
        return Role::Centre;
    case 'N':
        return Role::Neighbour;
    case 'B':
        return Role::Boundary;
    case 'C':
        return Role::Colour;
    case 'P':
        return Role::Plain;
    default:
        throw GraphError(std::string("unknown role character '") + c + "'");
    }
}

SmallGraph::SmallGraph(int n, Role role) : n_(n)
{
    if (n < 0 || n > max_vertices)
        throw GraphError("SmallGraph: vertex count out of range: " + std::to_string(n));
    roles_.fill(role);
}

SmallGraph::SmallGraph(std::span<const Role> roles) : SmallGraph(static_cast<int>(roles.size()))
{
    std::copy(roles.begin(), roles.end(), roles_.begin());
}

VertexSet SmallGraph::vertices_with_role(Role role) const
{
    VertexSet out = 0;
    for (int v = 0; v < n_; ++v)
        if (roles_[v] == role)
            out |= VertexSet{1} << v;
    return out;
}

int SmallGraph::edge_count() const
{
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += std::popcount(adj_[v]);
    return total / 2;
}

void SmallGraph::add_edge(int u, int v)
{
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw GraphError("add_edge: invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
}

void SmallGraph::remove_edge(int u, int v)
{
    adj_[u] &= ~(VertexSet{1} << v);
    adj_[v] &= ~(VertexSet{1} << u);
}

std::vector<VertexPair> SmallGraph::edges() const
{
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

std::vector<VertexPair> SmallGraph::non_edges() const
{
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

SmallGraph SmallGraph::relabelled(std::span<const int> image) const
{
    SmallGraph g(n_);
    for (int v = 0; v < n_; ++v)
        g.roles_[image[v]] = roles_[v];
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                g.add_edge(image[u], image[v]);
    return g;
}

SmallGraph SmallGraph::reordered(std::span<const int> order) const
{
    SmallGraph g(n_);
    for (int i = 0; i < n_; ++i) {
        g.roles_[i] = roles_[order[i]];
        VertexSet row = 0;
        for (int j = 0; j < n_; ++j)
            if (adjacent(order[i], order[j]))
                row |= VertexSet{1} << j;
        g.adj_[i] = row;
    }
    return g;
}

std::string SmallGraph::role_string() const
{
    std::string s;
    for (int v = 0; v < n_; ++v)
        s += role_char(roles_[v]);
    return s;
}

bool operator==(const SmallGraph& a, const SmallGraph& b)
{
    if (a.n_ != b.n_)
        return false;
    for (int v = 0; v < a.n_; ++v)
        if (a.adj_[v] != b.adj_[v] || a.roles_[v] != b.roles_[v])
            return false;
    return true;
}

std::strong_ordering operator<=>(const SmallGraph& a, const SmallGraph& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    for (int v = 0; v < a.n_; ++v)
        if (auto c = a.roles_[v] <=> b.roles_[v]; c != 0)
            return c;
    for (int v = 0; v < a.n_; ++v)
        if (auto c = a.adj_[v] <=> b.adj_[v]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<char> seen(image_.size(), 0);
    for (int x : image_) {
        if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x])
            throw GraphError("Permutation: image is not a bijection");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const
{
    for (int v = 0; v < size(); ++v)
        if (image_[v] != v)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (int v = 0; v < size(); ++v)
        inv[image_[v]] = v;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    std::vector<int> image(a.image_.size());
    for (int v = 0; v < a.size(); ++v)
        image[v] = b.image_[a.image_[v]];
    return Permutation(std::move(image));
}

bool Permutation::preserves_roles(const SmallGraph& g) const
{
    for (int v = 0; v < size(); ++v)
        if (g.role(v) != g.role(image_[v]))
            return false;
    return true;
}

bool Permutation::is_automorphism(const SmallGraph& g) const
{
    if (size() != g.size() || !preserves_roles(g))
        return false;
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v)
            if (g.adjacent(u, v) != g.adjacent(image_[u], image_[v]))
                return false;
    return true;
}

}  // namespace lvcert
