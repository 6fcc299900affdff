#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lvcert {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex role classes. Role-preserving isomorphisms map each class onto
/// itself; canonical labellings order vertices by role in this order.
enum class Role : std::uint8_t { Centre = 0, Neighbour = 1, Boundary = 2, Colour = 3, Plain = 4 };

char role_char(Role role);
Role role_from_char(char c);

using VertexSet = std::uint64_t;
using VertexPair = std::pair<int, int>;

/// Normalises to first < second.
inline VertexPair ordered(int u, int v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

/// Simple undirected graph on at most 64 vertices with per-vertex roles.
class SmallGraph {
public:
    static constexpr int max_vertices = 64;

    SmallGraph() = default;
    explicit SmallGraph(int n, Role role = Role::Plain);
    explicit SmallGraph(std::span<const Role> roles);

    int size() const { return n_; }
    Role role(int v) const { return roles_[v]; }
    void set_role(int v, Role role) { roles_[v] = role; }
    VertexSet vertices_with_role(Role role) const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    VertexSet neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<VertexPair> edges() const;
    std::vector<VertexPair> non_edges() const;

    /// Image graph under `image`: vertex v becomes image[v].
    SmallGraph relabelled(std::span<const int> image) const;

    /// The graph whose vertex i is vertex order[i] of this graph.
    SmallGraph reordered(std::span<const int> order) const;

    /// Role string, one character per vertex from {V,N,B,C,P}.
    std::string role_string() const;

    friend bool operator==(const SmallGraph& a, const SmallGraph& b);
    /// Total order: size, roles, then adjacency rows.
    friend std::strong_ordering operator<=>(const SmallGraph& a, const SmallGraph& b);

private:
    int n_ = 0;
    std::array<VertexSet, max_vertices> adj_{};
    std::array<Role, max_vertices> roles_{};
};

/// Bijection on [n]; image[v] is where v goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[v]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// (a * b)(v) = b(a(v)): apply a first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    bool preserves_roles(const SmallGraph& g) const;
    bool is_automorphism(const SmallGraph& g) const;

    VertexPair apply(const VertexPair& e) const { return ordered(image_[e.first], image_[e.second]); }

private:
    std::vector<int> image_;
};

}  // namespace lvcert
