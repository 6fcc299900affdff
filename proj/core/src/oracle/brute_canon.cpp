#include <lvcert/oracle/oracles.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace lvcert::oracle {

namespace {

std::vector<bool> adjacency_sequence(const SmallGraph& g, const std::vector<int>& image)
{
    // Vertex v of g becomes image[v]; the sequence lists pairs (i, j), i < j,
    // of the relabelled graph in lexicographic order.
    int n = g.size();
    std::vector<int> preimage(n);
    for (int v = 0; v < n; ++v)
        preimage[image[v]] = v;
    std::vector<bool> seq;
    seq.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            seq.push_back(g.adjacent(preimage[i], preimage[j]));
    return seq;
}

template <typename Visit>
void for_each_role_permutation(const SmallGraph& g, Visit&& visit)
{
    int n = g.size();
    std::vector<std::vector<int>> classes(5);
    for (int v = 0; v < n; ++v)
        classes[static_cast<int>(g.role(v))].push_back(v);
    std::vector<std::vector<int>> targets = classes;
    std::vector<int> image(n);
    auto recurse = [&](auto&& self, std::size_t cls) -> void {
        if (cls == classes.size()) {
            visit(image);
            return;
        }
        auto& perm = targets[cls];
        std::sort(perm.begin(), perm.end());
        do {
            for (std::size_t i = 0; i < perm.size(); ++i)
                image[classes[cls][i]] = perm[i];
            self(self, cls + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    recurse(recurse, 0);
}

bool is_automorphism_image(const SmallGraph& g, const std::vector<int>& image)
{
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != g.adjacent(image[u], image[v]))
                return false;
    return true;
}

}  // namespace

SmallGraph rf_canonical_form(const SmallGraph& g)
{
    std::vector<bool> best;
    std::vector<int> best_image;
    for_each_role_permutation(g, [&](const std::vector<int>& image) {
        auto seq = adjacency_sequence(g, image);
        if (best_image.empty() || seq > best) {
            best = std::move(seq);
            best_image = image;
        }
    });
    return g.relabelled(best_image);
}

std::vector<Permutation> role_preserving_permutations(const SmallGraph& g)
{
    std::vector<Permutation> out;
    for_each_role_permutation(g, [&](const std::vector<int>& image) { out.emplace_back(image); });
    return out;
}

long brute_aut_order(const SmallGraph& g)
{
    long count = 0;
    for_each_role_permutation(g, [&](const std::vector<int>& image) {
        if (is_automorphism_image(g, image))
            ++count;
    });
    return count;
}

std::vector<std::vector<VertexPair>> brute_pair_orbits(const SmallGraph& g, const std::vector<VertexPair>& items)
{
    std::vector<std::vector<int>> autos;
    for_each_role_permutation(g, [&](const std::vector<int>& image) {
        if (is_automorphism_image(g, image))
            autos.push_back(image);
    });
    std::set<VertexPair> seen;
    std::vector<std::vector<VertexPair>> orbits;
    for (auto item : items) {
        item = ordered(item.first, item.second);
        if (seen.contains(item))
            continue;
        std::set<VertexPair> orbit;
        for (const auto& a : autos)
            orbit.insert(ordered(a[item.first], a[item.second]));
        seen.insert(orbit.begin(), orbit.end());
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

bool brute_in_same_orbit(const SmallGraph& g, VertexPair e, VertexPair last)
{
    e = ordered(e.first, e.second);
    last = ordered(last.first, last.second);
    bool found = false;
    for_each_role_permutation(g, [&](const std::vector<int>& image) {
        if (!found && ordered(image[e.first], image[e.second]) == last && is_automorphism_image(g, image))
            found = true;
    });
    return found;
}

}  // namespace lvcert::oracle
