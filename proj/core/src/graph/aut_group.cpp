#include <lvcert/graph/canon.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace lvcert {

AutGroup::AutGroup(int n, std::vector<Permutation> generators, mpz_class order)
    : n_(n), generators_(std::move(generators)), order_(std::move(order))
{
}

std::vector<int> AutGroup::vertex_orbits() const
{
    std::vector<int> id(n_);
    std::iota(id.begin(), id.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : generators_)
            for (int v = 0; v < n_; ++v) {
                int a = id[v], b = id[p(v)];
                if (a != b) {
                    int m = std::min(a, b);
                    for (auto& x : id)
                        if (x == a || x == b)
                            x = m;
                    changed = true;
                }
            }
    }
    return id;
}

std::vector<VertexPair> AutGroup::pair_orbit(VertexPair e) const
{
    e = ordered(e.first, e.second);
    std::vector<VertexPair> orbit{e};
    std::set<VertexPair> seen{e};
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& p : generators_) {
            auto image = p.apply(orbit[i]);
            if (seen.insert(image).second)
                orbit.push_back(image);
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<Permutation> AutGroup::elements(std::size_t limit) const
{
    if (order_ > static_cast<unsigned long>(limit))
        throw GraphError("AutGroup::elements: group order " + order_.get_str() + " exceeds limit");
    std::vector<Permutation> out{Permutation::identity(n_)};
    std::set<Permutation> seen(out.begin(), out.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : generators_) {
            auto product = out[i] * g;
            if (seen.insert(product).second)
                out.push_back(product);
        }
    return out;
}

std::vector<VertexPair> orbit_representatives(const AutGroup& group, std::span<const VertexPair> items)
{
    std::set<VertexPair> seen;
    std::vector<VertexPair> reps;
    for (auto item : items) {
        item = ordered(item.first, item.second);
        if (seen.contains(item))
            continue;
        auto orbit = group.pair_orbit(item);
        seen.insert(orbit.begin(), orbit.end());
        reps.push_back(orbit.front());
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

}  // namespace lvcert
