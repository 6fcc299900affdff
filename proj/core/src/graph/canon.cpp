#include <lvcert/graph/canon.hpp>

#include <algorithm>
#include <climits>
#include <numeric>

namespace lvcert {

namespace {

constexpr int no_jump = INT_MAX;

struct Cells {
    std::array<VertexSet, SmallGraph::max_vertices> cell{};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

int lowest(VertexSet s) { return std::countr_zero(s); }

// Splits every cell by neighbour counts into the splitters, pieces ordered by
// increasing count. All decisions depend only on cell positions and counts,
// so the result is invariant under relabelling.
void refine(const SmallGraph& g, Cells& cells, std::vector<VertexSet>& queue)
{
    std::size_t head = 0;
    std::array<int, SmallGraph::max_vertices> counts{};
    while (head < queue.size()) {
        VertexSet splitter = queue[head++];
        for (int ci = 0; ci < cells.count; ++ci) {
            VertexSet x = cells.cell[ci];
            if (std::popcount(x) == 1)
                continue;
            int min_c = INT_MAX, max_c = -1;
            for (VertexSet s = x; s; s &= s - 1) {
                int v = lowest(s);
                int c = std::popcount(g.neighbours(v) & splitter);
                counts[v] = c;
                min_c = std::min(min_c, c);
                max_c = std::max(max_c, c);
            }
            if (min_c == max_c)
                continue;
            std::array<VertexSet, SmallGraph::max_vertices + 1> pieces{};
            for (VertexSet s = x; s; s &= s - 1) {
                int v = lowest(s);
                pieces[counts[v] - min_c] |= VertexSet{1} << v;
            }
            std::array<VertexSet, SmallGraph::max_vertices> fresh{};
            int nfresh = 0;
            for (int c = 0; c <= max_c - min_c; ++c)
                if (pieces[c])
                    fresh[nfresh++] = pieces[c];
            // shift the tail right to make room for the extra pieces
            for (int k = cells.count - 1; k > ci; --k)
                cells.cell[k + nfresh - 1] = cells.cell[k];
            for (int k = 0; k < nfresh; ++k) {
                cells.cell[ci + k] = fresh[k];
                queue.push_back(fresh[k]);
            }
            cells.count += nfresh - 1;
            ci += nfresh - 1;
        }
    }
}

Cells initial_cells(const SmallGraph& g)
{
    Cells cells;
    for (int r = 0; r <= static_cast<int>(Role::Plain); ++r) {
        VertexSet s = g.vertices_with_role(static_cast<Role>(r));
        if (s)
            cells.cell[cells.count++] = s;
    }
    return cells;
}

// Union-find over vertices driven by a subset of generators.
class OrbitPartition {
public:
    explicit OrbitPartition(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

    void absorb(const Permutation& p)
    {
        for (int v = 0; v < p.size(); ++v)
            unite(v, p(v));
    }

private:
    std::vector<int> parent_;
};

bool fixes_pointwise(const Permutation& p, std::span<const int> points)
{
    for (int v : points)
        if (p(v) != v)
            return false;
    return true;
}

class Searcher {
public:
    explicit Searcher(const SmallGraph& g) : g_(g), n_(g.size()) {}

    void run()
    {
        Cells cells = initial_cells(g_);
        std::vector<VertexSet> queue(cells.cell.begin(), cells.cell.begin() + cells.count);
        search(cells, queue);
    }

    std::vector<int> best_order() const { return best_order_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    mpz_class group_order() const
    {
        mpz_class order = 1;
        for (std::size_t k = 0; k < first_path_.size(); ++k) {
            std::span<const int> prefix(first_path_.data(), k);
            OrbitPartition orbits(n_);
            for (const auto& p : gens_)
                if (fixes_pointwise(p, prefix))
                    orbits.absorb(p);
            int root = orbits.find(first_path_[k]);
            long size = 0;
            for (int v = 0; v < n_; ++v)
                if (orbits.find(v) == root)
                    ++size;
            order *= size;
        }
        return order;
    }

private:
    int search(Cells cells, std::vector<VertexSet>& queue)
    {
        refine(g_, cells, queue);
        if (cells.discrete(n_))
            return leaf(cells);

        int target = 0;
        while (std::popcount(cells.cell[target]) == 1)
            ++target;
        VertexSet cell = cells.cell[target];
        int depth = static_cast<int>(path_.size());

        std::vector<int> explored;
        for (VertexSet s = cell; s; s &= s - 1) {
            int w = lowest(s);
            if (!explored.empty() && equivalent_to_explored(w, explored))
                continue;

            Cells child = cells;
            VertexSet single = VertexSet{1} << w;
            for (int k = child.count - 1; k > target; --k)
                child.cell[k + 1] = child.cell[k];
            child.cell[target] = single;
            child.cell[target + 1] = cell & ~single;
            ++child.count;

            std::vector<VertexSet> child_queue{single};
            path_.push_back(w);
            int jump = search(child, child_queue);
            path_.pop_back();
            explored.push_back(w);
            if (jump < depth)
                return jump;
        }
        return no_jump;
    }

    bool equivalent_to_explored(int w, const std::vector<int>& explored)
    {
        OrbitPartition orbits(n_);
        bool any = false;
        for (const auto& p : gens_)
            if (fixes_pointwise(p, path_)) {
                orbits.absorb(p);
                any = true;
            }
        if (!any)
            return false;
        int root = orbits.find(w);
        return std::any_of(explored.begin(), explored.end(), [&](int e) { return orbits.find(e) == root; });
    }

    std::vector<VertexSet> key_of(const std::vector<int>& order) const
    {
        std::vector<VertexSet> key(n_);
        for (int i = 0; i < n_; ++i) {
            VertexSet row = 0;
            VertexSet nb = g_.neighbours(order[i]);
            for (int j = 0; j < n_; ++j)
                if ((nb >> order[j]) & 1u)
                    row |= VertexSet{1} << (SmallGraph::max_vertices - 1 - j);
            key[i] = row;
        }
        return key;
    }

    // Automorphism mapping `from_order[i]` to `to_order[i]`; returns the jump
    // depth when it provably maps the stored path's subtree onto the current
    // one, otherwise no_jump.
    int record_automorphism(const std::vector<int>& from_order, const std::vector<int>& from_path,
                            const std::vector<int>& to_order)
    {
        std::vector<int> image(n_);
        for (int i = 0; i < n_; ++i)
            image[from_order[i]] = to_order[i];
        Permutation gamma(std::move(image));
        if (gamma.is_identity())
            return no_jump;
        gens_.push_back(gamma);

        std::size_t k = 0;
        while (k < path_.size() && k < from_path.size() && path_[k] == from_path[k])
            ++k;
        for (std::size_t i = 0; i < k; ++i)
            if (gamma(path_[i]) != path_[i])
                return no_jump;
        if (k < path_.size() && k < from_path.size() && gamma(from_path[k]) != path_[k])
            return no_jump;
        return static_cast<int>(k);
    }

    int leaf(const Cells& cells)
    {
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i)
            order[i] = lowest(cells.cell[i]);
        auto key = key_of(order);

        if (!have_first_) {
            have_first_ = true;
            first_order_ = best_order_ = order;
            first_key_ = best_key_ = key;
            first_path_ = best_path_ = path_;
            return no_jump;
        }
        if (key == first_key_)
            return record_automorphism(first_order_, first_path_, order);
        if (key == best_key_)
            return record_automorphism(best_order_, best_path_, order);
        if (key > best_key_) {
            best_order_ = order;
            best_key_ = std::move(key);
            best_path_ = path_;
        }
        return no_jump;
    }

    const SmallGraph& g_;
    int n_;
    bool have_first_ = false;
    std::vector<int> first_order_, best_order_;
    std::vector<VertexSet> first_key_, best_key_;
    std::vector<int> first_path_, best_path_;
    std::vector<int> path_;
    std::vector<Permutation> gens_;
};

}  // namespace

std::vector<VertexSet> equitable_refinement(const SmallGraph& g, std::vector<VertexSet> cells_in)
{
    Cells cells;
    for (auto c : cells_in)
        if (c)
            cells.cell[cells.count++] = c;
    std::vector<VertexSet> queue(cells.cell.begin(), cells.cell.begin() + cells.count);
    refine(g, cells, queue);
    return {cells.cell.begin(), cells.cell.begin() + cells.count};
}

CanonicalLabelling canonical_labelling(const SmallGraph& g)
{
    CanonicalLabelling out;
    if (g.size() == 0) {
        out.canonical = g;
        out.automorphisms = AutGroup(0, {}, 1);
        return out;
    }
    Searcher searcher(g);
    searcher.run();
    out.order = searcher.best_order();
    out.canonical = g.reordered(out.order);
    out.automorphisms = AutGroup(g.size(), searcher.generators(), searcher.group_order());
    return out;
}

SmallGraph canonical_form(const SmallGraph& g) { return canonical_labelling(g).canonical; }

AutGroup aut_group(const SmallGraph& g) { return canonical_labelling(g).automorphisms; }

VertexPair canonical_last_edge(const CanonicalLabelling& labelling)
{
    const auto& c = labelling.canonical;
    for (int u = c.size() - 1; u >= 0; --u) {
        VertexSet higher = c.neighbours(u) & ~((VertexSet{2} << u) - 1);
        if (higher) {
            int v = 63 - std::countl_zero(higher);
            return ordered(labelling.order[u], labelling.order[v]);
        }
    }
    throw GraphError("canonical_last_edge: graph has no edges");
}

bool is_canonical_augmentation(const CanonicalLabelling& labelling, VertexPair e)
{
    e = ordered(e.first, e.second);
    auto last = canonical_last_edge(labelling);
    if (last == e)
        return true;
    auto orbit = labelling.automorphisms.pair_orbit(last);
    return std::binary_search(orbit.begin(), orbit.end(), e);
}

bool is_canonical_augmentation(const SmallGraph& y, VertexPair e)
{
    if (!y.adjacent(e.first, e.second))
        throw GraphError("is_canonical_augmentation: e is not an edge of y");
    return is_canonical_augmentation(canonical_labelling(y), e);
}

std::vector<VertexPair> orbit_representatives(const SmallGraph& g, std::span<const VertexPair> items)
{
    return orbit_representatives(aut_group(g), items);
}

}  // namespace lvcert
