#include <lvcert/localview/generate.hpp>

#include <lvcert/graph/canon.hpp>
#include <lvcert/graph/graph_io.hpp>
#include <lvcert/localview/catalogue_io.hpp>
#include <lvcert/util/parallel.hpp>

#include <algorithm>
#include <mutex>

namespace lvcert {

namespace {

void scan(const SmallGraph& x, const AutGroup& aut_x, std::vector<SmallGraph>& out)
{
    out.push_back(x);
    auto candidates = x.non_edges();
    if (candidates.empty())
        return;
    for (auto e : orbit_representatives(aut_x, candidates)) {
        SmallGraph y = x;
        y.add_edge(e.first, e.second);
        auto labelling = canonical_labelling(y);
        if (is_canonical_augmentation(labelling, e))
            scan(y, labelling.automorphisms, out);
    }
}

void colour(const SmallGraph& x, const AutGroup& aut_x, VertexSet boundary, VertexSet colours,
            std::vector<SmallGraph>& out)
{
    std::vector<VertexPair> candidates;
    for (VertexSet s = boundary; s; s &= s - 1) {
        int b = std::countr_zero(s);
        if (x.neighbours(b) & colours)
            continue;
        for (VertexSet c = colours; c; c &= c - 1)
            candidates.push_back(ordered(b, std::countr_zero(c)));
    }
    if (candidates.empty()) {
        out.push_back(x);
        return;
    }
    for (auto e : orbit_representatives(aut_x, candidates)) {
        SmallGraph y = x;
        y.add_edge(e.first, e.second);
        auto labelling = canonical_labelling(y);
        if (is_canonical_augmentation(labelling, e))
            colour(y, labelling.automorphisms, boundary, colours, out);
    }
}

}  // namespace

std::vector<SmallGraph> generate_inner_graphs(int d)
{
    if (d < 1 || d > 6)
        throw GraphError("generate_inner_graphs: d must be in 1..6");
    SmallGraph empty(d);
    std::vector<SmallGraph> out;
    scan(empty, aut_group(empty), out);
    return out;
}

std::vector<SmallGraph> generate_colourings(const SmallGraph& skeleton)
{
    std::vector<SmallGraph> out;
    colour(skeleton, aut_group(skeleton), skeleton.vertices_with_role(Role::Boundary),
           skeleton.vertices_with_role(Role::Colour), out);
    return out;
}

int Catalogue::find(const LocalView& view) const
{
    for (std::size_t i = 0; i < views.size(); ++i)
        if (views[i].rep == view.rep)
            return static_cast<int>(i);
    return -1;
}

Catalogue assemble_catalogue(int d, std::vector<LocalView> views)
{
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(views.size());
    for (std::size_t i = 0; i < views.size(); ++i)
        keys.emplace_back(graph_to_text(views[i].rep), i);
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        auto ea = views[a.second].inner_edges.size();
        auto eb = views[b.second].inner_edges.size();
        if (ea != eb)
            return ea < eb;
        return a.first < b.first;
    });
    Catalogue cat;
    cat.d = d;
    cat.views.reserve(views.size());
    for (const auto& [key, i] : keys)
        cat.views.push_back(std::move(views[i]));
    cat.hash = catalogue_hash(cat);
    return cat;
}

Catalogue generate_catalogue(int d, int jobs, const std::function<void(const std::string&)>& progress)
{
    if (d < 2 || d > 5)
        throw GraphError("generate_catalogue: d must be in 2..5");
    auto inner_graphs = generate_inner_graphs(d);
    std::vector<std::vector<LocalView>> per_inner(inner_graphs.size());

    std::mutex progress_mutex;
    parallel_for(inner_graphs.size(), jobs, [&](std::size_t i) {
        auto skeleton = build_simple_representation(d, inner_graphs[i]);
        for (const auto& coloured : generate_colourings(skeleton))
            per_inner[i].push_back(local_view_from_representation(coloured));
        if (progress) {
            std::lock_guard lock(progress_mutex);
            progress("inner graph " + std::to_string(i + 1) + "/" + std::to_string(inner_graphs.size()) + " (" +
                     std::to_string(inner_graphs[i].edge_count()) + " edges): " +
                     std::to_string(per_inner[i].size()) + " views");
        }
    });

    std::vector<LocalView> all;
    for (auto& group : per_inner)
        for (auto& view : group)
            all.push_back(std::move(view));
    return assemble_catalogue(d, std::move(all));
}

}  // namespace lvcert
