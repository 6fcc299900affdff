#include <doctest.h>

#include "test_support.hpp"

#include <lvcert/graph/canon.hpp>
#include <lvcert/localview/catalogue_io.hpp>
#include <lvcert/oracle/oracles.hpp>

#include <set>
#include <sstream>

using namespace lvcert;

namespace {

SmallGraph complete(int n)
{
    SmallGraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

int count_role(const SmallGraph& g, Role role) { return std::popcount(g.vertices_with_role(role)); }

}  // namespace

TEST_CASE("inner graph counts")
{
    CHECK(generate_inner_graphs(1).size() == 1);
    CHECK(generate_inner_graphs(2).size() == 2);
    for (int d = 3; d <= 5; ++d)
        CHECK(generate_inner_graphs(d).size() == oracle::brute_inner_graphs(d, oracle::rf_canonical_form).size());
    CHECK(generate_inner_graphs(3).size() == 4);
    CHECK(generate_inner_graphs(4).size() == 11);
    CHECK(generate_inner_graphs(6).size() == oracle::brute_inner_graphs(6, canonical_form).size());
    CHECK_THROWS(generate_inner_graphs(7));
}

TEST_CASE("inner graphs are pairwise non-isomorphic")
{
    auto graphs = generate_inner_graphs(5);
    std::set<SmallGraph> forms;
    for (const auto& g : graphs)
        forms.insert(canonical_form(g));
    CHECK(forms.size() == graphs.size());
}

TEST_CASE("simple representation skeletons")
{
    auto empty = build_simple_representation(4, SmallGraph(4));
    CHECK(count_role(empty, Role::Boundary) == 12);
    CHECK(count_role(empty, Role::Colour) == 12);
    CHECK(empty.size() == 29);
    for (int u = 1; u <= 4; ++u)
        CHECK(empty.degree(u) == 4);

    SmallGraph one_edge(4);
    one_edge.add_edge(0, 1);
    CHECK(count_role(build_simple_representation(4, one_edge), Role::Boundary) == 10);

    SmallGraph single(2);
    single.add_edge(0, 1);
    auto d2 = build_simple_representation(2, single);
    CHECK(count_role(d2, Role::Boundary) == 0);
    CHECK(d2.size() == 3);

    SmallGraph star(4);
    for (int v = 1; v < 4; ++v)
        star.add_edge(0, v);
    CHECK_NOTHROW(build_simple_representation(4, star));
    CHECK_THROWS_AS(build_simple_representation(3, star), InvalidInner);
}

TEST_CASE("colouring generation examples")
{
    auto d2 = build_simple_representation(2, SmallGraph(2));
    CHECK(count_role(d2, Role::Boundary) == 2);
    CHECK(generate_colourings(d2).size() == 2);

    SmallGraph single(2);
    single.add_edge(0, 1);
    auto bare = build_simple_representation(2, single);
    auto out = generate_colourings(bare);
    REQUIRE(out.size() == 1);
    CHECK(out.front() == bare);

    auto coloured = generate_colourings(build_simple_representation(4, SmallGraph(4)));
    CHECK(coloured.size() == 1636);
    for (const auto& g : coloured)
        for (VertexSet s = g.vertices_with_role(Role::Boundary); s; s &= s - 1)
            CHECK(std::popcount(g.neighbours(std::countr_zero(s)) & g.vertices_with_role(Role::Colour)) == 1);
}

TEST_CASE("catalogues for d = 2 and d = 3 match brute force")
{
    const auto& c2 = testing::catalogue(2);
    CHECK(c2.views.size() == 3);
    for (int d : {2, 3}) {
        const auto& cat = testing::catalogue(d);
        std::set<SmallGraph> generated;
        for (const auto& v : cat.views)
            generated.insert(v.rep);
        CHECK(generated.size() == cat.views.size());
        auto brute = oracle::brute_catalogue_forms(d, canonical_form);
        CHECK(std::set<SmallGraph>(brute.begin(), brute.end()) == generated);
    }
    std::set<SmallGraph> rf_generated;
    for (const auto& v : c2.views)
        rf_generated.insert(oracle::rf_canonical_form(v.rep));
    auto rf_brute = oracle::brute_catalogue_forms(2, oracle::rf_canonical_form);
    CHECK(std::set<SmallGraph>(rf_brute.begin(), rf_brute.end()) == rf_generated);
}

TEST_CASE("catalogue members are canonical with initial-segment colours")
{
    for (int d : {2, 3}) {
        const auto& cat = testing::catalogue(d);
        for (const auto& v : cat.views) {
            CHECK(canonical_form(v.rep) == v.rep);
            std::set<int> colours;
            for (std::size_t u = 0; u < v.mults.size(); ++u) {
                CHECK(static_cast<int>(v.mults[u].size()) == d - 1 - v.inner_degree(static_cast<int>(u) + 1));
                colours.insert(v.mults[u].begin(), v.mults[u].end());
            }
            CHECK(static_cast<int>(colours.size()) == v.colour_count);
            if (!colours.empty()) {
                CHECK(*colours.begin() == 1);
                CHECK(*colours.rbegin() == v.colour_count);
            }
            CHECK(v.colour_count <= d * (d - 1));
        }
    }
}

TEST_CASE("local views read off regular graphs")
{
    auto k5 = complete(5);
    std::vector<int> none(5, 0);
    auto view = local_view_of(k5, 2, none);
    CHECK(view.inner_edges.size() == 6);
    CHECK(view.boundary_size() == 0);
    CHECK(view == make_local_view(4, std::vector<VertexPair>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                                  std::vector<std::vector<int>>(4)));

    SmallGraph k44(8);
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 8; ++b)
            k44.add_edge(a, b);
    std::vector<int> colours{0, 7, 7, 7, 0, 0, 0, 0};
    auto bip = local_view_of(k44, 0, colours);
    CHECK(bip.inner_edges.empty());
    for (const auto& m : bip.mults)
        CHECK(m == std::vector<int>{1, 1, 1});

    SmallGraph c6(6);
    for (int i = 0; i < 6; ++i)
        c6.add_edge(i, (i + 1) % 6);
    std::vector<int> alternating{0, 0, 1, 0, 2, 0};
    auto cyc = local_view_of(c6, 0, alternating);
    CHECK(cyc.inner_edges.empty());
    CHECK(cyc.colour_count == 2);
    CHECK(cyc.mults_text() == "[1|2]");

    SmallGraph irregular(3);
    irregular.add_edge(0, 1);
    CHECK_THROWS_AS(local_view_of(irregular, 0, none), NotRegular);
}

TEST_CASE("random regular graphs only produce catalogue views")
{
    std::mt19937 rng(17);
    for (int d : {3, 4}) {
        const auto& cat = testing::catalogue(d);
        for (int trial = 0; trial < 15; ++trial) {
            int n = d == 3 ? 10 + 2 * (trial % 4) : 9 + trial % 5;
            auto g = testing::random_regular(rng, n, d);
            std::uniform_int_distribution<int> colour(1, 2 + trial % 6);
            std::vector<int> col(n);
            for (auto& c : col)
                c = colour(rng);
            for (int v = 0; v < n; ++v)
                CHECK(cat.find(local_view_of(g, v, col)) >= 0);
        }
    }
}

TEST_CASE("d = 4 catalogue size and strata")
{
    const auto& cat = testing::catalogue(4);
    CHECK(cat.views.size() == 3529);
    int triangle_free = 0;
    std::set<std::string> hashes;
    for (const auto& v : cat.views) {
        if (v.inner_edges.empty())
            ++triangle_free;
        hashes.insert(v.inner_text() + "/" + v.mults_text());
    }
    CHECK(triangle_free == 1636);
    CHECK(cat.views.size() - triangle_free == 3529 - 1636);
    CHECK(hashes.size() == cat.views.size());
    CHECK(generate_catalogue(4, 3).hash == cat.hash);
}

TEST_CASE("catalogue file round trip and tamper detection")
{
    const auto& cat = testing::catalogue(3);
    std::ostringstream out;
    write_catalogue(out, cat);
    std::string text = out.str();
    CHECK(text.rfind("LVC1 d=3 count=" + std::to_string(cat.views.size()) + " hash=" + cat.hash, 0) == 0);
    std::istringstream in(text);
    auto back = read_catalogue(in);
    CHECK(back.hash == cat.hash);
    REQUIRE(back.views.size() == cat.views.size());
    for (std::size_t i = 0; i < cat.views.size(); ++i)
        CHECK(back.views[i] == cat.views[i]);

    auto tampered = text;
    tampered[tampered.find("mults: [1") + 8] = '2';
    std::istringstream bad(tampered);
    CHECK_THROWS_AS(read_catalogue(bad), CatalogueError);
}
