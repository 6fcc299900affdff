#include <doctest.h>

#include <lvcert/graph/canon.hpp>
#include <lvcert/graph/graph_io.hpp>
#include <lvcert/oracle/oracles.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace lvcert;

namespace {

SmallGraph path(int n, const std::vector<int>& labels)
{
    SmallGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(labels[i], labels[i + 1]);
    return g;
}

SmallGraph star_with_centre(int leaves)
{
    SmallGraph g(leaves + 1);
    g.set_role(0, Role::Centre);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

SmallGraph random_graph(std::mt19937& rng, int n, double density)
{
    SmallGraph g(n);
    const Role roles[] = {Role::Plain, Role::Neighbour, Role::Boundary, Role::Colour};
    std::uniform_int_distribution<int> role(0, 3);
    std::bernoulli_distribution edge(density);
    for (int v = 0; v < n; ++v)
        g.set_role(v, roles[role(rng)]);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng))
                g.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("canonical form examples")
{
    SmallGraph empty(4);
    CHECK(canonical_form(empty) == empty);
    CHECK(canonical_form(path(3, {0, 1, 2})) == canonical_form(path(3, {2, 0, 1})));
    auto star = star_with_centre(4);
    SmallGraph moved(5);
    moved.set_role(3, Role::Centre);
    for (int v : {0, 1, 2, 4})
        moved.add_edge(3, v);
    CHECK(canonical_form(star) == canonical_form(moved));
    CHECK(canonical_form(star).role(0) == Role::Centre);
}

TEST_CASE("roles are never mixed")
{
    SmallGraph a(2), b(2);
    a.add_edge(0, 1);
    b.add_edge(0, 1);
    a.set_role(0, Role::Neighbour);
    b.set_role(0, Role::Boundary);
    CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("automorphism group examples")
{
    CHECK(aut_group(SmallGraph(4)).order() == 24);
    SmallGraph edge(3);
    edge.add_edge(0, 1);
    CHECK(aut_group(edge).order() == 2);
    CHECK(aut_group(star_with_centre(4)).order() == 24);
    auto elements = aut_group(star_with_centre(4)).elements();
    CHECK(elements.size() == 24);
    for (const auto& p : elements)
        CHECK(p.is_automorphism(star_with_centre(4)));
}

TEST_CASE("orbit representatives examples")
{
    auto star = star_with_centre(4);
    CHECK(orbit_representatives(star, star.non_edges()).size() == 1);

    auto p4 = path(4, {0, 1, 2, 3});
    auto items = p4.non_edges();
    auto reps = orbit_representatives(p4, items);
    auto brute = oracle::brute_pair_orbits(p4, items);
    CHECK(reps.size() == brute.size());
    for (const auto& orbit : brute)
        CHECK(std::count(reps.begin(), reps.end(), orbit.front()) == 1);
}

TEST_CASE("orbit representatives on a rigid graph return every item")
{
    SmallGraph h(7);
    for (auto [a, b] : std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}, {1, 3}, {0, 2}})
        h.add_edge(a, b);
    REQUIRE(oracle::brute_aut_order(h) == 1);
    auto items = h.non_edges();
    CHECK(orbit_representatives(h, items).size() == items.size());
}

TEST_CASE("canonical augmentation examples")
{
    SmallGraph single(2);
    single.add_edge(0, 1);
    CHECK(is_canonical_augmentation(single, {0, 1}));

    auto p3 = path(3, {0, 1, 2});
    auto last = canonical_last_edge(canonical_labelling(p3));
    CHECK(is_canonical_augmentation(p3, {1, 2}) == oracle::brute_in_same_orbit(p3, {1, 2}, last));
    CHECK(is_canonical_augmentation(p3, {0, 1}) == oracle::brute_in_same_orbit(p3, {0, 1}, last));

    SmallGraph triangle(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    for (auto e : triangle.edges())
        CHECK(is_canonical_augmentation(triangle, e));
    CHECK_THROWS(is_canonical_augmentation(p3, {0, 2}));
}

TEST_CASE("canonical form is invariant under every role-preserving relabelling")
{
    std::mt19937 rng(3);
    for (int n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto g = random_graph(rng, n, 0.5);
            auto form = canonical_form(g);
            CHECK(canonical_form(form) == form);
            for (const auto& p : oracle::role_preserving_permutations(g))
                REQUIRE(canonical_form(g.relabelled(p.image())) == form);
        }
}

TEST_CASE("automorphism groups agree with exhaustive counts")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + trial % 7;
        auto g = random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.5);
        auto group = aut_group(g);
        CHECK(group.order() == oracle::brute_aut_order(g));
        for (const auto& p : group.generators()) {
            CHECK(p.is_automorphism(g));
            CHECK(p.preserves_roles(g));
        }
        auto items = g.non_edges();
        auto reps = orbit_representatives(group, items);
        CHECK(reps.size() == oracle::brute_pair_orbits(g, items).size());
    }
}

TEST_CASE("isomorphism decisions agree with the Read-Faradzev oracle")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + trial % 4;
        auto g = random_graph(rng, n, 0.5);
        auto h = random_graph(rng, n, 0.5);
        if (g.role_string() != h.role_string())
            continue;
        CHECK((canonical_form(g) == canonical_form(h)) ==
              (oracle::rf_canonical_form(g) == oracle::rf_canonical_form(h)));
    }
}

TEST_CASE("larger graphs: random role-preserving relabellings")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 20 + trial;
        auto g = random_graph(rng, n, trial % 2 ? 0.15 : 0.5);
        auto form = canonical_form(g);
        for (int round = 0; round < 3; ++round) {
            std::vector<int> image(n);
            for (Role role : {Role::Plain, Role::Neighbour, Role::Boundary, Role::Colour}) {
                std::vector<int> members;
                for (int v = 0; v < n; ++v)
                    if (g.role(v) == role)
                        members.push_back(v);
                auto shuffled = members;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                for (std::size_t i = 0; i < members.size(); ++i)
                    image[members[i]] = shuffled[i];
            }
            CHECK(canonical_form(g.relabelled(image)) == form);
        }
    }
}

TEST_CASE("graph text format round trip")
{
    auto star = star_with_centre(3);
    auto text = graph_to_text(star);
    CHECK(text == "n 4\nVPPP\n0 1\n0 2\n0 3\n");
    CHECK(parse_graph(text) == star);
    CHECK_THROWS(parse_graph("n 2\nPP\n0 0\n"));
}
