#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oracles/brute_force.hh>

#include <unicolor/canonical.hh>
#include <unicolor/constructions.hh>
#include <unicolor/errors.hh>

#include <map>
#include <random>
#include <set>

using namespace unicolor;

namespace
{
    auto petersen() -> Graph
    {
        Graph g(10);
        for (int i = 0 ; i < 5 ; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }

    auto is_automorphism(const Graph & g, const std::vector<int> & perm) -> bool
    {
        return g.permuted(perm) == g;
    }
}

TEST_CASE("equitable partition of regular and irregular graphs")
{
    auto cells = equitable_partition(cycle_graph(6));
    CHECK(cells.size() == 1u);
    auto p = equitable_partition(path_graph(5));
    // ends, then their neighbours, then the centre
    CHECK(p.size() == 3u);
    CHECK(p[0] == (VertexSet::singleton(0) | VertexSet::singleton(4)));
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(7);
    for (int i = 0 ; i < 500 ; ++i) {
        int n = 1 + i % 24;
        auto g = oracle::random_graph(rng, n, 0.1 + 0.1 * (i % 8));
        auto h = g.permuted(oracle::random_permutation(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(is_isomorphic(g, h));
    }
    for (auto & g : { petersen(), cycle_graph(12), empty_graph(20), complete_graph(16), figure1_graphs()[0].coloured.graph }) {
        for (int i = 0 ; i < 20 ; ++i)
            CHECK(canonical_form(g) == canonical_form(g.permuted(oracle::random_permutation(rng, g.order()))));
    }
}

TEST_CASE("canonical form separates what brute force separates")
{
    std::mt19937_64 rng(13);
    for (int i = 0 ; i < 3000 ; ++i) {
        int n = 1 + i % 7;
        auto g = oracle::random_graph(rng, n, 0.5);
        auto h = oracle::random_graph(rng, n, 0.5);
        if (g.edge_count() != h.edge_count())
            continue;
        CHECK(is_isomorphic(g, h) == (oracle::canonical_string(g) == oracle::canonical_string(h)));
    }
}

TEST_CASE("isomorphism class counts match labelled enumeration")
{
    auto classes = [] (int n, bool triangle_free) {
        std::set<std::string> ours, theirs;
        std::uint64_t total = std::uint64_t{ 1 } << (n * (n - 1) / 2);
        for (std::uint64_t index = 0 ; index < total ; ++index) {
            auto g = oracle::graph_from_index(n, index);
            if (triangle_free && ! is_triangle_free(g))
                continue;
            ours.insert(canonical_form(g));
            theirs.insert(oracle::canonical_string(g));
        }
        CHECK(ours.size() == theirs.size());
        return ours.size();
    };
    CHECK(classes(4, false) == 11u);
    CHECK(classes(5, true) == 14u);
    CHECK(classes(5, false) == 34u);
    CHECK(classes(6, false) == 156u);
    CHECK(classes(6, true) == 38u);
}

TEST_CASE("small distinctions")
{
    CHECK(! is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(! is_isomorphic(path_graph(4), complete_join(empty_graph(3), complete_graph(1))));
    CHECK(is_isomorphic(Graph(0), Graph(0)));
    CHECK(! is_isomorphic(empty_graph(2), empty_graph(3)));
}

TEST_CASE("orbits match brute-force automorphism orbits")
{
    std::mt19937_64 rng(29);
    std::vector<Graph> graphs{ petersen().induced(VertexSet::range(8)), cycle_graph(7), empty_graph(6), complete_graph(5),
        disjoint_union(cycle_graph(4), cycle_graph(4)), path_graph(8) };
    for (int i = 0 ; i < 300 ; ++i)
        graphs.push_back(oracle::random_graph(rng, 1 + i % 8, 0.2 + 0.1 * (i % 6)));

    for (auto & g : graphs) {
        auto lab = canonical_labelling(g);
        CHECK(lab.orbits == oracle::automorphism_orbits(g));
        for (auto & gen : lab.generators)
            CHECK(is_automorphism(g, gen));
        std::vector<int> position(g.order());
        for (int i = 0 ; i < g.order() ; ++i)
            position[lab.labelling[i]] = i;
        CHECK(lab.canonical_graph == g.permuted(position));
    }
}

TEST_CASE("automorphism generators of symmetric graphs")
{
    auto lab = canonical_labelling(petersen());
    for (int v = 0 ; v < 10 ; ++v)
        CHECK(lab.orbits[v] == 0);
    for (auto & gen : lab.generators)
        CHECK(is_automorphism(petersen(), gen));

    // Every vertex of the empty graph on 64 vertices is equivalent.
    auto big = canonical_labelling(empty_graph(64));
    for (int v = 0 ; v < 64 ; ++v)
        CHECK(big.orbits[v] == 0);
}

TEST_CASE("canonical form rejects large orders")
{
    CHECK_THROWS_AS(canonical_form(empty_graph(33)), OrderOverflow);
    CHECK_THROWS_AS(is_isomorphic(empty_graph(33), empty_graph(33)), OrderOverflow);
    CHECK_NOTHROW(canonical_form(empty_graph(32)));
    CHECK_NOTHROW(canonical_labelling(complete_graph(48)));
}

TEST_CASE("orbits of explicit generators")
{
    auto orbits = orbits_of(6, { { 1, 0, 2, 3, 4, 5 }, { 0, 1, 3, 4, 2, 5 } });
    CHECK(orbits == std::vector<int>{ 0, 0, 2, 2, 2, 5 });
}
