#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oracles/brute_force.hh>
#include <oracles/corpus.hh>

#include <unicolor/canonical.hh>
#include <unicolor/colouring.hh>
#include <unicolor/constructions.hh>
#include <unicolor/errors.hh>

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <random>

using namespace unicolor;

namespace
{
    /// Degree of every vertex of nu(h), from the three cases of the construction.
    auto expected_nu_degree(const ColouredGraph & h, int index) -> int
    {
        int n = h.graph.order(), k = h.colouring.class_count();
        int v = index % n, copy = index / n;
        int d = h.graph.degree(v);
        if (copy == 0)
            return (k + 1) * d;
        if (copy == h.colouring.class_of(v) + 1)
            return 2 * d + k - 1;
        return 2 * d + 1;
    }

    /// The clique and minimum-degree identities need a uniquely colourable seed.
    auto check_nu_identities(const ColouredGraph & h, bool unique_seed) -> void
    {
        int n = h.graph.order(), k = h.colouring.class_count();
        auto g = nu(h);
        CHECK(g.graph.order() == (k + 1) * n);
        CHECK(g.graph.edge_count() == (3 * k + 1) * h.graph.edge_count() + (k - 1) * n);
        CHECK(g.colouring.class_count() == k + 1);
        CHECK(is_proper(g.graph, g.colouring));
        CHECK(g.graph.induced(VertexSet::range(n)) == h.graph);
        if (unique_seed) {
            CHECK(clique_number(g.graph) == clique_number(h.graph) + 1);
            CHECK(g.graph.min_degree() == 2 * h.graph.min_degree() + 1);
        }
        for (int v = 0 ; v < g.graph.order() ; ++v)
            CHECK(g.graph.degree(v) == expected_nu_degree(h, v));

        auto sizes = g.colouring.class_sizes();
        std::vector<int> expected_sizes;
        for (auto s : h.colouring.class_sizes())
            expected_sizes.push_back(k * s);
        expected_sizes.push_back(n);
        std::sort(sizes.begin(), sizes.end());
        std::sort(expected_sizes.begin(), expected_sizes.end());
        CHECK(sizes == expected_sizes);

        // The new class is exactly the star centres.
        for (int v = 0 ; v < n ; ++v) {
            int centre = n * (h.colouring.class_of(v) + 1) + v;
            CHECK(g.colouring.class_of(centre) == g.colouring.class_of(n * (h.colouring.class_of(0) + 1)));
        }
    }
}

TEST_CASE("nu on K3")
{
    auto g = nu(catalog_graph("K3"));
    CHECK(g.graph.order() == 12);
    CHECK(g.graph.edge_count() == 36);
    CHECK(clique_number(g.graph) == 4);
    CHECK(g.colouring.class_sizes() == std::vector<int>{ 3, 3, 3, 3 });
    CHECK(chi_cr(g.graph) == Rational::make(4, 1));
    CHECK(is_uniquely_k_colourable(g.graph, 4));
    CHECK(iterate_nu(catalog_graph("K3"), 1).graph == g.graph);
    CHECK(iterate_nu(catalog_graph("K3"), 0).graph == complete_graph(3));
}

TEST_CASE("nu on K1 is two isolated vertices")
{
    auto g = nu(catalog_graph("K1"));
    CHECK(g.graph.order() == 2);
    CHECK(g.graph.edge_count() == 0);
    CHECK(g.colouring.class_count() == 2);
}

TEST_CASE("nu on the first witness graph")
{
    auto g = nu(catalog_graph("figure1a"));
    CHECK(g.graph.order() == 48);
    CHECK(g.graph.edge_count() == 244);
    CHECK(clique_number(g.graph) == 3);
    CHECK(g.colouring.class_sizes() == std::vector<int>{ 12, 12, 12, 12 });
    CHECK(is_proper(g.graph, g.colouring));
    CHECK_THROWS_AS(iterate_nu(catalog_graph("figure1a"), 2), OrderOverflow);
    CHECK_THROWS_AS(nu(make_coloured(empty_graph(33), Colouring(std::vector<int>(33, 0)))), OrderOverflow);
}

TEST_CASE("nu rejects improper colourings")
{
    ColouredGraph bad{ complete_graph(2), Colouring(std::vector<int>{ 0, 0 }) };
    CHECK_THROWS_AS(nu(bad), InvalidColouring);
    CHECK_THROWS_AS(make_coloured(complete_graph(2), Colouring(std::vector<int>{ 0, 0 })), InvalidColouring);
    CHECK_THROWS_AS(make_coloured(complete_graph(2), Colouring(std::vector<int>{ 0 })), InvalidColouring);
}

TEST_CASE("nu identities on the seed corpus")
{
    for (auto & seed : corpus::seeds()) {
        CAPTURE(seed.name);
        check_nu_identities(seed.coloured, true);
    }
    std::mt19937_64 rng(71);
    for (int i = 0 ; i < 100 ; ++i) {
        // any proper colouring is accepted
        auto c = corpus::planted_partition(rng, 1 + i % 4, 1 + i % 9, 0.4);
        check_nu_identities(c, false);
    }
}

TEST_CASE("nu preserves unique colourability from three classes up")
{
    for (auto & seed : corpus::seeds()) {
        CAPTURE(seed.name);
        if (seed.coloured.graph.order() * (seed.k + 1) > 44)
            continue;
        auto g = nu(seed.coloured);
        bool unique = is_uniquely_k_colourable(g.graph, seed.k + 1);
        if (seed.k >= 3)
            CHECK(unique);
        else
            MESSAGE("nu of " << seed.name << " (k = 2) uniquely 3-colourable: " << unique);
        auto h_cr = chi_cr(seed.coloured.graph);
        if (h_cr && *h_cr == Rational::make(seed.k, 1))
            CHECK(chi_cr(g.graph) == Rational::make(seed.k + 1, 1));
    }
}

TEST_CASE("extension by one vertex")
{
    auto diamond = extend_uniquely(catalog_graph("K3"), 0);
    CHECK(diamond.graph.order() == 4);
    CHECK(diamond.graph.edge_count() == 5);
    CHECK(diamond.colouring.class_sizes() == std::vector<int>{ 2, 1, 1 });
    CHECK(! diamond.graph.adjacent(0, 3));
    CHECK(diamond.colouring.class_of(3) == diamond.colouring.class_of(0));
    CHECK(is_uniquely_k_colourable(diamond.graph, 3));
    CHECK_THROWS_AS(extend_uniquely(catalog_graph("K3"), 3), std::invalid_argument);

    auto balanced = catalog_graph("K3");
    for (int step = 0 ; step < 3 ; ++step) {
        auto sizes = balanced.colouring.class_sizes();
        int smallest = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
        balanced = extend_uniquely(balanced, smallest);
    }
    CHECK(balanced.graph.order() == 6);
    CHECK(balanced.colouring.class_sizes() == std::vector<int>{ 2, 2, 2 });
    CHECK(is_uniquely_k_colourable(balanced.graph, 3));
    CHECK(corpus::oracle_unique(balanced.graph, 3));
    CHECK(clique_number(balanced.graph) == 3);

    std::mt19937_64 rng(73);
    for (int i = 0 ; i < 30 ; ++i) {
        auto c = corpus::random_extension(rng, 3 + i % 2, 1 + i % 5);
        CHECK(is_uniquely_k_colourable(c.graph, 3 + i % 2));
        if (c.graph.order() <= 9)
            CHECK(corpus::oracle_unique(c.graph, 3 + i % 2));
    }
}

TEST_CASE("independent transversal step on paths")
{
    auto p6 = catalog_graph("P6");
    auto m = independent_transversals(p6);
    CHECK(m == std::vector<std::vector<int>>{ { 0, 2, 5 }, { 0, 3, 5 } });
    auto step = nesetril_step(p6);
    CHECK(step.graph.order() == 8);
    CHECK(step.colouring.class_count() == 3);
    CHECK(is_proper(step.graph, step.colouring));
    CHECK(! step.graph.adjacent(6, 7));
    CHECK(step.graph.neighbours(6) == (VertexSet::singleton(0) | VertexSet::singleton(2) | VertexSet::singleton(5)));

    CHECK_THROWS_AS(nesetril_step(catalog_graph("P4")), std::domain_error);

    for (int n : { 6, 8, 10, 12 }) {
        auto p = catalog_graph("P" + std::to_string(n));
        std::vector<int> class_of(p.colouring.assignment().begin(), p.colouring.assignment().end());
        long expected = oracle::independent_transversals(p.graph, class_of, 2, 3);
        CHECK(static_cast<long>(independent_transversals(p).size()) == expected);
        MESSAGE("P" << n << ": " << expected << " transversals, ratio to n^3 " << double(expected) / (n * n * n));
        if (n + expected > 64) {
            CHECK_THROWS_AS(nesetril_step(p), OrderOverflow);
            continue;
        }
        auto next = nesetril_step(p);
        CHECK(next.graph.order() - n == expected);
        CHECK(next.colouring.class_sizes().back() == expected);
        CHECK(is_proper(next.graph, next.colouring));
        CHECK(chromatic_number(next.graph) <= 3);
    }
}

TEST_CASE("sampler")
{
    SamplerConfig cfg;
    cfg.k = 3;
    cfg.part_size = 4;
    cfg.epsilon = 0.2;
    CHECK(sampler_edge_count(cfg) == 16);
    auto g = bollobas_sauer_sample(cfg);
    CHECK(g.edge_count() == 16);

    cfg.girth = 3;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.epsilon = 0.05;
    CHECK_NOTHROW(validate(cfg));
    cfg.girth = 4;
    cfg.epsilon = 1.0 / 16;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.epsilon = 0.06;
    CHECK_NOTHROW(validate(cfg));
    cfg.part_size = 30;
    CHECK_THROWS(validate(cfg));

    for (int i = 0 ; i < 100 ; ++i) {
        SamplerConfig c;
        c.k = 3;
        c.part_size = 3 + i % 6;
        c.girth = 4;
        c.epsilon = 0.05;
        c.seed = 1000 + i;
        auto a = bollobas_sauer_sample(c);
        CHECK(sampler_edge_count(c) == static_cast<long>(std::floor(3.0 * std::pow(c.part_size, 1.05) + 0.5)));
        CHECK(a.edge_count() == sampler_edge_count(c));
        for (int u = 0 ; u < a.order() ; ++u)
            for (int v = u + 1 ; v < a.order() ; ++v)
                if (u / c.part_size == v / c.part_size)
                    CHECK(! a.adjacent(u, v));
        CHECK(bollobas_sauer_sample(c) == a);
        auto cleaned = remove_short_cycles(a, 4);
        CHECK(cleaned.graph.edge_count() == a.edge_count() - cleaned.removed);
        CHECK(girth(cleaned.graph).value_or(1000) >= 4);
    }
    SamplerConfig a, b;
    b.seed = 1;
    CHECK(bollobas_sauer_sample(a) != bollobas_sauer_sample(b));
}

TEST_CASE("short cycle removal")
{
    auto p3 = remove_short_cycles(complete_graph(3), 4);
    CHECK(p3.removed == 1);
    CHECK(p3.graph.edge_count() == 2);
    CHECK(! p3.graph.adjacent(0, 1));

    auto c5 = remove_short_cycles(cycle_graph(5), 4);
    CHECK(c5.removed == 0);
    CHECK(c5.graph == cycle_graph(5));

    auto k4 = remove_short_cycles(complete_graph(4), 4);
    CHECK(k4.removed >= 3);
    CHECK(girth(k4.graph).value_or(1000) >= 4);

    std::mt19937_64 rng(79);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = oracle::random_graph(rng, 4 + i % 12, 0.4);
        int target = 3 + i % 4;
        auto r = remove_short_cycles(g, target);
        int gg = oracle::girth(r.graph);
        CHECK((gg == 0 || gg >= target));
        CHECK(r.graph.edge_count() + r.removed == g.edge_count());
    }
    CHECK_THROWS_AS(remove_short_cycles(complete_graph(3), 2), std::invalid_argument);
}

TEST_CASE("witness catalog")
{
    auto entries = figure1_graphs();
    REQUIRE(entries.size() == 3u);
    std::vector<int> edge_counts;
    for (auto & entry : entries) {
        auto & g = entry.coloured.graph;
        edge_counts.push_back(g.edge_count());
        CHECK(g.order() == 12);
        CHECK(is_triangle_free(g));
        CHECK(is_uniquely_k_colourable(g, 3));
        CHECK(count_colour_partitions(g, 3, 1000) == 1);
        CHECK(*find_colouring(g, 3) == entry.coloured.colouring);
        CHECK(chi_cr(g) == Rational::make(3, 1));
    }
    CHECK(edge_counts == std::vector<int>{ 22, 23, 23 });
    for (int i = 0 ; i < 3 ; ++i)
        for (int j = i + 1 ; j < 3 ; ++j)
            CHECK(! is_isomorphic(entries[i].coloured.graph, entries[j].coloured.graph));
}

TEST_CASE("builtin names")
{
    CHECK(catalog_graph("K5").graph == complete_graph(5));
    CHECK(catalog_graph("P7").graph == path_graph(7));
    CHECK(catalog_graph("C9").colouring.class_count() == 3);
    CHECK_THROWS_AS(catalog_graph("K9"), std::out_of_range);
    CHECK_THROWS_AS(catalog_graph("nonsense"), std::out_of_range);
    for (auto & name : catalog_names()) {
        auto c = catalog_graph(name);
        CHECK(is_proper(c.graph, c.colouring));
        CHECK(c.colouring.class_count() == chromatic_number(c.graph));
    }
}

TEST_CASE("catalog manifest agrees with the builtins")
{
    std::ifstream in{ UNICOLOR_DATA_DIR "/catalog.json" };
    REQUIRE(in);
    auto manifest = nlohmann::json::parse(in);
    REQUIRE(manifest.at("graphs").size() == catalog_names().size());
    for (auto & item : manifest.at("graphs")) {
        std::string name = item.at("name");
        CAPTURE(name);
        auto c = catalog_graph(name);
        auto g = parse_graph6(item.at("graph6").get<std::string>());
        CHECK(g == c.graph);
        std::vector<std::vector<int>> classes;
        for (auto & cls : c.colouring.classes())
            classes.push_back(cls.members());
        CHECK(item.at("colouring") == nlohmann::json(classes));
        auto & expect = item.at("expected");
        CHECK(expect.at("order") == g.order());
        CHECK(expect.at("edges") == g.edge_count());
        CHECK(expect.at("chromatic_number") == chromatic_number(g));
        CHECK(expect.at("clique_number") == clique_number(g));
        CHECK(expect.at("triangle_free") == is_triangle_free(g));
        CHECK(expect.at("uniquely_colourable") == is_uniquely_k_colourable(g, chromatic_number(g)));
        if (chromatic_number(g) >= 2) {
            CHECK(expect.at("sigma") == *sigma(g));
            CHECK(expect.at("chi_cr") == chi_cr(g)->to_string());
        }
    }
}
