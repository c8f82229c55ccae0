#include <unicolor/constructions.hh>
#include <unicolor/errors.hh>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace unicolor;

using std::string;
using std::vector;

auto unicolor::make_coloured(Graph g, Colouring c) -> ColouredGraph
{
    if (c.order() != g.order())
        throw InvalidColouring{ "colouring covers " + std::to_string(c.order()) + " vertices, graph has " + std::to_string(g.order()) };
    if (! is_proper(g, c))
        throw InvalidColouring{ "colouring is not proper" };
    return ColouredGraph{ std::move(g), std::move(c) };
}

namespace
{
    auto check(bool condition, const char * what) -> void
    {
        if (! condition)
            throw std::logic_error{ string{ "construction post-condition violated: " } + what };
    }
}

auto unicolor::nu(const ColouredGraph & h) -> ColouredGraph
{
    const Graph & base = h.graph;
    int n = base.order();
    int k = h.colouring.class_count();

    if (h.colouring.order() != n || ! is_proper(base, h.colouring))
        throw InvalidColouring{ "nu needs a proper colouring of the input graph" };
    if ((k + 1) * n > max_order)
        throw OrderOverflow{ "nu of a " + std::to_string(n) + "-vertex " + std::to_string(k) + "-coloured graph has "
            + std::to_string((k + 1) * n) + " vertices" };

    // Copy p of v, for p = 1..k; copy p belongs to class index p - 1.
    auto copy = [n] (int v, int p) { return n * p + v; };

    Graph g((k + 1) * n);
    for (auto [u, v] : base.edges()) {
        g.add_edge(u, v);
        for (int p = 1 ; p <= k ; ++p) {
            g.add_edge(copy(u, p), copy(v, p));
            g.add_edge(u, copy(v, p));
            g.add_edge(copy(u, p), v);
        }
    }
    for (int v = 0 ; v < n ; ++v) {
        int centre = h.colouring.class_of(v) + 1;
        for (int q = 1 ; q <= k ; ++q)
            if (q != centre)
                g.add_edge(copy(v, centre), copy(v, q));
    }

    vector<int> assignment(g.order());
    for (int v = 0 ; v < n ; ++v) {
        int c = h.colouring.class_of(v);
        assignment[v] = c;
        for (int p = 1 ; p <= k ; ++p)
            assignment[copy(v, p)] = (p == c + 1) ? k : c;
    }
    Colouring colouring{ assignment };

    check(g.order() == (k + 1) * n, "|V(G)| = (k + 1) n");
    check(g.edge_count() == (3 * k + 1) * base.edge_count() + (k - 1) * n, "|E(G)| = (3k + 1) |E(H)| + (k - 1) n");
    check(is_proper(g, colouring), "C' is proper");
    if (n > 0) {
        check(colouring.class_count() == k + 1, "C' has k + 1 classes");
        // Classes keep their order because vertex v < n fixes the first appearance of each old class.
        auto old_sizes = h.colouring.class_sizes();
        auto sizes = colouring.class_sizes();
        for (int i = 0 ; i < k ; ++i)
            check(sizes[i] == k * old_sizes[i], "|A_i'| = k |A_i|");
        check(sizes[k] == n, "new class has n vertices");
    }
    for (int v = 0 ; v < n ; ++v) {
        int d = base.degree(v);
        check(g.degree(v) == (k + 1) * d, "d(v) = (k + 1) d_H(v)");
        for (int p = 1 ; p <= k ; ++p) {
            int expected = (p == h.colouring.class_of(v) + 1) ? 2 * d + k - 1 : 2 * d + 1;
            check(g.degree(copy(v, p)) == expected, "copy degree formula");
        }
    }

    return ColouredGraph{ std::move(g), std::move(colouring) };
}

auto unicolor::iterate_nu(const ColouredGraph & h, int times) -> ColouredGraph
{
    if (times < 0)
        throw std::invalid_argument{ "iteration count must be non-negative" };

    long order = h.graph.order();
    long k = h.colouring.class_count();
    for (int i = 0 ; i < times ; ++i) {
        order *= k + 1;
        ++k;
        if (order > max_order)
            throw OrderOverflow{ std::to_string(times) + " iterations of nu reach " + std::to_string(order) + " vertices" };
    }

    ColouredGraph result = h;
    for (int i = 0 ; i < times ; ++i)
        result = nu(result);
    return result;
}

auto unicolor::extend_uniquely(const ColouredGraph & h, int class_index) -> ColouredGraph
{
    if (class_index < 0 || class_index >= h.colouring.class_count())
        throw std::invalid_argument{ "class index " + std::to_string(class_index) + " out of range" };

    VertexSet outside = h.graph.vertices() - h.colouring.classes()[class_index];
    Graph g = h.graph.with_vertex(outside);

    vector<int> assignment(h.colouring.assignment().begin(), h.colouring.assignment().end());
    assignment.push_back(class_index);
    return ColouredGraph{ std::move(g), Colouring{ assignment } };
}

auto unicolor::independent_transversals(const ColouredGraph & g) -> vector<vector<int>>
{
    int size = g.colouring.class_count() + 1;
    int n = g.graph.order();
    vector<vector<int>> result;
    vector<int> chosen;

    auto extend = [&] (auto & self, int next, VertexSet used_classes) -> void {
        if (static_cast<int>(chosen.size()) == size) {
            if (used_classes.size() == g.colouring.class_count())
                result.push_back(chosen);
            return;
        }
        for (int v = next ; v < n ; ++v) {
            bool independent = std::none_of(chosen.begin(), chosen.end(), [&] (int u) { return g.graph.adjacent(u, v); });
            if (! independent)
                continue;
            chosen.push_back(v);
            VertexSet with = used_classes;
            with.insert(g.colouring.class_of(v));
            self(self, v + 1, with);
            chosen.pop_back();
        }
    };
    extend(extend, 0, VertexSet{ });
    return result;
}

auto unicolor::nesetril_step(const ColouredGraph & g) -> ColouredGraph
{
    if (! is_proper(g.graph, g.colouring))
        throw InvalidColouring{ "nesetril_step needs a proper colouring" };

    auto transversals = independent_transversals(g);
    if (transversals.empty())
        throw std::domain_error{ "no independent transversals" };
    long order = g.graph.order() + static_cast<long>(transversals.size());
    if (order > max_order)
        throw OrderOverflow{ "step would add " + std::to_string(transversals.size()) + " vertices, reaching " + std::to_string(order) };

    Graph result = g.graph;
    vector<int> assignment(g.colouring.assignment().begin(), g.colouring.assignment().end());
    int new_class = g.colouring.class_count();
    for (auto & set : transversals) {
        VertexSet members;
        for (int v : set)
            members.insert(v);
        result = result.with_vertex(members);
        assignment.push_back(new_class);
    }
    return ColouredGraph{ std::move(result), Colouring{ assignment } };
}

auto unicolor::validate(const SamplerConfig & cfg) -> void
{
    if (cfg.k < 1 || cfg.part_size < 1)
        throw std::invalid_argument{ "sampler needs k >= 1 and part size >= 1" };
    if (long(cfg.k) * cfg.part_size > max_order)
        throw OrderOverflow{ "sampler order " + std::to_string(long(cfg.k) * cfg.part_size) + " exceeds 64" };
    if (cfg.girth && *cfg.girth < 3)
        throw std::invalid_argument{ "girth target must be at least 3" };
    double upper = cfg.girth ? 1.0 / (4.0 * *cfg.girth) : 1.0;
    if (! (cfg.epsilon > 0.0 && cfg.epsilon < upper))
        throw std::invalid_argument{ "epsilon must lie strictly between 0 and " + std::to_string(upper) };
}

auto unicolor::sampler_edge_count(const SamplerConfig & cfg) -> long
{
    validate(cfg);
    double pairs = cfg.k * (cfg.k - 1) / 2.0;
    return static_cast<long>(std::floor(pairs * std::pow(double(cfg.part_size), 1.0 + cfg.epsilon) + 0.5));
}

namespace
{
    // Unbiased draw in [0, bound), independent of the standard library's distributions.
    auto bounded(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
    {
        std::uint64_t threshold = (-bound) % bound;
        while (true) {
            std::uint64_t r = rng();
            if (r >= threshold)
                return r % bound;
        }
    }
}

auto unicolor::bollobas_sauer_sample(const SamplerConfig & cfg) -> Graph
{
    long m = sampler_edge_count(cfg);
    int n = cfg.part_size;
    Graph g(cfg.k * n);

    vector<std::pair<int, int>> slots;
    for (int u = 0 ; u < g.order() ; ++u)
        for (int v = u + 1 ; v < g.order() ; ++v)
            if (u / n != v / n)
                slots.emplace_back(u, v);

    if (m > static_cast<long>(slots.size()))
        throw std::domain_error{ "too many edges: " + std::to_string(m) + " requested, " + std::to_string(slots.size()) + " slots" };

    std::mt19937_64 rng(cfg.seed);
    for (long i = 0 ; i < m ; ++i) {
        auto j = i + static_cast<long>(bounded(rng, slots.size() - i));
        std::swap(slots[i], slots[j]);
        g.add_edge(slots[i].first, slots[i].second);
    }
    return g;
}

auto unicolor::remove_short_cycles(const Graph & g, int girth_target) -> CycleRemoval
{
    if (girth_target < 3)
        throw std::invalid_argument{ "girth target must be at least 3" };

    CycleRemoval result{ g, 0 };
    while (true) {
        auto cycle = shortest_cycle(result.graph);
        if (cycle.empty() || static_cast<int>(cycle.size()) >= girth_target)
            break;

        std::pair<int, int> smallest{ max_order, max_order };
        for (std::size_t i = 0 ; i < cycle.size() ; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            smallest = std::min(smallest, std::pair{ std::min(a, b), std::max(a, b) });
        }
        result.graph.remove_edge(smallest.first, smallest.second);
        ++result.removed;
    }
    return result;
}

namespace
{
    // Vertices 0..7 are the rim v0..v7, then a = 8, b = 9, c = 10, d = 11.
    auto figure1_base() -> Graph
    {
        Graph g(12);
        for (int i = 0 ; i < 8 ; ++i)
            g.add_edge(i, (i + 1) % 8);
        for (int i = 0 ; i < 4 ; ++i)
            g.add_edge(i, i + 4);
        for (auto [u, v] : { std::pair{ 8, 1 }, { 8, 7 }, { 9, 0 }, { 9, 6 }, { 10, 5 }, { 10, 3 }, { 11, 2 },
                             { 11, 8 }, { 10, 9 }, { 10, 11 } })
            g.add_edge(u, v);
        return g;
    }

    auto figure1_colouring() -> Colouring
    {
        // {v2, v5, a, b}, {v1, v4, v7, c}, {v0, v3, v6, d}
        vector<int> assignment{ 2, 1, 0, 2, 1, 0, 2, 1, 0, 0, 1, 2 };
        return Colouring{ assignment };
    }
}

auto unicolor::figure1_graphs() -> vector<CatalogEntry>
{
    Graph a = figure1_base();
    Graph b = a, c = a;
    b.add_edge(11, 4);
    c.add_edge(8, 4);
    return {
        { "figure1a", make_coloured(a, figure1_colouring()) },
        { "figure1b", make_coloured(b, figure1_colouring()) },
        { "figure1c", make_coloured(c, figure1_colouring()) }
    };
}

auto unicolor::catalog_names() -> vector<string>
{
    vector<string> names;
    for (int k = 1 ; k <= 8 ; ++k)
        names.push_back("K" + std::to_string(k));
    for (int n = 2 ; n <= 12 ; ++n)
        names.push_back("P" + std::to_string(n));
    for (int n = 3 ; n <= 12 ; ++n)
        names.push_back("C" + std::to_string(n));
    for (auto & entry : figure1_graphs())
        names.push_back(entry.name);
    return names;
}

auto unicolor::catalog_graph(const string & name) -> ColouredGraph
{
    for (auto & entry : figure1_graphs())
        if (entry.name == name)
            return entry.coloured;

    auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::out_of_range{ "unknown catalog graph '" + name + "'" };

    int size = std::stoi(name.substr(1));
    Graph g;
    switch (name[0]) {
        case 'K': g = complete_graph(size); break;
        case 'P': g = path_graph(size); break;
        default:  g = cycle_graph(size); break;
    }
    return make_coloured(g, optimal_colouring(g));
}
