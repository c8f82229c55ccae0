#ifndef UNICOLOR_CONSTRUCTIONS_HH
#define UNICOLOR_CONSTRUCTIONS_HH 1

#include <unicolor/colouring.hh>
#include <unicolor/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace unicolor
{
    struct ColouredGraph
    {
        Graph graph;
        Colouring colouring;
    };

    /// Throws InvalidColouring unless the colouring covers the graph and is proper.
    auto make_coloured(Graph g, Colouring c) -> ColouredGraph;

    /**
     * The colour-indexed copy construction. For a graph H with proper
     * colouring A_1..A_k (canonical class order), adds copies v^p of every
     * vertex for p = 1..k, with v^p at index n p + v, and the edges
     *
     *   uv             for uv in E(H)
     *   u^p v^p        for uv in E(H)
     *   u v^p, u^p v   for uv in E(H)
     *   v^p v^q        for v in A_p, q != p   (a star centred on v^p)
     *
     * The returned colouring has classes A_i' = {v, v^p : v in A_i, p != i}
     * plus the new class {v^p : v in A_p}. The size, class-size and degree
     * identities are checked on every call; a violation throws std::logic_error.
     */
    auto nu(const ColouredGraph & h) -> ColouredGraph;

    /// nu applied repeatedly; throws OrderOverflow before building anything too large.
    auto iterate_nu(const ColouredGraph & h, int times) -> ColouredGraph;

    /// Adds a vertex adjacent to everything outside the given class, and puts it in that class.
    auto extend_uniquely(const ColouredGraph & h, int class_index) -> ColouredGraph;

    /// Independent sets with one more vertex than there are classes, meeting every class,
    /// as sorted vertex lists in lexicographic order.
    auto independent_transversals(const ColouredGraph & g) -> std::vector<std::vector<int>>;

    /**
     * One round of the iterated independent-transversal construction: a new
     * vertex per independent set of size (classes + 1) meeting every class,
     * adjacent to exactly the members of that set. The new vertices form the
     * new class. Throws std::domain_error when there is no such set.
     */
    auto nesetril_step(const ColouredGraph & g) -> ColouredGraph;

    struct SamplerConfig
    {
        int k = 3;
        int part_size = 4;
        double epsilon = 0.05;
        /// Girth target; when absent, epsilon is only required to lie in (0, 1).
        std::optional<int> girth;
        std::uint64_t seed = 0;
    };

    auto validate(const SamplerConfig & cfg) -> void;

    /// round-half-up of (k choose 2) n^(1 + epsilon).
    auto sampler_edge_count(const SamplerConfig & cfg) -> long;

    /// k parts of part_size consecutive vertices, with sampler_edge_count(cfg)
    /// distinct cross-part edges drawn uniformly without replacement.
    auto bollobas_sauer_sample(const SamplerConfig & cfg) -> Graph;

    struct CycleRemoval
    {
        Graph graph;
        int removed = 0;
    };

    /// Repeatedly deletes the smallest edge of a shortest cycle shorter than girth_target.
    auto remove_short_cycles(const Graph & g, int girth_target) -> CycleRemoval;

    struct CatalogEntry
    {
        std::string name;
        ColouredGraph coloured;
    };

    /// The three 12-vertex triangle-free balanced uniquely 3-colourable witnesses.
    auto figure1_graphs() -> std::vector<CatalogEntry>;

    /// Named builtins: K1..K8, P2..P12, C3..C12, figure1a..c. Throws std::out_of_range.
    auto catalog_graph(const std::string & name) -> ColouredGraph;
    auto catalog_names() -> std::vector<std::string>;
}

#endif
