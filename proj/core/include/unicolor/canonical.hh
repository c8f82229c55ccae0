#ifndef UNICOLOR_CANONICAL_HH
#define UNICOLOR_CANONICAL_HH 1

#include <unicolor/graph.hh>

#include <string>
#include <vector>

namespace unicolor
{
    inline constexpr int max_canonical_order = 32;

    /// An ordered partition of the vertex set into non-empty cells.
    using OrderedPartition = std::vector<VertexSet>;

    /**
     * Refine an ordered partition until it is equitable: every vertex of a
     * cell has the same number of neighbours in every other cell. Cells are
     * split in place, fragments ordered by ascending neighbour count, so the
     * result commutes with relabelling.
     */
    auto refine_equitable(const Graph & g, OrderedPartition & cells) -> void;

    /// Equitable refinement of the single-cell partition.
    auto equitable_partition(const Graph & g) -> OrderedPartition;

    struct CanonicalLabelling
    {
        /// labelling[i] is the vertex placed at position i of the canonical graph.
        std::vector<int> labelling;
        Graph canonical_graph;
        /// Generators of the automorphism group, as vertex maps.
        std::vector<std::vector<int>> generators;
        /// orbits[v] is the smallest vertex in the automorphism orbit of v.
        std::vector<int> orbits;
        long search_nodes = 0;
    };

    /**
     * Canonical labelling by individualisation-refinement, pruned by the
     * automorphisms discovered on the way. Works on any order up to 64; the
     * public canonical_form applies the stricter 32-vertex cap.
     */
    auto canonical_labelling(const Graph & g) -> CanonicalLabelling;

    /// graph6 of the canonically labelled graph. Throws OrderOverflow above 32 vertices.
    auto canonical_form(const Graph & g) -> std::string;

    auto is_isomorphic(const Graph & g1, const Graph & g2) -> bool;

    /// Union-find orbits of the group generated by the given permutations.
    auto orbits_of(int n, const std::vector<std::vector<int>> & generators) -> std::vector<int>;
}

#endif
