#ifndef UNICOLOR_GRAPH_HH
#define UNICOLOR_GRAPH_HH 1

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unicolor
{
    inline constexpr int max_order = 64;

    /**
     * A set of vertex indices in 0..63, stored as one machine word.
     */
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            constexpr VertexSet() = default;
            constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) { }

            static constexpr auto singleton(int v) -> VertexSet { return VertexSet{ std::uint64_t{ 1 } << v }; }

            /// The set {0, ..., n - 1}.
            static constexpr auto range(int n) -> VertexSet
            {
                return VertexSet{ n >= 64 ? ~std::uint64_t{ 0 } : (std::uint64_t{ 1 } << n) - 1 };
            }

            constexpr auto bits() const noexcept -> std::uint64_t { return _bits; }
            constexpr auto contains(int v) const noexcept -> bool { return (_bits >> v) & 1; }
            constexpr auto empty() const noexcept -> bool { return _bits == 0; }
            constexpr auto size() const noexcept -> int { return std::popcount(_bits); }
            constexpr auto first() const noexcept -> int { return std::countr_zero(_bits); }

            constexpr auto insert(int v) noexcept -> void { _bits |= std::uint64_t{ 1 } << v; }
            constexpr auto erase(int v) noexcept -> void { _bits &= ~(std::uint64_t{ 1 } << v); }

            constexpr auto operator| (VertexSet o) const noexcept -> VertexSet { return VertexSet{ _bits | o._bits }; }
            constexpr auto operator& (VertexSet o) const noexcept -> VertexSet { return VertexSet{ _bits & o._bits }; }
            constexpr auto operator- (VertexSet o) const noexcept -> VertexSet { return VertexSet{ _bits & ~o._bits }; }
            constexpr auto operator|= (VertexSet o) noexcept -> VertexSet & { _bits |= o._bits; return *this; }
            constexpr auto operator&= (VertexSet o) noexcept -> VertexSet & { _bits &= o._bits; return *this; }
            constexpr auto operator-= (VertexSet o) noexcept -> VertexSet & { _bits &= ~o._bits; return *this; }
            constexpr auto operator== (const VertexSet &) const -> bool = default;

            /// Ascending list of members.
            auto members() const -> std::vector<int>;

            template <typename F_>
            constexpr auto for_each(F_ && f) const -> void
            {
                for (auto b = _bits ; b ; b &= b - 1)
                    f(std::countr_zero(b));
            }
    };

    /**
     * Simple undirected graph on at most 64 vertices, one adjacency word per
     * vertex. Rows are kept symmetric and loop-free.
     */
    class Graph
    {
        private:
            int _order = 0;
            std::array<std::uint64_t, max_order> _rows{ };

        public:
            Graph() = default;

            /// Throws OrderOverflow if order is outside 0..64.
            explicit Graph(int order);

            auto order() const noexcept -> int { return _order; }
            auto vertices() const noexcept -> VertexSet { return VertexSet::range(_order); }

            auto adjacent(int u, int v) const noexcept -> bool { return (_rows[u] >> v) & 1; }
            auto neighbours(int v) const noexcept -> VertexSet { return VertexSet{ _rows[v] }; }
            auto degree(int v) const noexcept -> int { return std::popcount(_rows[v]); }

            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;

            auto edge_count() const noexcept -> int;
            auto min_degree() const noexcept -> int;
            auto max_degree() const noexcept -> int;

            /// Edges as (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<std::pair<int, int>>;

            /// Subgraph induced on the given vertices, relabelled in ascending order.
            auto induced(VertexSet s) const -> Graph;

            /// Graph with vertex v renamed to perm[v].
            auto permuted(std::span<const int> perm) const -> Graph;

            /// Adds one vertex adjacent to the given set; throws OrderOverflow at 64.
            auto with_vertex(VertexSet neighbourhood) const -> Graph;

            auto is_independent(VertexSet s) const noexcept -> bool;
            auto is_clique(VertexSet s) const noexcept -> bool;

            auto operator== (const Graph & other) const -> bool;
    };

    auto parse_graph6(std::string_view text) -> Graph;
    auto emit_graph6(const Graph & g) -> std::string;

    /// Graphviz rendering; when class_of is given, classes become fill colours.
    auto to_dot(const Graph & g, std::span<const int> class_of = { }) -> std::string;

    auto complete_graph(int k) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph;
    auto complete_join(const Graph & g1, const Graph & g2) -> Graph;

    /// Length of a shortest cycle, or nullopt for forests.
    auto girth(const Graph & g) -> std::optional<int>;

    /// Vertices of some shortest cycle, in cycle order, found by BFS from the
    /// smallest root attaining the girth; empty for forests.
    auto shortest_cycle(const Graph & g) -> std::vector<int>;

    auto clique_number(const Graph & g) -> int;
    auto is_triangle_free(const Graph & g) noexcept -> bool;

    auto is_connected(const Graph & g) -> bool;

    /// Vertices reachable from start inside the allowed set.
    auto component_of(const Graph & g, int start, VertexSet allowed) -> VertexSet;

    /// Whether g is t-connected: order above t and no separator of fewer than t vertices.
    auto vertex_connectivity_at_least(const Graph & g, int t) -> bool;
}

#endif
