#include <unicolor/graph.hh>
#include <unicolor/errors.hh>

#include <algorithm>
#include <queue>
#include <sstream>

using namespace unicolor;

using std::string;
using std::uint64_t;
using std::vector;

auto VertexSet::members() const -> vector<int>
{
    vector<int> result;
    result.reserve(size());
    for_each([&] (int v) { result.push_back(v); });
    return result;
}

Graph::Graph(int order) :
    _order(order)
{
    if (order < 0 || order > max_order)
        throw OrderOverflow{ "graph order " + std::to_string(order) + " outside 0.." + std::to_string(max_order) };
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u == v || u < 0 || v < 0 || u >= _order || v >= _order)
        throw std::invalid_argument{ "bad edge " + std::to_string(u) + "-" + std::to_string(v) };
    _rows[u] |= uint64_t{ 1 } << v;
    _rows[v] |= uint64_t{ 1 } << u;
}

auto Graph::remove_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= _order || v >= _order)
        throw std::invalid_argument{ "bad edge " + std::to_string(u) + "-" + std::to_string(v) };
    _rows[u] &= ~(uint64_t{ 1 } << v);
    _rows[v] &= ~(uint64_t{ 1 } << u);
}

auto Graph::edge_count() const noexcept -> int
{
    int total = 0;
    for (int v = 0 ; v < _order ; ++v)
        total += std::popcount(_rows[v]);
    return total / 2;
}

auto Graph::min_degree() const noexcept -> int
{
    int result = _order == 0 ? 0 : max_order;
    for (int v = 0 ; v < _order ; ++v)
        result = std::min(result, degree(v));
    return result;
}

auto Graph::max_degree() const noexcept -> int
{
    int result = 0;
    for (int v = 0 ; v < _order ; ++v)
        result = std::max(result, degree(v));
    return result;
}

auto Graph::edges() const -> vector<std::pair<int, int>>
{
    vector<std::pair<int, int>> result;
    for (int u = 0 ; u < _order ; ++u)
        for (uint64_t b = _rows[u] & ~((uint64_t{ 2 } << u) - 1) ; b ; b &= b - 1)
            result.emplace_back(u, std::countr_zero(b));
    return result;
}

auto Graph::induced(VertexSet s) const -> Graph
{
    auto keep = s.members();
    Graph result(static_cast<int>(keep.size()));
    for (unsigned i = 0 ; i < keep.size() ; ++i)
        for (unsigned j = i + 1 ; j < keep.size() ; ++j)
            if (adjacent(keep[i], keep[j]))
                result.add_edge(i, j);
    return result;
}

auto Graph::permuted(std::span<const int> perm) const -> Graph
{
    Graph result(_order);
    for (int u = 0 ; u < _order ; ++u) {
        uint64_t row = 0;
        for (uint64_t b = _rows[u] ; b ; b &= b - 1)
            row |= uint64_t{ 1 } << perm[std::countr_zero(b)];
        result._rows[perm[u]] = row;
    }
    return result;
}

auto Graph::with_vertex(VertexSet neighbourhood) const -> Graph
{
    if (_order >= max_order)
        throw OrderOverflow{ "cannot add a vertex to a graph of order 64" };
    Graph result = *this;
    result._order = _order + 1;
    result._rows[_order] = neighbourhood.bits();
    neighbourhood.for_each([&] (int v) { result._rows[v] |= uint64_t{ 1 } << _order; });
    return result;
}

auto Graph::is_independent(VertexSet s) const noexcept -> bool
{
    for (uint64_t b = s.bits() ; b ; b &= b - 1)
        if (_rows[std::countr_zero(b)] & s.bits())
            return false;
    return true;
}

auto Graph::is_clique(VertexSet s) const noexcept -> bool
{
    for (uint64_t b = s.bits() ; b ; b &= b - 1) {
        int v = std::countr_zero(b);
        if (((_rows[v] | (uint64_t{ 1 } << v)) & s.bits()) != s.bits())
            return false;
    }
    return true;
}

auto Graph::operator== (const Graph & other) const -> bool
{
    return _order == other._order && std::equal(_rows.begin(), _rows.begin() + _order, other._rows.begin());
}

namespace
{
    constexpr int graph6_offset = 63;

    auto body_length(int n) -> std::size_t
    {
        std::size_t bits = std::size_t(n) * (n - 1) / 2;
        return (bits + 5) / 6;
    }
}

auto unicolor::parse_graph6(std::string_view text) -> Graph
{
    constexpr std::string_view optional_header = ">>graph6<<";
    if (text.starts_with(optional_header))
        text.remove_prefix(optional_header.size());

    if (text.empty())
        throw GraphParseError{ ParseErrorKind::MalformedHeader, "empty input" };

    auto value = [&] (std::size_t i, ParseErrorKind kind) -> int {
        int c = static_cast<unsigned char>(text[i]);
        if (c < graph6_offset || c > 126)
            throw GraphParseError{ kind, "character " + std::to_string(c) + " at offset " + std::to_string(i) + " outside 63..126" };
        return c - graph6_offset;
    };

    long order = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        order = value(0, ParseErrorKind::MalformedHeader);
        pos = 1;
    }
    else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8)
            throw GraphParseError{ ParseErrorKind::MalformedHeader, "short eight-byte order header" };
        for (std::size_t i = 2 ; i < 8 ; ++i)
            order = (order << 6) | value(i, ParseErrorKind::MalformedHeader);
        if (order <= 258047)
            throw GraphParseError{ ParseErrorKind::MalformedHeader, "non-minimal order header" };
        throw GraphParseError{ ParseErrorKind::OrderTooLarge, "order " + std::to_string(order) + " exceeds " + std::to_string(max_order) };
    }
    else {
        if (text.size() < 4)
            throw GraphParseError{ ParseErrorKind::MalformedHeader, "short four-byte order header" };
        for (std::size_t i = 1 ; i < 4 ; ++i)
            order = (order << 6) | value(i, ParseErrorKind::MalformedHeader);
        if (order < 63)
            throw GraphParseError{ ParseErrorKind::MalformedHeader, "non-minimal order header" };
        pos = 4;
    }

    if (order > max_order)
        throw GraphParseError{ ParseErrorKind::OrderTooLarge, "order " + std::to_string(order) + " exceeds " + std::to_string(max_order) };

    int n = static_cast<int>(order);
    std::size_t expected = body_length(n);
    std::size_t available = text.size() - pos;
    if (available < expected)
        throw GraphParseError{ ParseErrorKind::Truncated, "expected " + std::to_string(expected) + " body bytes, got " + std::to_string(available) };
    if (available > expected)
        throw GraphParseError{ ParseErrorKind::TrailingGarbage, std::to_string(available - expected) + " unexpected trailing bytes" };

    Graph g(n);
    std::size_t bit = 0;
    int chunk = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++bit) {
            if (bit % 6 == 0)
                chunk = value(pos + bit / 6, ParseErrorKind::MalformedBody);
            if ((chunk >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }

    if (bit % 6 != 0) {
        int padding = chunk & ((1 << (6 - bit % 6)) - 1);
        if (padding != 0)
            throw GraphParseError{ ParseErrorKind::MalformedBody, "non-zero padding bits" };
    }

    return g;
}

auto unicolor::emit_graph6(const Graph & g) -> string
{
    int n = g.order();
    string result;
    if (n <= 62)
        result.push_back(static_cast<char>(n + graph6_offset));
    else {
        result.push_back('~');
        for (int shift = 12 ; shift >= 0 ; shift -= 6)
            result.push_back(static_cast<char>(((n >> shift) & 63) + graph6_offset));
    }

    int chunk = 0, filled = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                result.push_back(static_cast<char>(chunk + graph6_offset));
                chunk = filled = 0;
            }
        }
    if (filled != 0)
        result.push_back(static_cast<char>((chunk << (6 - filled)) + graph6_offset));

    return result;
}

auto unicolor::to_dot(const Graph & g, std::span<const int> class_of) -> string
{
    static constexpr const char * palette[] = {
        "green", "red", "blue", "gold", "orchid", "cyan", "orange", "gray",
        "pink", "yellowgreen", "tan", "slateblue"
    };
    constexpr int palette_size = sizeof(palette) / sizeof(palette[0]);

    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle, style=filled, fillcolor=white, label=\"\"];\n";
    for (int v = 0 ; v < g.order() ; ++v) {
        out << "  " << v << " [xlabel=\"" << v << "\"";
        if (! class_of.empty())
            out << ", fillcolor=" << palette[class_of[v] % palette_size] << ", class=" << class_of[v];
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

auto unicolor::complete_graph(int k) -> Graph
{
    if (k < 1 || k > max_order)
        throw OrderOverflow{ "complete graph order " + std::to_string(k) + " outside 1..64" };
    Graph g(k);
    for (int u = 0 ; u < k ; ++u)
        for (int v = u + 1 ; v < k ; ++v)
            g.add_edge(u, v);
    return g;
}

auto unicolor::empty_graph(int n) -> Graph
{
    return Graph(n);
}

auto unicolor::path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto unicolor::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument{ "cycle needs at least three vertices" };
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

auto unicolor::disjoint_union(const Graph & g1, const Graph & g2) -> Graph
{
    int n1 = g1.order();
    if (n1 + g2.order() > max_order)
        throw OrderOverflow{ "disjoint union exceeds 64 vertices" };
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges())
        g.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        g.add_edge(n1 + u, n1 + v);
    return g;
}

auto unicolor::complete_join(const Graph & g1, const Graph & g2) -> Graph
{
    if (g1.order() + g2.order() > max_order)
        throw OrderOverflow{ "complete join exceeds 64 vertices" };
    Graph g = disjoint_union(g1, g2);
    for (int u = 0 ; u < g1.order() ; ++u)
        for (int v = 0 ; v < g2.order() ; ++v)
            g.add_edge(u, g1.order() + v);
    return g;
}

namespace
{
    struct CycleSearch
    {
        int length;
        vector<int> cycle;
    };

    // Shortest closed walk through root formed by two BFS branches and a non-tree edge.
    auto shortest_cycle_through(const Graph & g, int root, int bound) -> std::optional<CycleSearch>
    {
        int n = g.order();
        vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> queue;
        dist[root] = 0;
        queue.push(root);
        int best = bound;
        int best_u = -1, best_w = -1;
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop();
            if (2 * dist[u] + 1 >= best)
                break;
            g.neighbours(u).for_each([&] (int w) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                }
                else if (w != parent[u]) {
                    int length = dist[u] + dist[w] + 1;
                    if (length < best) {
                        best = length;
                        best_u = u;
                        best_w = w;
                    }
                }
            });
        }

        if (best_u == -1)
            return std::nullopt;

        vector<int> left, right;
        for (int x = best_u ; x != -1 ; x = parent[x])
            left.push_back(x);
        for (int x = best_w ; x != -1 ; x = parent[x])
            right.push_back(x);
        // left ends at root; right ends at root too, drop its copy.
        right.pop_back();
        std::reverse(left.begin(), left.end());
        left.insert(left.end(), right.begin(), right.end());
        return CycleSearch{ best, std::move(left) };
    }
}

auto unicolor::shortest_cycle(const Graph & g) -> vector<int>
{
    int bound = g.order() + 1;
    vector<int> result;
    for (int root = 0 ; root < g.order() ; ++root)
        if (auto found = shortest_cycle_through(g, root, bound)) {
            bound = found->length;
            result = std::move(found->cycle);
            if (bound == 3)
                break;
        }
    return result;
}

auto unicolor::girth(const Graph & g) -> std::optional<int>
{
    auto cycle = shortest_cycle(g);
    if (cycle.empty())
        return std::nullopt;
    return static_cast<int>(cycle.size());
}

auto unicolor::is_triangle_free(const Graph & g) noexcept -> bool
{
    for (int u = 0 ; u < g.order() ; ++u) {
        auto nu = g.neighbours(u);
        bool clash = false;
        nu.for_each([&] (int v) { if (v > u && ! (nu & g.neighbours(v)).empty()) clash = true; });
        if (clash)
            return false;
    }
    return true;
}

namespace
{
    // Greedy colouring bound over candidate set p, MCQ style.
    auto expand_clique(const Graph & g, VertexSet p, int size, int & best) -> void
    {
        vector<int> order, bound;
        order.reserve(p.size());
        bound.reserve(p.size());
        VertexSet uncoloured = p;
        int colour = 0;
        while (! uncoloured.empty()) {
            ++colour;
            VertexSet q = uncoloured;
            while (! q.empty()) {
                int v = q.first();
                q.erase(v);
                q -= g.neighbours(v);
                uncoloured.erase(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }

        for (int i = static_cast<int>(order.size()) - 1 ; i >= 0 ; --i) {
            if (size + bound[i] <= best)
                return;
            int v = order[i];
            VertexSet next = p & g.neighbours(v);
            if (next.empty())
                best = std::max(best, size + 1);
            else
                expand_clique(g, next, size + 1, best);
            p.erase(v);
        }
    }
}

auto unicolor::clique_number(const Graph & g) -> int
{
    int best = 0;
    expand_clique(g, g.vertices(), 0, best);
    return best;
}

auto unicolor::component_of(const Graph & g, int start, VertexSet allowed) -> VertexSet
{
    VertexSet seen = VertexSet::singleton(start);
    VertexSet frontier = seen;
    while (! frontier.empty()) {
        VertexSet next;
        frontier.for_each([&] (int v) { next |= g.neighbours(v); });
        next &= allowed;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

auto unicolor::is_connected(const Graph & g) -> bool
{
    if (g.order() == 0)
        return true;
    return component_of(g, 0, g.vertices()) == g.vertices();
}

namespace
{
    // Number of internally vertex-disjoint s-t paths, stopping once limit is reached.
    // Split graph: vertex v becomes in = 2v, out = 2v + 1 joined by a unit arc.
    auto local_connectivity(const Graph & g, int s, int t, int limit) -> int
    {
        int n = g.order();
        int nodes = 2 * n;
        vector<int> capacity(nodes * nodes, 0);
        auto cap = [&] (int a, int b) -> int & { return capacity[a * nodes + b]; };
        for (int v = 0 ; v < n ; ++v)
            cap(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
        for (auto [u, v] : g.edges()) {
            cap(2 * u + 1, 2 * v) = n;
            cap(2 * v + 1, 2 * u) = n;
        }

        int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        vector<int> parent(nodes);
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[source] = source;
            std::queue<int> queue;
            queue.push(source);
            while (! queue.empty() && parent[sink] == -1) {
                int a = queue.front();
                queue.pop();
                for (int b = 0 ; b < nodes ; ++b)
                    if (parent[b] == -1 && cap(a, b) > 0) {
                        parent[b] = a;
                        queue.push(b);
                    }
            }
            if (parent[sink] == -1)
                break;
            for (int b = sink ; b != source ; b = parent[b]) {
                --cap(parent[b], b);
                ++cap(b, parent[b]);
            }
            ++flow;
        }
        return flow;
    }
}

auto unicolor::vertex_connectivity_at_least(const Graph & g, int t) -> bool
{
    if (t < 1)
        throw std::invalid_argument{ "connectivity threshold must be at least 1" };
    int n = g.order();
    if (n <= t)
        return false;

    // Any separator smaller than t misses one of the first t vertices, which is
    // then cut off from some non-neighbour.
    for (int i = 0 ; i < t ; ++i)
        for (int j = 0 ; j < n ; ++j)
            if (j != i && ! g.adjacent(i, j) && local_connectivity(g, i, j, t) < t)
                return false;
    return true;
}
