#include <unicolor/canonical.hh>
#include <unicolor/errors.hh>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

using namespace unicolor;

using std::uint64_t;
using std::vector;

namespace
{
    auto refine_with(const Graph & g, OrderedPartition & cells, std::deque<VertexSet> & queue) -> void
    {
        int counts[max_order];
        while (! queue.empty()) {
            VertexSet splitter = queue.front();
            queue.pop_front();

            for (std::size_t i = 0 ; i < cells.size() ; ++i) {
                VertexSet cell = cells[i];
                if (cell.size() == 1)
                    continue;

                int lowest = max_order + 1, highest = -1;
                cell.for_each([&] (int v) {
                    counts[v] = (g.neighbours(v) & splitter).size();
                    lowest = std::min(lowest, counts[v]);
                    highest = std::max(highest, counts[v]);
                });
                if (lowest == highest)
                    continue;

                vector<VertexSet> fragments;
                for (int c = lowest ; c <= highest ; ++c) {
                    VertexSet fragment;
                    cell.for_each([&] (int v) { if (counts[v] == c) fragment.insert(v); });
                    if (! fragment.empty())
                        fragments.push_back(fragment);
                }

                cells[i] = fragments[0];
                cells.insert(cells.begin() + i + 1, fragments.begin() + 1, fragments.end());
                for (auto & f : fragments)
                    queue.push_back(f);
                i += fragments.size() - 1;
            }
        }
    }
}

auto unicolor::refine_equitable(const Graph & g, OrderedPartition & cells) -> void
{
    std::deque<VertexSet> queue(cells.begin(), cells.end());
    refine_with(g, cells, queue);
}

auto unicolor::equitable_partition(const Graph & g) -> OrderedPartition
{
    OrderedPartition cells;
    if (g.order() > 0)
        cells.push_back(g.vertices());
    refine_equitable(g, cells);
    return cells;
}

auto unicolor::orbits_of(int n, const vector<vector<int>> & generators) -> vector<int>
{
    vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&] (int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto & gen : generators)
        for (int v = 0 ; v < n ; ++v) {
            int a = find(v), b = find(gen[v]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    vector<int> result(n);
    for (int v = 0 ; v < n ; ++v)
        result[v] = find(v);
    return result;
}

namespace
{
    constexpr int no_jump = -1;

    struct Leaf
    {
        vector<int> labelling;
        vector<uint64_t> rows;
    };

    class Searcher
    {
        private:
            const Graph & _g;
            int _n;
            vector<int> _prefix;
            bool _have_leaf = false;
            Leaf _first, _best;

        public:
            vector<vector<int>> generators;
            long nodes = 0;

            explicit Searcher(const Graph & g) : _g(g), _n(g.order()) { }

            auto best() const -> const Leaf & { return _best; }

            auto make_leaf(const OrderedPartition & cells) const -> Leaf
            {
                Leaf leaf;
                leaf.labelling.resize(_n);
                vector<int> position(_n);
                for (int i = 0 ; i < _n ; ++i) {
                    leaf.labelling[i] = cells[i].first();
                    position[leaf.labelling[i]] = i;
                }
                leaf.rows.resize(_n);
                for (int i = 0 ; i < _n ; ++i) {
                    uint64_t row = 0;
                    _g.neighbours(leaf.labelling[i]).for_each([&] (int w) { row |= uint64_t{ 1 } << position[w]; });
                    leaf.rows[i] = row;
                }
                return leaf;
            }

            auto record_automorphism(const Leaf & from, const Leaf & to) -> void
            {
                vector<int> gamma(_n);
                bool identity = true;
                for (int i = 0 ; i < _n ; ++i) {
                    gamma[from.labelling[i]] = to.labelling[i];
                    identity = identity && from.labelling[i] == to.labelling[i];
                }
                if (! identity)
                    generators.push_back(std::move(gamma));
            }

            // Orbits of the subgroup found so far that fixes the first-path prefix of the given length.
            auto stabiliser_orbits(int level) const -> vector<int>
            {
                vector<vector<int>> fixing;
                for (auto & gen : generators) {
                    bool fixes = true;
                    for (int i = 0 ; i < level && fixes ; ++i)
                        fixes = gen[_prefix[i]] == _prefix[i];
                    if (fixes)
                        fixing.push_back(gen);
                }
                return orbits_of(_n, fixing);
            }

            auto explore(const OrderedPartition & cells, int level, bool on_first_path, int divergence) -> int
            {
                ++nodes;

                auto target = std::find_if(cells.begin(), cells.end(), [] (VertexSet c) { return c.size() > 1; });
                if (target == cells.end()) {
                    Leaf leaf = make_leaf(cells);
                    if (! _have_leaf) {
                        _have_leaf = true;
                        _first = leaf;
                        _best = std::move(leaf);
                        return no_jump;
                    }
                    if (leaf.rows == _first.rows) {
                        record_automorphism(_first, leaf);
                        return on_first_path ? no_jump : divergence;
                    }
                    if (leaf.rows == _best.rows)
                        record_automorphism(_best, leaf);
                    else if (leaf.rows < _best.rows)
                        _best = std::move(leaf);
                    return no_jump;
                }

                auto target_index = target - cells.begin();
                VertexSet target_cell = *target;
                vector<int> explored;
                bool first_child = true;

                for (int v : target_cell.members()) {
                    if (on_first_path && ! explored.empty()) {
                        auto orbits = stabiliser_orbits(level);
                        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                [&] (int u) { return orbits[u] == orbits[v]; });
                        if (equivalent)
                            continue;
                    }
                    explored.push_back(v);

                    OrderedPartition child = cells;
                    child[target_index] = VertexSet::singleton(v);
                    child.insert(child.begin() + target_index + 1, target_cell - VertexSet::singleton(v));
                    std::deque<VertexSet> queue{ VertexSet::singleton(v) };
                    refine_with(_g, child, queue);

                    bool child_on_first_path = on_first_path && first_child;
                    first_child = false;
                    if (child_on_first_path)
                        _prefix.push_back(v);

                    int jump = explore(child, level + 1, child_on_first_path, on_first_path ? level : divergence);
                    if (jump != no_jump && jump < level)
                        return jump;
                }

                return no_jump;
            }
    };
}

auto unicolor::canonical_labelling(const Graph & g) -> CanonicalLabelling
{
    CanonicalLabelling result;
    int n = g.order();
    if (n == 0) {
        result.canonical_graph = g;
        return result;
    }

    Searcher searcher(g);
    searcher.explore(equitable_partition(g), 0, true, 0);

    result.labelling = searcher.best().labelling;
    vector<int> position(n);
    for (int i = 0 ; i < n ; ++i)
        position[result.labelling[i]] = i;
    result.canonical_graph = g.permuted(position);
    result.generators = std::move(searcher.generators);
    result.orbits = orbits_of(n, result.generators);
    result.search_nodes = searcher.nodes;
    return result;
}

auto unicolor::canonical_form(const Graph & g) -> std::string
{
    if (g.order() > max_canonical_order)
        throw OrderOverflow{ "canonical form supports at most " + std::to_string(max_canonical_order) + " vertices" };
    return emit_graph6(canonical_labelling(g).canonical_graph);
}

auto unicolor::is_isomorphic(const Graph & g1, const Graph & g2) -> bool
{
    if (g1.order() > max_canonical_order || g2.order() > max_canonical_order)
        throw OrderOverflow{ "isomorphism test supports at most " + std::to_string(max_canonical_order) + " vertices" };
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
        return false;
    return canonical_form(g1) == canonical_form(g2);
}
