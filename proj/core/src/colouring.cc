#include <unicolor/colouring.hh>
#include <unicolor/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

using namespace unicolor;

using std::uint64_t;
using std::vector;

Colouring::Colouring(std::span<const int> assignment) :
    _class_of(assignment.size())
{
    std::map<int, int> relabel;
    for (std::size_t v = 0 ; v < assignment.size() ; ++v) {
        if (assignment[v] < 0)
            throw InvalidColouring{ "vertex " + std::to_string(v) + " has no class" };
        auto [it, inserted] = relabel.try_emplace(assignment[v], _class_count);
        if (inserted)
            ++_class_count;
        _class_of[v] = it->second;
    }
}

auto Colouring::from_classes(int order, std::span<const VertexSet> classes) -> Colouring
{
    vector<int> assignment(order, -1);
    for (std::size_t i = 0 ; i < classes.size() ; ++i)
        classes[i].for_each([&] (int v) {
            if (v >= order || assignment[v] != -1)
                throw InvalidColouring{ "classes do not partition 0.." + std::to_string(order - 1) };
            assignment[v] = static_cast<int>(i);
        });
    return Colouring{ assignment };
}

auto Colouring::classes() const -> vector<VertexSet>
{
    vector<VertexSet> result(_class_count);
    for (int v = 0 ; v < order() ; ++v)
        result[_class_of[v]].insert(v);
    return result;
}

auto Colouring::class_sizes() const -> vector<int>
{
    vector<int> result(_class_count, 0);
    for (int c : _class_of)
        ++result[c];
    return result;
}

auto unicolor::is_proper(const Graph & g, const Colouring & c) -> bool
{
    if (c.order() != g.order())
        return false;
    for (auto & cls : c.classes())
        if (! g.is_independent(cls))
            return false;
    return true;
}

auto Rational::make(std::int64_t numerator, std::int64_t denominator) -> Rational
{
    if (denominator == 0)
        throw std::domain_error{ "zero denominator" };
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    auto d = std::gcd(numerator, denominator);
    return Rational{ numerator / d, denominator / d };
}

auto Rational::operator<=> (const Rational & other) const -> std::strong_ordering
{
    return numerator * other.denominator <=> other.numerator * denominator;
}

auto Rational::to_string() const -> std::string
{
    if (denominator == 1)
        return std::to_string(numerator);
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

namespace
{
    class PartitionSearch
    {
        private:
            const Graph & _g;
            int _n, _k;
            const std::function<auto (std::span<const int>, int) -> bool> & _visit;
            long _budget;

            int _class_of[max_order];
            uint64_t _forbidden[max_order];
            int _degree[max_order];
            int _open = 0;
            VertexSet _uncoloured;

        public:
            long nodes = 0;
            SearchOutcome outcome = SearchOutcome::Complete;

            PartitionSearch(const Graph & g, int k, const std::function<auto (std::span<const int>, int) -> bool> & visit, long budget) :
                _g(g), _n(g.order()), _k(k), _visit(visit), _budget(budget), _uncoloured(g.vertices())
            {
                for (int v = 0 ; v < _n ; ++v) {
                    _class_of[v] = -1;
                    _forbidden[v] = 0;
                    _degree[v] = g.degree(v);
                }
            }

            auto select() const -> int
            {
                int best = -1, best_saturation = -1, best_degree = -1;
                _uncoloured.for_each([&] (int v) {
                    int saturation = std::popcount(_forbidden[v]);
                    if (saturation > best_saturation || (saturation == best_saturation && _degree[v] > best_degree)) {
                        best = v;
                        best_saturation = saturation;
                        best_degree = _degree[v];
                    }
                });
                return best;
            }

            auto search() -> bool
            {
                if (_budget != unlimited && ++nodes > _budget) {
                    outcome = SearchOutcome::BudgetExhausted;
                    return false;
                }
                else if (_budget == unlimited)
                    ++nodes;

                if (_uncoloured.empty()) {
                    if (! _visit(std::span<const int>(_class_of, _n), _open)) {
                        outcome = SearchOutcome::Stopped;
                        return false;
                    }
                    return true;
                }

                int v = select();
                uint64_t open_mask = _open >= 64 ? ~uint64_t{ 0 } : (uint64_t{ 1 } << _open) - 1;
                uint64_t domain = ~_forbidden[v] & open_mask;
                if (_open < _k)
                    domain |= uint64_t{ 1 } << _open;

                VertexSet uncoloured_neighbours = _g.neighbours(v) & _uncoloured;
                _uncoloured.erase(v);

                for ( ; domain ; domain &= domain - 1) {
                    int c = std::countr_zero(domain);
                    uint64_t bit = uint64_t{ 1 } << c;
                    bool opened = c == _open;
                    if (opened)
                        ++_open;
                    _class_of[v] = c;

                    VertexSet touched;
                    bool wiped_out = false;
                    uncoloured_neighbours.for_each([&] (int u) {
                        if (! (_forbidden[u] & bit)) {
                            _forbidden[u] |= bit;
                            touched.insert(u);
                            if (std::popcount(_forbidden[u]) >= _k)
                                wiped_out = true;
                        }
                    });

                    bool keep_going = wiped_out || search();

                    touched.for_each([&] (int u) { _forbidden[u] &= ~bit; });
                    _class_of[v] = -1;
                    if (opened)
                        --_open;

                    if (! keep_going) {
                        _uncoloured.insert(v);
                        return false;
                    }
                }

                _uncoloured.insert(v);
                return true;
            }
    };
}

auto unicolor::for_each_partition(
        const Graph & g,
        int max_classes,
        const std::function<auto (std::span<const int>, int) -> bool> & visit,
        long node_budget,
        long * nodes_used) -> SearchOutcome
{
    if (max_classes < 1 && g.order() > 0) {
        if (nodes_used)
            *nodes_used = 0;
        return SearchOutcome::Complete;
    }

    PartitionSearch search(g, std::min(max_classes, max_order), visit, node_budget);
    search.search();
    if (nodes_used)
        *nodes_used = search.nodes;
    return search.outcome;
}

auto unicolor::count_partitions(const Graph & g, int k, long cap, long node_budget) -> PartitionCount
{
    PartitionCount result;
    auto outcome = for_each_partition(g, k, [&] (std::span<const int>, int) {
            ++result.count;
            return result.count < cap;
        }, node_budget);
    result.capped = outcome == SearchOutcome::Stopped;
    result.budget_exhausted = outcome == SearchOutcome::BudgetExhausted;
    return result;
}

auto unicolor::count_colour_partitions(const Graph & g, int k, long cap) -> long
{
    return count_partitions(g, k, cap).count;
}

auto unicolor::find_colouring(const Graph & g, int k) -> std::optional<Colouring>
{
    std::optional<Colouring> result;
    for_each_partition(g, k, [&] (std::span<const int> class_of, int) {
            result = Colouring{ class_of };
            return false;
        });
    return result;
}

auto unicolor::dsatur_colouring(const Graph & g) -> Colouring
{
    int n = g.order();
    vector<int> class_of(n, -1);
    vector<uint64_t> seen(n, 0);
    VertexSet uncoloured = g.vertices();
    while (! uncoloured.empty()) {
        int best = -1, best_saturation = -1, best_degree = -1;
        uncoloured.for_each([&] (int v) {
            int saturation = std::popcount(seen[v]);
            int degree = (g.neighbours(v) & uncoloured).size();
            if (saturation > best_saturation || (saturation == best_saturation && degree > best_degree)) {
                best = v;
                best_saturation = saturation;
                best_degree = degree;
            }
        });
        int c = std::countr_zero(~seen[best]);
        class_of[best] = c;
        uncoloured.erase(best);
        g.neighbours(best).for_each([&] (int u) { seen[u] |= uint64_t{ 1 } << c; });
    }
    return Colouring{ class_of };
}

auto unicolor::chromatic_number(const Graph & g) -> int
{
    if (g.order() == 0)
        return 0;
    int upper = dsatur_colouring(g).class_count();
    for (int k = clique_number(g) ; k < upper ; ++k)
        if (find_colouring(g, k))
            return k;
    return upper;
}

auto unicolor::optimal_colouring(const Graph & g) -> Colouring
{
    auto result = find_colouring(g, chromatic_number(g));
    return *result;
}

auto unicolor::sees_every_other_class(const Graph & g, const Colouring & c) -> bool
{
    auto classes = c.classes();
    for (int v = 0 ; v < g.order() ; ++v)
        for (int i = 0 ; i < c.class_count() ; ++i)
            if (i != c.class_of(v) && (g.neighbours(v) & classes[i]).empty())
                return false;
    return true;
}

auto unicolor::two_class_connected(const Graph & g, const Colouring & c) -> bool
{
    auto classes = c.classes();
    for (std::size_t a = 0 ; a < classes.size() ; ++a)
        for (std::size_t b = a + 1 ; b < classes.size() ; ++b) {
            VertexSet both = classes[a] | classes[b];
            if (component_of(g, both.first(), both) != both)
                return false;
        }
    return true;
}

auto unicolor::is_uniquely_k_colourable(const Graph & g, int k) -> bool
{
    if (g.order() == 0 || k < 1)
        return false;

    auto found = find_colouring(g, k);
    if (! found || found->class_count() != k)
        return false;

    // If the colouring is unique, the one just found is it and must pass these.
    if (k >= 2) {
        if (g.min_degree() < k - 1 || ! is_connected(g))
            return false;
        if (! sees_every_other_class(g, *found) || ! two_class_connected(g, *found))
            return false;
    }

    return count_partitions(g, k, 2).count == 1;
}

auto unicolor::optimal_partition_stats(const Graph & g, long node_budget) -> std::optional<OptimalPartitionStats>
{
    OptimalPartitionStats stats;
    if (g.order() == 0) {
        stats.partitions = 1;
        return stats;
    }
    stats.chromatic_number = chromatic_number(g);
    stats.smallest_class = g.order();
    int chi = stats.chromatic_number;

    vector<int> sizes(std::max(chi, 1));
    auto outcome = for_each_partition(g, chi, [&] (std::span<const int> class_of, int classes) {
            std::fill(sizes.begin(), sizes.end(), 0);
            for (int c : class_of)
                ++sizes[c];
            auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.begin() + classes);
            ++stats.partitions;
            stats.smallest_class = std::min(stats.smallest_class, *lo);
            if (*lo != *hi)
                stats.all_balanced = false;
            return true;
        }, node_budget);

    if (outcome == SearchOutcome::BudgetExhausted)
        return std::nullopt;
    return stats;
}

auto unicolor::sigma(const Graph & g, long node_budget) -> std::optional<int>
{
    if (auto stats = optimal_partition_stats(g, node_budget))
        return stats->smallest_class;
    return std::nullopt;
}

auto unicolor::chi_cr(const Graph & g, long node_budget) -> std::optional<Rational>
{
    auto stats = optimal_partition_stats(g, node_budget);
    if (! stats)
        return std::nullopt;
    if (stats->chromatic_number <= 1)
        throw std::domain_error{ "critical chromatic number undefined for graphs without edges" };
    std::int64_t n = g.order();
    return Rational::make((stats->chromatic_number - 1) * n, n - stats->smallest_class);
}

auto unicolor::kempe_change(const Graph & g, const Colouring & c, int class_a, int class_b, int seed) -> Colouring
{
    if (class_a == class_b)
        throw std::invalid_argument{ "Kempe change needs two distinct classes" };
    if (class_a < 0 || class_b < 0 || class_a >= c.class_count() || class_b >= c.class_count())
        throw std::invalid_argument{ "Kempe change class index out of range" };
    if (seed < 0 || seed >= c.order() || (c.class_of(seed) != class_a && c.class_of(seed) != class_b))
        throw std::invalid_argument{ "Kempe change seed " + std::to_string(seed) + " outside the two classes" };

    auto classes = c.classes();
    VertexSet component = component_of(g, seed, classes[class_a] | classes[class_b]);

    vector<int> assignment(c.assignment().begin(), c.assignment().end());
    component.for_each([&] (int v) { assignment[v] = assignment[v] == class_a ? class_b : class_a; });
    return Colouring{ assignment };
}

auto unicolor::xu_bound(const Graph & g, int k) -> XuBound
{
    long n = g.order();
    long bound = (k - 1) * n - long(k) * (k - 1) / 2;
    long slack = g.edge_count() - bound;
    return XuBound{ slack >= 0, slack };
}

auto unicolor::xu_bound_holds(const Graph & g, int k) -> bool
{
    return xu_bound(g, k).holds;
}

auto unicolor::verify(const Graph & g, int k, long cap, long node_budget) -> VerificationReport
{
    VerificationReport report;
    report.graph6 = emit_graph6(g);
    report.k = k;
    report.min_degree_ok = g.order() > 0 && g.min_degree() >= k - 1;
    report.connected_ok = is_connected(g);
    report.connectivity_ok = k - 1 < 1 || vertex_connectivity_at_least(g, k - 1);
    report.xu_slack = xu_bound(g, k).slack;

    auto outcome = for_each_partition(g, k, [&] (std::span<const int> class_of, int) {
            if (! report.colouring)
                report.colouring = Colouring{ class_of };
            ++report.partition_count;
            return report.partition_count < cap;
        }, node_budget);
    report.count_capped = outcome == SearchOutcome::Stopped;

    if (report.colouring)
        report.two_class_connected_ok = two_class_connected(g, *report.colouring);

    if (report.partition_count >= 2)
        report.verdict = Verdict::No;
    else if (outcome != SearchOutcome::Complete)
        report.verdict = Verdict::Unknown;
    else if (report.partition_count == 0)
        report.verdict = Verdict::No;
    else
        report.verdict = report.colouring->class_count() == k ? Verdict::Yes : Verdict::No;

    return report;
}
