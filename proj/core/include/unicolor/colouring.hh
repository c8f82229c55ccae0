#ifndef UNICOLOR_COLOURING_HH
#define UNICOLOR_COLOURING_HH 1

#include <unicolor/graph.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unicolor
{
    /**
     * A partition of the vertices into non-empty classes. Class indices are
     * canonical: classes are numbered by their smallest vertex, so equal
     * partitions compare equal regardless of how they were labelled.
     */
    class Colouring
    {
        private:
            std::vector<int> _class_of;
            int _class_count = 0;

        public:
            Colouring() = default;

            /// Any labelling of a partition; throws InvalidColouring on a negative label.
            explicit Colouring(std::span<const int> assignment);

            static auto from_classes(int order, std::span<const VertexSet> classes) -> Colouring;

            auto order() const noexcept -> int { return static_cast<int>(_class_of.size()); }
            auto class_count() const noexcept -> int { return _class_count; }
            auto class_of(int v) const -> int { return _class_of[v]; }
            auto assignment() const noexcept -> std::span<const int> { return _class_of; }

            auto classes() const -> std::vector<VertexSet>;
            auto class_sizes() const -> std::vector<int>;

            auto operator== (const Colouring &) const -> bool = default;
    };

    auto is_proper(const Graph & g, const Colouring & c) -> bool;

    /// Exact rational in lowest terms with positive denominator.
    struct Rational
    {
        std::int64_t numerator = 0;
        std::int64_t denominator = 1;

        static auto make(std::int64_t numerator, std::int64_t denominator) -> Rational;

        auto operator== (const Rational &) const -> bool = default;
        auto operator<=> (const Rational & other) const -> std::strong_ordering;
        auto to_string() const -> std::string;
    };

    inline constexpr long unlimited = -1;

    enum class SearchOutcome
    {
        Complete,
        Stopped,
        BudgetExhausted
    };

    /**
     * Visit every partition of the vertices into at most max_classes
     * independent classes, each exactly once. The visitor sees the class of
     * each vertex (classes numbered by first use along the search) and the
     * class count, and returns false to stop. Vertices are taken in DSATUR
     * order: most distinct neighbouring classes first, then higher degree,
     * then lower index. A class may be opened only after all lower ones.
     */
    auto for_each_partition(
            const Graph & g,
            int max_classes,
            const std::function<auto (std::span<const int>, int) -> bool> & visit,
            long node_budget = unlimited,
            long * nodes_used = nullptr) -> SearchOutcome;

    struct PartitionCount
    {
        long count = 0;
        bool capped = false;
        bool budget_exhausted = false;
    };

    /// Partitions into at most k independent classes, counted up to cap.
    auto count_partitions(const Graph & g, int k, long cap, long node_budget = unlimited) -> PartitionCount;

    auto count_colour_partitions(const Graph & g, int k, long cap = 2) -> long;

    /// Some proper colouring with at most k classes, if one exists.
    auto find_colouring(const Graph & g, int k) -> std::optional<Colouring>;

    auto dsatur_colouring(const Graph & g) -> Colouring;

    auto chromatic_number(const Graph & g) -> int;

    /// A proper colouring using exactly chromatic_number(g) classes.
    auto optimal_colouring(const Graph & g) -> Colouring;

    /// The necessary conditions for unique colourability that need a colouring:
    /// every vertex sees every other class, and any two classes induce a connected graph.
    auto sees_every_other_class(const Graph & g, const Colouring & c) -> bool;
    auto two_class_connected(const Graph & g, const Colouring & c) -> bool;

    auto is_uniquely_k_colourable(const Graph & g, int k) -> bool;

    /// Statistics over every partition into exactly chromatic_number(g) classes.
    struct OptimalPartitionStats
    {
        int chromatic_number = 0;
        long partitions = 0;
        int smallest_class = 0;
        bool all_balanced = true;
    };

    /// nullopt when the enumeration does not finish within the node budget.
    auto optimal_partition_stats(const Graph & g, long node_budget = unlimited) -> std::optional<OptimalPartitionStats>;

    auto sigma(const Graph & g, long node_budget = unlimited) -> std::optional<int>;

    /// (chi - 1) n / (n - sigma); throws std::domain_error when chi <= 1.
    auto chi_cr(const Graph & g, long node_budget = unlimited) -> std::optional<Rational>;

    /// Swap classes a and b inside the component of g[A u B] containing seed.
    auto kempe_change(const Graph & g, const Colouring & c, int class_a, int class_b, int seed) -> Colouring;

    struct XuBound
    {
        bool holds;
        long slack;
    };

    /// Edge count against the lower bound (k - 1) n - k (k - 1) / 2.
    auto xu_bound(const Graph & g, int k) -> XuBound;
    auto xu_bound_holds(const Graph & g, int k) -> bool;

    enum class Verdict
    {
        Yes,
        No,
        Unknown
    };

    struct VerificationReport
    {
        std::string graph6;
        int k = 0;
        bool min_degree_ok = false;
        bool connected_ok = false;
        bool connectivity_ok = false;
        long xu_slack = 0;
        std::optional<bool> two_class_connected_ok;
        long partition_count = 0;
        bool count_capped = false;
        Verdict verdict = Verdict::Unknown;
        std::optional<Colouring> colouring;
    };

    /// Runs the whole battery; the count stops at cap, the search at node_budget.
    auto verify(const Graph & g, int k, long cap = 2, long node_budget = unlimited) -> VerificationReport;

    auto to_json_string(const VerificationReport & report) -> std::string;
}

#endif
