#ifndef UNICOLOR_CENSUS_HH
#define UNICOLOR_CENSUS_HH 1

#include <unicolor/colouring.hh>
#include <unicolor/graph.hh>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unicolor
{
    inline constexpr int max_census_order = 14;

    struct CensusTask
    {
        int n = 0;
        int k = 3;
        bool triangle_free = false;
        bool connected = false;
        int min_degree = 0;
        /// Only keep witnesses whose unique colouring has equal class sizes.
        bool balanced = false;
        /// Inclusive bounds on the edge count of generated graphs.
        std::optional<std::pair<int, int>> edge_window;

        /// When false, structural constraints are applied to finished graphs only.
        bool prune_during_generation = true;

        long node_budget = unlimited;
        double seconds_budget = 0.0;
        int threads = 1;
        /// Order at which the search tree is cut into independent subtrees; -1 picks one.
        int split_depth = -1;
        /// Checkpoint blob from an earlier, interrupted run of the same task.
        std::string resume_from;
    };

    /// Throws std::invalid_argument when the task is out of range or inconsistent.
    auto validate(const CensusTask & task) -> void;

    struct CensusStats
    {
        long nodes = 0;
        long candidates = 0;
        long generated = 0;
        long prefilter_passed = 0;
        long uniquely_colourable = 0;
        long balanced = 0;
    };

    struct Witness
    {
        Graph graph;
        VerificationReport report;
    };

    struct CensusResult
    {
        CensusStats stats;
        std::vector<Witness> witnesses;
        bool complete = false;
        long subtrees = 0;
        long subtrees_done = 0;
        /// Resume token; empty once the run is complete.
        std::string checkpoint;
    };

    /**
     * Visits one graph from each isomorphism class of n-vertex graphs meeting
     * the task's structural constraints (triangle-free, connected, degree floor,
     * edge window). Graphs grow one vertex at a time; an extension is kept only
     * when the new vertex lies in the orbit chosen canonically among the
     * minimum-degree vertices, and only one extension per orbit of the parent's
     * automorphism group is tried.
     *
     * With more than one thread, visit is called from several threads under a
     * lock, in no particular order.
     */
    auto generate(const CensusTask & task, const std::function<auto (const Graph &) -> void> & visit) -> CensusResult;

    /**
     * Runs generate and keeps the uniquely k-colourable graphs: cheap necessary
     * conditions first (degree, connectivity, edge bound, (k-1)-connectivity),
     * then the exact partition count, then the class-balance check. Witnesses
     * come back in a fixed order regardless of the thread count.
     */
    auto find_unique_k_witnesses(const CensusTask & task) -> CensusResult;
}

#endif
