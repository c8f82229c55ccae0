#include <unicolor/census.hh>
#include <unicolor/canonical.hh>
#include <unicolor/json.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

using namespace unicolor;

using nlohmann::json;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr const char * checkpoint_format = "unicolor-census-checkpoint";
    constexpr int checkpoint_version = 1;

    using Generators = vector<vector<int>>;

    auto effective_split_depth(const CensusTask & task) -> int
    {
        if (task.split_depth >= 1)
            return std::min(task.split_depth, task.n);
        return std::max(1, task.n - 4);
    }

    auto image_of(VertexSet s, const vector<int> & perm) -> VertexSet
    {
        VertexSet result;
        s.for_each([&] (int v) { result.insert(perm[v]); });
        return result;
    }

    // Whether s is the numerically smallest set in its orbit under the group.
    auto is_orbit_minimal(VertexSet s, const Generators & generators) -> bool
    {
        if (generators.empty())
            return true;
        std::unordered_set<uint64_t> seen{ s.bits() };
        vector<VertexSet> frontier{ s };
        while (! frontier.empty()) {
            VertexSet t = frontier.back();
            frontier.pop_back();
            for (auto & gen : generators) {
                VertexSet u = image_of(t, gen);
                if (u.bits() < s.bits())
                    return false;
                if (seen.insert(u.bits()).second)
                    frontier.push_back(u);
            }
        }
        return true;
    }

    struct Node
    {
        Graph graph;
        Generators generators;
    };

    class Generator
    {
        private:
            const CensusTask & _task;
            int _max_edges;
            bool _prune;

        public:
            std::function<auto () -> bool> should_stop;
            CensusStats stats;

            explicit Generator(const CensusTask & task) :
                _task(task),
                _max_edges(task.edge_window ? task.edge_window->second : task.n * (task.n - 1) / 2),
                _prune(task.prune_during_generation)
            {
            }

            // Fewest edges that adding the remaining vertices can contribute.
            auto future_edges(int order) const -> int
            {
                int remaining = _task.n - order;
                if (remaining <= 0)
                    return 0;
                int f = _task.min_degree;
                int bound = std::max(f, (f * remaining + 1) / 2);
                if (_task.connected)
                    bound = std::max(bound, remaining);
                return bound;
            }

            auto accept_final(const Graph & g) const -> bool
            {
                if (_task.triangle_free && ! is_triangle_free(g))
                    return false;
                int e = g.edge_count();
                if (_task.edge_window && (e < _task.edge_window->first || e > _task.edge_window->second))
                    return false;
                if (g.min_degree() < _task.min_degree)
                    return false;
                if (_task.connected && ! is_connected(g))
                    return false;
                return true;
            }

            /// Calls emit(child, generators-or-empty, is_final) for each accepted extension.
            template <typename Emit_>
            auto extend(const Node & parent, Emit_ && emit) -> bool
            {
                const Graph & g = parent.graph;
                int m = g.order();
                bool final_level = m + 1 == _task.n;
                int base_edges = g.edge_count();
                int edge_room = _prune ? _max_edges - base_edges - future_edges(m + 1) : m;

                for (uint64_t bits = 0 ; bits < (uint64_t{ 1 } << m) ; ++bits) {
                    VertexSet s{ bits };
                    int degree = s.size();
                    if (degree > edge_room)
                        continue;
                    if (_prune && _task.triangle_free && ! g.is_independent(s))
                        continue;
                    if (final_level && _prune && degree < _task.min_degree)
                        continue;

                    ++stats.candidates;
                    if (should_stop && (stats.candidates & 1023) == 0 && should_stop())
                        return false;

                    Graph child = g.with_vertex(s);
                    if (child.min_degree() != degree)
                        continue;
                    if (final_level && _prune && ! accept_final(child))
                        continue;
                    if (! is_orbit_minimal(s, parent.generators))
                        continue;

                    auto cells = equitable_partition(child);
                    if (! cells[0].contains(m))
                        continue;

                    std::optional<CanonicalLabelling> labelling;
                    if (cells[0].size() > 1) {
                        labelling = canonical_labelling(child);
                        int chosen = labelling->labelling[0];
                        if (labelling->orbits[m] != labelling->orbits[chosen])
                            continue;
                    }

                    if (final_level) {
                        if (! _prune && ! accept_final(child))
                            continue;
                        if (! emit(Node{ std::move(child), { } }, true))
                            return false;
                    }
                    else {
                        if (! labelling)
                            labelling = canonical_labelling(child);
                        ++stats.nodes;
                        if (! emit(Node{ std::move(child), std::move(labelling->generators) }, false))
                            return false;
                    }
                }
                return true;
            }

            /// Depth-first over the subtree below node; false if stopped early.
            template <typename Visit_>
            auto walk(const Node & node, Visit_ && visit) -> bool
            {
                if (node.graph.order() == _task.n) {
                    if (! accept_final(node.graph))
                        return true;
                    ++stats.generated;
                    return visit(node.graph);
                }
                return extend(node, [&] (Node child, bool is_final) {
                        if (is_final) {
                            ++stats.generated;
                            return visit(child.graph);
                        }
                        return walk(child, visit);
                    });
            }

            /// Nodes at the given order, in deterministic depth-first order.
            auto frontier(int depth) -> vector<Node>
            {
                vector<Node> result;
                Node root{ Graph(1), { } };
                if (depth == 1) {
                    result.push_back(root);
                    return result;
                }
                auto collect = [&] (auto & self, const Node & node) -> void {
                    extend(node, [&] (Node child, bool) {
                            if (child.graph.order() == depth)
                                result.push_back(std::move(child));
                            else
                                self(self, child);
                            return true;
                        });
                };
                collect(collect, root);
                return result;
            }
    };

    auto task_fingerprint(const CensusTask & task) -> json
    {
        return json{
            { "n", task.n },
            { "k", task.k },
            { "triangle_free", task.triangle_free },
            { "connected", task.connected },
            { "min_degree", task.min_degree },
            { "balanced", task.balanced },
            { "edge_window", task.edge_window ? json{ task.edge_window->first, task.edge_window->second } : json(nullptr) },
            { "prune", task.prune_during_generation },
            { "split_depth", effective_split_depth(task) }
        };
    }

    auto stats_json(const CensusStats & s) -> json
    {
        return json{
            { "nodes", s.nodes }, { "candidates", s.candidates }, { "generated", s.generated },
            { "prefilter_passed", s.prefilter_passed }, { "uniquely_colourable", s.uniquely_colourable },
            { "balanced", s.balanced }
        };
    }

    auto stats_from_json(const json & j) -> CensusStats
    {
        CensusStats s;
        s.nodes = j.at("nodes");
        s.candidates = j.at("candidates");
        s.generated = j.at("generated");
        s.prefilter_passed = j.at("prefilter_passed");
        s.uniquely_colourable = j.at("uniquely_colourable");
        s.balanced = j.at("balanced");
        return s;
    }

    auto add_stats(CensusStats & into, const CensusStats & from) -> void
    {
        into.nodes += from.nodes;
        into.candidates += from.candidates;
        into.generated += from.generated;
        into.prefilter_passed += from.prefilter_passed;
        into.uniquely_colourable += from.uniquely_colourable;
        into.balanced += from.balanced;
    }

    struct SubtreeResult
    {
        bool done = false;
        CensusStats stats;
        vector<Graph> hits;
    };

    /// Per finished graph: update the stats and say whether it is a hit to keep.
    using Classifier = std::function<auto (const Graph &, CensusStats &) -> bool>;

    auto run(const CensusTask & task, const Classifier & classify, const std::function<auto (const Graph &) -> VerificationReport> & report_for) -> CensusResult
    {
        validate(task);
        int depth = effective_split_depth(task);
        auto started = std::chrono::steady_clock::now();

        std::atomic<bool> stop{ false };
        std::atomic<long> nodes_spent{ 0 };
        // Budgets only bite once a subtree has finished, so every resume makes progress.
        std::atomic<long> finished_here{ 0 };
        auto over_budget = [&] () -> bool {
            if (stop.load())
                return true;
            if (finished_here.load() == 0)
                return false;
            if (task.node_budget != unlimited && nodes_spent.load() > task.node_budget)
                stop = true;
            if (task.seconds_budget > 0.0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
                if (elapsed.count() > task.seconds_budget)
                    stop = true;
            }
            return stop.load();
        };

        Generator top(task);
        auto subtrees = top.frontier(depth);
        CensusStats prefix_stats = top.stats;

        vector<SubtreeResult> results(subtrees.size());
        CensusResult result;
        result.subtrees = static_cast<long>(subtrees.size());
        result.stats = prefix_stats;

        if (! task.resume_from.empty()) {
            json blob = json::parse(task.resume_from);
            if (blob.at("format") != checkpoint_format || blob.at("version") != checkpoint_version)
                throw std::invalid_argument{ "unrecognised checkpoint" };
            if (blob.at("task") != task_fingerprint(task) || blob.at("subtrees") != result.subtrees)
                throw std::invalid_argument{ "checkpoint belongs to a different task" };
            for (auto & entry : blob.at("done")) {
                auto & r = results.at(entry.at("index").get<std::size_t>());
                r.done = true;
                r.stats = stats_from_json(entry.at("stats"));
                for (auto & g6 : entry.at("hits"))
                    r.hits.push_back(parse_graph6(g6.get<string>()));
            }
        }

        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] () {
            while (true) {
                std::size_t i = next++;
                if (i >= subtrees.size() || over_budget())
                    return;
                if (results[i].done)
                    continue;

                Generator gen(task);
                long last_reported = 0;
                gen.should_stop = [&] () {
                    long spent = gen.stats.nodes + gen.stats.generated;
                    nodes_spent += spent - last_reported;
                    last_reported = spent;
                    return over_budget();
                };

                SubtreeResult local;
                bool finished = gen.walk(subtrees[i], [&] (const Graph & g) {
                        if (classify(g, local.stats))
                            local.hits.push_back(g);
                        return true;
                    });
                if (finished) {
                    add_stats(local.stats, gen.stats);
                    local.done = true;
                    results[i] = std::move(local);
                    ++finished_here;
                }
            }
        };

        int threads = std::max(1, task.threads);
        if (threads == 1)
            worker();
        else {
            vector<std::thread> pool;
            for (int t = 0 ; t < threads ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }

        json done = json::array();
        for (std::size_t i = 0 ; i < results.size() ; ++i) {
            auto & r = results[i];
            if (! r.done)
                continue;
            ++result.subtrees_done;
            add_stats(result.stats, r.stats);
            json hits = json::array();
            for (auto & g : r.hits) {
                result.witnesses.push_back(Witness{ g, report_for(g) });
                hits.push_back(emit_graph6(g));
            }
            done.push_back(json{ { "index", i }, { "stats", stats_json(r.stats) }, { "hits", hits } });
        }

        result.complete = result.subtrees_done == result.subtrees;
        if (! result.complete)
            result.checkpoint = json{
                { "format", checkpoint_format },
                { "version", checkpoint_version },
                { "task", task_fingerprint(task) },
                { "subtrees", result.subtrees },
                { "done", done }
            }.dump();
        return result;
    }
}

auto unicolor::validate(const CensusTask & task) -> void
{
    if (task.n < 1 || task.n > max_census_order)
        throw std::invalid_argument{ "census order must lie in 1.." + std::to_string(max_census_order) };
    if (task.k < 1)
        throw std::invalid_argument{ "census k must be at least 1" };
    if (task.balanced && task.n % task.k != 0)
        throw std::invalid_argument{ "balanced classes need k to divide n" };
    if (task.min_degree < 0)
        throw std::invalid_argument{ "negative degree floor" };
    if (task.edge_window && task.edge_window->first > task.edge_window->second)
        throw std::invalid_argument{ "empty edge window" };
}

auto unicolor::generate(const CensusTask & task, const std::function<auto (const Graph &) -> void> & visit) -> CensusResult
{
    std::mutex lock;
    return run(task, [&] (const Graph & g, CensusStats &) {
            std::lock_guard guard{ lock };
            visit(g);
            return false;
        }, [] (const Graph & g) {
            VerificationReport report;
            report.graph6 = emit_graph6(g);
            return report;
        });
}

auto unicolor::find_unique_k_witnesses(const CensusTask & task) -> CensusResult
{
    int k = task.k;
    CensusTask search = task;
    // Necessary for unique k-colourability, so safe to push into generation.
    if (k >= 2) {
        search.connected = true;
        search.min_degree = std::max(task.min_degree, k - 1);
    }

    auto classify = [k, balanced = task.balanced] (const Graph & g, CensusStats & stats) -> bool {
        if (k >= 2 && (g.min_degree() < k - 1 || ! is_connected(g)))
            return false;
        if (! xu_bound_holds(g, k))
            return false;
        if (k >= 2 && ! vertex_connectivity_at_least(g, k - 1))
            return false;
        ++stats.prefilter_passed;

        if (! is_uniquely_k_colourable(g, k))
            return false;
        ++stats.uniquely_colourable;

        if (balanced) {
            auto sizes = find_colouring(g, k)->class_sizes();
            if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>{ }) != sizes.end())
                return false;
        }
        ++stats.balanced;
        return true;
    };

    return run(search, classify, [k] (const Graph & g) { return verify(g, k); });
}
