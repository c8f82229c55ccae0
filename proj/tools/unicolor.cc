#include <unicolor/canonical.hh>
#include <unicolor/census.hh>
#include <unicolor/colouring.hh>
#include <unicolor/constructions.hh>
#include <unicolor/errors.hh>
#include <unicolor/graph.hh>
#include <unicolor/json.hh>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace unicolor;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_verification_failed = 1,
        exit_input_error = 2,
        exit_budget_exhausted = 3
    };

    auto emit(const json & j) -> void
    {
        std::cout << j.dump() << '\n';
    }

    auto fail(const string & what, const string & message) -> int
    {
        std::cerr << "unicolor: " << message << '\n';
        emit(json{ { "error", what }, { "message", message } });
        return exit_input_error;
    }

    auto trim(string s) -> string
    {
        auto last = s.find_last_not_of(" \t\r\n");
        s.erase(last == string::npos ? 0 : last + 1);
        auto first = s.find_first_not_of(" \t");
        return first == string::npos ? string{ } : s.substr(first);
    }

    auto write_file(const string & path, const string & contents) -> void
    {
        std::ofstream out{ path };
        if (! out)
            throw std::runtime_error{ "cannot write " + path };
        out << contents;
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in{ path };
        if (! in)
            throw std::runtime_error{ "cannot read " + path };
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto thread_count(int flag) -> int
    {
        if (flag > 0)
            return flag;
        if (const char * env = std::getenv("UNICOLOR_THREADS")) {
            try {
                int t = std::stoi(env);
                if (t > 0)
                    return t;
            }
            catch (const std::exception &) {
            }
            std::cerr << "unicolor: ignoring UNICOLOR_THREADS=" << env << '\n';
        }
        return 1;
    }

    auto parse_window(const string & text) -> std::pair<int, int>
    {
        auto colon = text.find(':');
        if (colon == string::npos)
            throw std::invalid_argument{ "edge window must look like LO:HI" };
        return { std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)) };
    }

    auto parse_colouring(const string & text) -> Colouring
    {
        vector<int> labels;
        std::stringstream in{ text };
        string item;
        while (std::getline(in, item, ','))
            labels.push_back(std::stoi(item));
        return Colouring{ labels };
    }

    struct Source
    {
        string label;
        string text;
        std::optional<ColouredGraph> builtin;
    };

    /// Exactly one of: positional graph6 strings, a file of graph6 lines ("-" for stdin), a catalog name.
    auto gather_sources(const vector<string> & positional, const string & input, const string & catalog) -> vector<Source>
    {
        int given = ! positional.empty() + ! input.empty() + ! catalog.empty();
        if (given != 1)
            throw std::invalid_argument{ "give exactly one input: graph6 arguments, --input or --catalog" };

        vector<Source> sources;
        if (! catalog.empty()) {
            sources.push_back({ catalog, { }, catalog_graph(catalog) });
            return sources;
        }
        if (! positional.empty()) {
            for (std::size_t i = 0 ; i < positional.size() ; ++i)
                sources.push_back({ "arg" + std::to_string(i + 1), positional[i], std::nullopt });
            return sources;
        }

        std::ifstream file;
        std::istream * in = &std::cin;
        if (input != "-") {
            file.open(input);
            if (! file)
                throw std::runtime_error{ "cannot read " + input };
            in = &file;
        }
        string line;
        for (int number = 1 ; std::getline(*in, line) ; ++number) {
            line = trim(line);
            if (! line.empty())
                sources.push_back({ "line" + std::to_string(number), line, std::nullopt });
        }
        return sources;
    }

    struct CheckOptions
    {
        int k = 0;
        long cap = 2;
        long budget_nodes = unlimited;
        vector<string> graphs;
        string input, catalog, dot;
    };

    auto cmd_check(const CheckOptions & opt) -> int
    {
        vector<Source> sources;
        try {
            sources = gather_sources(opt.graphs, opt.input, opt.catalog);
        }
        catch (const std::exception & e) {
            return fail("input", e.what());
        }

        bool input_error = false, budget = false, failed = false;
        string dot;
        for (auto & source : sources) {
            Graph g;
            try {
                g = source.builtin ? source.builtin->graph : parse_graph6(source.text);
            }
            catch (const GraphParseError & e) {
                input_error = true;
                std::cerr << "unicolor: " << source.label << ": " << e.what() << '\n';
                emit(json{ { "input", source.label }, { "text", source.text }, { "error", to_string(e.kind()) }, { "message", e.what() } });
                continue;
            }

            auto report = verify(g, opt.k, opt.cap, opt.budget_nodes);
            auto j = report_json(report);
            j["input"] = source.label;
            if (report.colouring)
                j["colouring"] = colouring_json(*report.colouring);
            emit(j);

            if (report.verdict == Verdict::Unknown)
                budget = true;
            else if (report.verdict == Verdict::No)
                failed = true;

            if (! opt.dot.empty()) {
                vector<int> class_of;
                if (report.colouring)
                    class_of.assign(report.colouring->assignment().begin(), report.colouring->assignment().end());
                dot += to_dot(g, class_of);
            }
        }

        if (! opt.dot.empty())
            write_file(opt.dot, dot);

        if (input_error)
            return exit_input_error;
        if (budget)
            return exit_budget_exhausted;
        return failed ? exit_verification_failed : exit_ok;
    }

    struct NuOptions
    {
        int iterations = 1;
        bool verify = false;
        long budget_nodes = unlimited;
        vector<string> graphs;
        string input, catalog, colouring, dot;
    };

    /// The size, degree, clique and embedding identities of one application.
    auto nu_checks(const ColouredGraph & h, const ColouredGraph & g) -> json
    {
        int n = h.graph.order(), k = h.colouring.class_count();
        bool degrees = true;
        for (int v = 0 ; v < g.graph.order() ; ++v) {
            int base = v % n, copy = v / n, d = h.graph.degree(base);
            int expected = copy == 0 ? (k + 1) * d : copy == h.colouring.class_of(base) + 1 ? 2 * d + k - 1 : 2 * d + 1;
            degrees = degrees && g.graph.degree(v) == expected;
        }
        return json{
            { "order", g.graph.order() == (k + 1) * n },
            { "edges", g.graph.edge_count() == (3 * k + 1) * h.graph.edge_count() + (k - 1) * n },
            { "proper", is_proper(g.graph, g.colouring) },
            { "degrees", degrees },
            { "clique_number", clique_number(g.graph) == clique_number(h.graph) + 1 },
            { "min_degree", n == 0 || g.graph.min_degree() == 2 * h.graph.min_degree() + 1 },
            { "induced", g.graph.induced(VertexSet::range(n)) == h.graph }
        };
    }

    auto cmd_nu(const NuOptions & opt) -> int
    {
        ColouredGraph current;
        try {
            auto sources = gather_sources(opt.graphs, opt.input, opt.catalog);
            if (sources.size() != 1)
                throw std::invalid_argument{ "nu takes exactly one graph" };
            if (sources[0].builtin) {
                current = *sources[0].builtin;
                if (! opt.colouring.empty())
                    current = make_coloured(current.graph, parse_colouring(opt.colouring));
            }
            else {
                auto g = parse_graph6(sources[0].text);
                current = make_coloured(g, opt.colouring.empty() ? optimal_colouring(g) : parse_colouring(opt.colouring));
            }
            if (opt.iterations < 0)
                throw std::invalid_argument{ "iterations must be non-negative" };
        }
        catch (const GraphParseError & e) {
            return fail(to_string(e.kind()), e.what());
        }
        catch (const std::exception & e) {
            return fail("input", e.what());
        }

        string source = emit_graph6(current.graph);
        json steps = json::array();
        try {
            // Fail on size before building anything.
            long order = current.graph.order();
            for (int i = 0, k = current.colouring.class_count() ; i < opt.iterations ; ++i, ++k)
                if ((order *= k + 1) > 64)
                    throw OrderOverflow{ "after " + std::to_string(i + 1) + " iterations the order would be " + std::to_string(order) };
            for (int i = 0 ; i < opt.iterations ; ++i) {
                auto next = nu(current);
                steps.push_back(nu_checks(current, next));
                current = std::move(next);
            }
        }
        catch (const OrderOverflow & e) {
            return fail("order_overflow", e.what());
        }

        int k = current.colouring.class_count();
        json out{
            { "source", source },
            { "iterations", opt.iterations },
            { "graph6", emit_graph6(current.graph) },
            { "order", current.graph.order() },
            { "edges", current.graph.edge_count() },
            { "k", k },
            { "class_sizes", current.colouring.class_sizes() },
            { "colouring", colouring_json(current.colouring) },
            { "checks", steps }
        };

        // The clique and minimum-degree identities only hold for uniquely colourable seeds.
        int code = exit_ok;
        for (auto & step : steps)
            for (auto name : { "order", "edges", "proper", "degrees", "induced" })
                if (! step.at(name).get<bool>())
                    code = exit_verification_failed;

        if (opt.verify) {
            auto report = verify(current.graph, k, 2, opt.budget_nodes);
            out["report"] = report_json(report);
            if (report.verdict == Verdict::Unknown)
                code = std::max<int>(code, exit_budget_exhausted);
            else if (report.verdict == Verdict::No)
                code = exit_verification_failed;
        }
        emit(out);

        if (! opt.dot.empty())
            write_file(opt.dot, to_dot(current.graph, current.colouring.assignment()));
        return code;
    }

    struct CensusOptions
    {
        int n = 0;
        int k = 3;
        bool triangle_free = false, connected = false, balanced = false;
        int min_degree = 0;
        string edges;
        long budget_nodes = unlimited;
        double budget_seconds = 0.0;
        int threads = 0;
        int split_depth = -1;
        string checkpoint, resume;
        bool list = false;
    };

    auto cmd_census(const CensusOptions & opt) -> int
    {
        CensusTask task;
        try {
            task.n = opt.n;
            task.k = opt.k;
            task.triangle_free = opt.triangle_free;
            task.connected = opt.connected;
            task.balanced = opt.balanced;
            task.min_degree = opt.min_degree;
            if (! opt.edges.empty())
                task.edge_window = parse_window(opt.edges);
            task.node_budget = opt.budget_nodes;
            task.seconds_budget = opt.budget_seconds;
            task.threads = thread_count(opt.threads);
            task.split_depth = opt.split_depth;
            if (! opt.resume.empty())
                task.resume_from = read_file(opt.resume);
            validate(task);
        }
        catch (const std::exception & e) {
            return fail("input", e.what());
        }

        auto started = std::chrono::steady_clock::now();
        CensusResult result;
        try {
            if (opt.list) {
                vector<Graph> graphs;
                result = generate(task, [&] (const Graph & g) { graphs.push_back(g); });
                for (auto & g : graphs)
                    emit(json{ { "graph6", emit_graph6(g) }, { "n", g.order() }, { "edges", g.edge_count() } });
            }
            else {
                result = find_unique_k_witnesses(task);
                for (auto & w : result.witnesses)
                    emit(json{ { "graph6", w.report.graph6 }, { "n", w.graph.order() }, { "k", task.k },
                            { "edges", w.graph.edge_count() }, { "report", report_json(w.report) } });
            }
        }
        catch (const std::exception & e) {
            return fail("input", e.what());
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

        auto & s = result.stats;
        emit(json{ { "summary", {
                    { "n", task.n }, { "k", task.k }, { "complete", result.complete },
                    { "subtrees", result.subtrees }, { "subtrees_done", result.subtrees_done },
                    { "nodes", s.nodes }, { "candidates", s.candidates }, { "generated", s.generated },
                    { "prefilter_passed", s.prefilter_passed }, { "uniquely_colourable", s.uniquely_colourable },
                    { "balanced", s.balanced }, { "witnesses", result.witnesses.size() },
                    { "seconds", elapsed.count() } } } });

        if (! result.complete) {
            if (! opt.checkpoint.empty())
                write_file(opt.checkpoint, result.checkpoint);
            else
                std::cerr << "unicolor: budget exhausted; pass --checkpoint PATH to keep progress\n";
            return exit_budget_exhausted;
        }
        return exit_ok;
    }

    struct SampleOptions
    {
        SamplerConfig cfg;
        int girth = 0;
    };

    auto girth_json(const Graph & g) -> json
    {
        auto value = girth(g);
        return value ? json(*value) : json(nullptr);
    }

    auto cmd_sample(SampleOptions opt) -> int
    {
        if (opt.girth != 0)
            opt.cfg.girth = opt.girth;
        Graph g;
        try {
            validate(opt.cfg);
            g = bollobas_sauer_sample(opt.cfg);
        }
        catch (const std::exception & e) {
            return fail("input", e.what());
        }

        json out{
            { "k", opt.cfg.k }, { "n", opt.cfg.part_size }, { "epsilon", opt.cfg.epsilon }, { "seed", opt.cfg.seed },
            { "graph6", emit_graph6(g) }, { "edges", g.edge_count() }, { "girth", girth_json(g) }
        };
        if (opt.cfg.girth) {
            auto cleaned = remove_short_cycles(g, *opt.cfg.girth);
            out["girth_target"] = *opt.cfg.girth;
            out["cleaned"] = json{
                { "graph6", emit_graph6(cleaned.graph) }, { "edges", cleaned.graph.edge_count() },
                { "removed", cleaned.removed }, { "girth", girth_json(cleaned.graph) }
            };
        }
        emit(out);
        return exit_ok;
    }

    auto catalog_entry_json(const string & name) -> json
    {
        auto c = catalog_graph(name);
        auto & g = c.graph;
        int chi = chromatic_number(g);
        json expected{
            { "order", g.order() },
            { "edges", g.edge_count() },
            { "chromatic_number", chi },
            { "clique_number", clique_number(g) },
            { "triangle_free", is_triangle_free(g) },
            { "uniquely_colourable", is_uniquely_k_colourable(g, chi) }
        };
        if (chi >= 2) {
            expected["sigma"] = *sigma(g);
            expected["chi_cr"] = chi_cr(g)->to_string();
        }
        return json{ { "name", name }, { "graph6", emit_graph6(g) }, { "colouring", colouring_json(c.colouring) }, { "expected", expected } };
    }

    auto cmd_catalog(bool manifest) -> int
    {
        json graphs = json::array();
        for (auto & name : catalog_names()) {
            if (manifest)
                graphs.push_back(catalog_entry_json(name));
            else
                emit(catalog_entry_json(name));
        }
        if (manifest)
            std::cout << json{ { "format", "unicolor-catalog" }, { "version", 1 }, { "graphs", graphs } }.dump(2) << '\n';
        return exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Exact tools for uniquely colourable graphs" };
    app.require_subcommand(1);
    app.set_version_flag("--version", "unicolor 0.1.0");

    CheckOptions check;
    auto * check_cmd = app.add_subcommand("check", "Decide unique k-colourability and report the necessary conditions");
    check_cmd->add_option("--k", check.k, "Number of colour classes")->required()->check(CLI::Range(1, 64));
    check_cmd->add_option("graphs", check.graphs, "graph6 strings");
    check_cmd->add_option("--input", check.input, "File of graph6 lines, - for stdin");
    check_cmd->add_option("--catalog", check.catalog, "Builtin graph name");
    check_cmd->add_option("--cap", check.cap, "Stop counting partitions at this many")->check(CLI::Range(1L, 1L << 62));
    check_cmd->add_option("--budget-nodes", check.budget_nodes, "Search node limit for the partition count");
    check_cmd->add_option("--dot", check.dot, "Write DOT with the found colouring");

    NuOptions nu_opt;
    auto * nu_cmd = app.add_subcommand("nu", "Apply the colour-indexed copy construction");
    nu_cmd->add_option("graphs", nu_opt.graphs, "graph6 string");
    nu_cmd->add_option("--input", nu_opt.input, "File holding one graph6 line, - for stdin");
    nu_cmd->add_option("--catalog", nu_opt.catalog, "Builtin graph name");
    nu_cmd->add_option("--colouring", nu_opt.colouring, "Comma-separated class labels; default is an optimal colouring");
    nu_cmd->add_option("--iterations", nu_opt.iterations, "How many times to apply the construction");
    nu_cmd->add_flag("--verify", nu_opt.verify, "Also decide unique colourability of the result");
    nu_cmd->add_option("--budget-nodes", nu_opt.budget_nodes, "Search node limit for --verify");
    nu_cmd->add_option("--dot", nu_opt.dot, "Write DOT of the result");

    CensusOptions census;
    auto * census_cmd = app.add_subcommand("census", "Isomorph-free search for uniquely colourable graphs");
    census_cmd->add_option("--n", census.n, "Order")->required();
    census_cmd->add_option("--k", census.k, "Number of colour classes");
    census_cmd->add_flag("--triangle-free", census.triangle_free);
    census_cmd->add_flag("--connected", census.connected);
    census_cmd->add_flag("--balanced", census.balanced, "Keep witnesses with equal class sizes only");
    census_cmd->add_option("--min-degree", census.min_degree);
    census_cmd->add_option("--edges", census.edges, "Inclusive edge window LO:HI");
    census_cmd->add_option("--budget-nodes", census.budget_nodes);
    census_cmd->add_option("--budget-seconds", census.budget_seconds);
    census_cmd->add_option("--threads", census.threads, "Worker threads; falls back to UNICOLOR_THREADS");
    census_cmd->add_option("--split-depth", census.split_depth, "Order at which the search is cut into subtrees");
    census_cmd->add_option("--checkpoint", census.checkpoint, "Write a resume file when the budget runs out");
    census_cmd->add_option("--resume", census.resume, "Resume file from an earlier run of the same task");
    census_cmd->add_flag("--list", census.list, "Stream every generated graph instead of searching for witnesses");

    SampleOptions sample;
    auto * sample_cmd = app.add_subcommand("sample", "Random k-partite graph with a prescribed edge count");
    sample_cmd->add_option("--k", sample.cfg.k);
    sample_cmd->add_option("--n", sample.cfg.part_size, "Part size");
    sample_cmd->add_option("--eps", sample.cfg.epsilon);
    sample_cmd->add_option("--girth", sample.girth, "Delete edges until the girth reaches this");
    sample_cmd->add_option("--seed", sample.cfg.seed);

    bool manifest = false;
    auto * catalog_cmd = app.add_subcommand("catalog", "Builtin graphs with their colourings and invariants");
    catalog_cmd->add_flag("--manifest", manifest, "One JSON document instead of JSON lines");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (check_cmd->parsed())
            return cmd_check(check);
        if (nu_cmd->parsed())
            return cmd_nu(nu_opt);
        if (census_cmd->parsed())
            return cmd_census(census);
        if (sample_cmd->parsed())
            return cmd_sample(sample);
        if (catalog_cmd->parsed())
            return cmd_catalog(manifest);
    }
    catch (const std::exception & e) {
        return fail("internal", e.what());
    }
    return exit_input_error;
}
