// pinched: command-line front end. Every command reads and writes files;
// results go to -o (atomically) or to stdout.

#include <pinched/extractors.hh>
#include <pinched/generators.hh>
#include <pinched/graph.hh>
#include <pinched/graph6.hh>
#include <pinched/oracles.hh>
#include <pinched/structures.hh>
#include <pinched/witness_json.hh>

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <stop_token>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

using namespace pinched;

namespace
{
    enum Exit : int
    {
        ok = 0,
        invalid = 1,
        parse_error = 2,
        budget_exhausted = 3,
        cap_exceeded = 4,
        io_error = 5,
        usage = 6,
        got_alignment = 10,
        got_constellation = 11,
        got_biclique = 12,
        got_clique = 13,
        got_pinch = 14,
        got_stable_set = 15,
        got_no_alternative = 16
    };

    struct Failure
    {
        int code;
        std::string message;
    };

    struct IoError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw IoError("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // write next to the target, then rename over it
    auto write_atomic(const std::string & path, const std::string & data) -> void
    {
        namespace fs = std::filesystem;
        fs::path target(path);
        auto tmp = target;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw IoError("cannot write " + tmp.string());
            out << data;
            out.flush();
            if (! out)
                throw IoError("short write to " + tmp.string());
        }
        std::error_code ec;
        fs::rename(tmp, target, ec);
        if (ec) {
            fs::remove(tmp, ec);
            throw IoError("cannot move output into place at " + path);
        }
    }

    auto emit(const std::optional<std::string> & path, const std::string & data) -> void
    {
        if (path)
            write_atomic(*path, data);
        else
            std::cout << data;
    }

    auto dump(const Json & j) -> std::string
    {
        return j.dump(2) + "\n";
    }

    auto load_graph(const std::string & path) -> Graph
    {
        return graph6_parse(read_file(path));
    }

    auto load_json(const std::string & path) -> Json
    {
        auto text = read_file(path);
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw SchemaError(path + ": " + e.what());
        }
    }

    /// K4, K7, K2,3, C5, P4, W3 (wall), G3 (grid), a graph6 string, or @file.
    auto pattern(const std::string & spec) -> Graph
    {
        std::smatch m;
        if (! spec.empty() && spec[0] == '@')
            return load_graph(spec.substr(1));
        if (std::regex_match(spec, m, std::regex("K(\\d+)")))
            return gen_complete(std::stoi(m[1]));
        if (std::regex_match(spec, m, std::regex("K(\\d+),(\\d+)")))
            return gen_biclique(std::stoi(m[1]), std::stoi(m[2]));
        if (std::regex_match(spec, m, std::regex("([CP])(\\d+)"))) {
            int n = std::stoi(m[2]);
            bool cycle = m[1] == "C";
            if (n < (cycle ? 3 : 1))
                throw Failure{ usage, "pattern " + spec + " is too small" };
            std::vector<Edge> e;
            for (int i = 0 ; i + 1 < n ; ++i)
                e.emplace_back(i, i + 1);
            if (cycle)
                e.emplace_back(0, n - 1);
            return Graph(n, e);
        }
        if (std::regex_match(spec, m, std::regex("W(\\d+)")))
            return gen_wall(std::stoi(m[1]));
        if (std::regex_match(spec, m, std::regex("G(\\d+)")))
            return gen_grid(std::stoi(m[1]));
        return graph6_parse(spec);
    }

    auto env_number(const char * name) -> std::optional<long long>
    {
        auto v = std::getenv(name);
        if (! v || ! *v)
            return std::nullopt;
        try {
            std::size_t used = 0;
            auto n = std::stoll(v, &used);
            if (used == std::string(v).size() && n >= 0)
                return n;
        }
        catch (const std::exception &) {
        }
        throw Failure{ usage, std::string(name) + " must be a non-negative integer" };
    }

    /// Budgets after flags and environment are resolved; saved in a run
    /// config so a replay does not depend on the environment.
    struct Budgets
    {
        std::uint64_t node_limit = 0;
        int vertex_budget = 30;
        int time_limit_ms = 0;
        int treewidth_cap = default_treewidth_cap;
    };

    // stops a search after time_limit_ms through the cancel flag
    class Watchdog
    {
        private:
            std::atomic<bool> _cancel{ false };
            std::mutex _mutex;
            std::condition_variable_any _cv;
            std::jthread _thread;

        public:
            explicit Watchdog(int ms)
            {
                if (ms <= 0)
                    return;
                _thread = std::jthread([this, ms] (std::stop_token stop) {
                        std::unique_lock lock(_mutex);
                        if (! _cv.wait_for(lock, stop, std::chrono::milliseconds(ms), [] { return false; }))
                            if (! stop.stop_requested())
                                _cancel = true;
                    });
            }

            auto flag() const -> const std::atomic<bool> * { return &_cancel; }
    };

    struct Shared
    {
        Budgets budgets;
        std::optional<std::uint64_t> node_limit_flag;
        std::optional<int> vertex_budget_flag;
        std::optional<std::string> save_config;
        std::optional<std::string> out;
        std::string format = "graph6";
    };

    auto exit_for(Outcome o) -> int
    {
        switch (o) {
            case Outcome::alignment:      return got_alignment;
            case Outcome::array:          return got_alignment;
            case Outcome::constellation:  return got_constellation;
            case Outcome::biclique:       return got_biclique;
            case Outcome::clique:         return got_clique;
            case Outcome::pinch:          return got_pinch;
            case Outcome::stable_set:     return got_stable_set;
            case Outcome::no_alternative: return got_no_alternative;
        }
        return got_no_alternative;
    }

    auto status_exit(SearchStatus s) -> int
    {
        switch (s) {
            case SearchStatus::found:     return ok;
            case SearchStatus::none:      return invalid;
            case SearchStatus::exhausted: return budget_exhausted;
        }
        return invalid;
    }

    auto must_validate(const Graph & g, const Json & w) -> void
    {
        if (auto v = validate_witness_json(g, w) ; ! v)
            throw std::logic_error("emitted witness does not validate: " + to_string(v));
    }

    // ---- gen -------------------------------------------------------------

    struct GenArgs
    {
        std::string family;
        int t = 3, a = 2, b = 2, s = 3, h = 1, l = 2, d = 1;
        int min_path = 1, max_path = 6, max_extra = 1;
        bool non_plain = false;
        std::uint64_t seed = 0;
        std::string base = "K4";
        std::optional<std::string> witness, model;
    };

    auto cmd_gen(const GenArgs & a, const Shared & sh) -> int
    {
        Graph g;
        std::optional<Json> w;
        std::optional<Array> arr;
        auto & f = a.family;
        if (f == "complete")
            g = gen_complete(a.t);
        else if (f == "biclique")
            g = gen_biclique(a.a, a.b);
        else if (f == "grid")
            g = gen_grid(a.t);
        else if (f == "wall")
            g = gen_wall(a.t);
        else if (f == "subdivision") {
            auto base = pattern(a.base);
            auto spec = random_subdivision_spec(base, a.max_extra, a.seed);
            auto r = gen_subdivision(base, spec, a.seed);
            g = std::move(r.graph);
            w = to_json(r.embedding);
            (*w)["parameters"]["max_extra"] = a.max_extra;
        }
        else if (f == "pd") {
            auto r = gen_pd(a.s);
            g = std::move(r.graph);
            arr = r.array;
            w = to_json(r.array);
        }
        else if (f == "pd-expansion") {
            auto r = gen_pd_expansion(a.s, random_pd_expansion_spec(a.s, a.max_extra, a.seed));
            g = std::move(r.graph);
            arr = r.array;
            w = to_json(r.array);
        }
        else if (f == "array") {
            auto r = gen_array_instance(random_array_profile(a.s, a.h, a.seed),
                    a.seed ? std::optional<std::uint64_t>(a.seed) : std::nullopt);
            g = std::move(r.graph);
            arr = r.array;
            w = to_json(r.array);
        }
        else if (f == "constellation") {
            ConstellationParams p{ a.s, a.l, a.min_path, a.max_path, a.d, ! a.non_plain };
            auto r = gen_random_constellation(p, a.seed);
            g = std::move(r.graph);
            w = to_json(r.constellation, p.plain);
            (*w)["parameters"]["meager"] = a.d;
        }
        else
            throw Failure{ usage, "unknown family '" + f + "'" };

        if (w)
            must_validate(g, *w);
        if (a.model && ! arr)
            throw Failure{ usage, "--model needs a family that carries an array" };

        auto text = sh.format == "dot" ? dot_emit(g) : graph6_emit(g) + "\n";
        emit(sh.out, text);
        if (w) {
            auto path = a.witness ? a.witness : sh.out ? std::optional<std::string>(*sh.out + ".json") : std::nullopt;
            if (path)
                write_atomic(*path, dump(*w));
            else
                std::cout << dump(*w);
        }
        if (a.model) {
            auto m = to_json(array_minor_model(g, *arr));
            must_validate(g, m);
            write_atomic(*a.model, dump(m));
        }
        std::cerr << f << ": " << g.order() << " vertices, " << g.size() << " edges\n";
        return ok;
    }

    // ---- validate --------------------------------------------------------

    auto cmd_validate(const std::string & graph, const std::string & witness) -> int
    {
        auto g = load_graph(graph);
        auto w = load_json(witness);
        auto v = validate_witness_json(g, w);
        std::cout << w.at("kind").get<std::string>() << ": " << to_string(v) << "\n";
        return v ? ok : invalid;
    }

    // ---- find ------------------------------------------------------------

    struct FindArgs
    {
        std::string graph;
        std::vector<int> pinch;
        std::optional<std::string> induced, subdivision, line_subdivision;
        std::optional<int> clean;
        int max_unsubdivided = -1;
    };

    auto cmd_find(const FindArgs & a, const Shared & sh) -> int
    {
        auto g = load_graph(a.graph);
        int queries = ! a.pinch.empty() + bool(a.induced) + bool(a.subdivision) + bool(a.line_subdivision) + bool(a.clean);
        if (queries != 1)
            throw Failure{ usage, "find needs exactly one of --pinch, --induced, --subdivision, --line-subdivision, --clean" };

        Watchdog dog(sh.budgets.time_limit_ms);
        SearchLimits limits{ sh.budgets.node_limit, dog.flag() };
        auto budget = sh.budgets.vertex_budget;

        Json query;
        SearchStatus status = SearchStatus::none;
        std::optional<Json> witness;

        if (! a.pinch.empty()) {
            auto c = a.pinch[0], h = a.pinch[1];
            query = Json{ { "pinch", { c, h } } };
            auto r = find_pinch_witness(g, c, h, limits);
            status = r.status;
            if (r.witness)
                witness = to_json(*r.witness, c, h);
        }
        else if (a.induced) {
            query = Json{ { "induced", *a.induced } };
            auto r = find_induced_embedding(g, pattern(*a.induced), limits);
            status = r.status;
            if (r.witness)
                witness = to_json(*r.witness);
        }
        else if (a.subdivision || a.line_subdivision) {
            SubdivisionBounds bounds;
            bounds.max_unsubdivided = a.max_unsubdivided;
            auto name = a.subdivision ? *a.subdivision : *a.line_subdivision;
            query = Json{ { a.subdivision ? "subdivision" : "line-subdivision", name }, { "budget", budget } };
            if (a.max_unsubdivided >= 0)
                query["max_unsubdivided"] = a.max_unsubdivided;
            if (a.subdivision) {
                auto r = find_induced_subdivision(g, pattern(name), budget, limits, bounds);
                status = r.status;
                if (r.witness)
                    witness = to_json(*r.witness, bounds);
            }
            else {
                auto r = find_induced_line_subdivision(g, pattern(name), budget, limits, bounds);
                status = r.status;
                if (r.witness)
                    witness = to_json(*r.witness);
            }
        }
        else {
            query = Json{ { "clean", *a.clean }, { "budget", budget } };
            auto r = is_t_clean_bounded(g, *a.clean, budget, limits);
            status = r.status == CleanStatus::obstruction ? SearchStatus::found
                : r.status == CleanStatus::exhausted ? SearchStatus::exhausted : SearchStatus::none;
            if (r.embedding)
                witness = to_json(*r.embedding);
            else if (r.wall)
                witness = to_json(*r.wall);
            else if (r.line_wall)
                witness = to_json(*r.line_wall);
            if (witness)
                (*witness)["parameters"]["obstruction"] = r.obstruction;
        }

        // a bounded search that finds nothing only speaks for its budget
        bool bounded = a.subdivision || a.line_subdivision || a.clean;
        std::string word = status == SearchStatus::found ? "found"
            : status == SearchStatus::exhausted ? "exhausted"
            : bounded ? "none-within-budget" : "none";
        if (witness)
            must_validate(g, *witness);
        else
            witness = no_witness_json(g.fingerprint(), query, word);
        emit(sh.out, dump(*witness));
        std::cerr << word << "\n";
        return status_exit(status);
    }

    // ---- tw --------------------------------------------------------------

    struct TwArgs
    {
        std::string graph;
        bool exact = false, upper = false;
        std::optional<std::string> lower_model;
    };

    auto cmd_tw(const TwArgs & a, const Shared & sh) -> int
    {
        auto g = load_graph(a.graph);
        if (int(a.exact) + int(a.upper) + int(bool(a.lower_model)) != 1)
            throw Failure{ usage, "tw needs exactly one of --exact, --upper, --lower-model" };

        Json out;
        int width;
        if (a.lower_model) {
            auto m = minor_model_from_json(load_json(*a.lower_model));
            require_fingerprint(g, m.graph);
            if (auto v = validate_minor_model(g, m) ; ! v) {
                std::cout << "minor-model: " << to_string(v) << "\n";
                return invalid;
            }
            width = treewidth_lower_via_minor(g, m);
            out = treewidth_lower_json(m, width);
            std::cout << "treewidth >= " << width << "\n";
        }
        else {
            auto r = a.exact ? treewidth_exact(g, sh.budgets.treewidth_cap) : treewidth_upper_minfill(g);
            width = r.width;
            out = to_json(r.decomposition);
            out["parameters"]["mode"] = a.exact ? "exact" : "upper";
            std::cout << (a.exact ? "treewidth = " : "treewidth <= ") << width << "\n";
        }
        must_validate(g, out);
        if (sh.out)
            write_atomic(*sh.out, dump(out));
        return ok;
    }

    // ---- extract ---------------------------------------------------------

    struct ExtractArgs
    {
        std::string graph;
        std::optional<std::string> constellation;
        std::string lemma;
        int a = 2, c = 2, d = 1, s = 2, l = 2, t = 2, h = 1;
        bool relaxed = false;
    };

    auto cmd_extract(const ExtractArgs & a, const Shared & sh) -> int
    {
        auto g = load_graph(a.graph);
        Watchdog dog(sh.budgets.time_limit_ms);
        ExtractOptions opt{ a.relaxed, SearchLimits{ sh.budgets.node_limit, dog.flag() } };

        std::optional<Constellation> con;
        if (a.constellation) {
            auto j = load_json(*a.constellation);
            if (j.at("kind") == "array")
                con = array_as_constellation(array_from_json(j));
            else
                con = bundle_from_json(j);
            require_fingerprint(g, con->graph);
        }
        else if (a.lemma != "ramsey")
            throw Failure{ usage, "--lemma " + a.lemma + " needs a constellation file" };

        Json params{ { "lemma", a.lemma }, { "relaxed", a.relaxed } };
        ExtractionResult r;
        if (a.lemma == "ramsey") {
            VertexList within = con ? con->stable : VertexList{};
            params.update(Json{ { "c", a.c }, { "s", a.s } });
            r = ramsey_clique_or_stable(g, a.c, a.s, opt, within);
        }
        else if (a.lemma == "l42") {
            params.update(Json{ { "a", a.a }, { "d", a.d }, { "s", a.s }, { "l", a.l } });
            r = alignment_or_constellation(g, *con, a.a, a.d, a.s, a.l, opt);
        }
        else if (a.lemma == "l43") {
            params.update(Json{ { "a", a.a }, { "c", a.c }, { "d", a.d }, { "h", a.h } });
            r = pinched_alignment_or_witness(g, *con, a.a, a.c, a.d, a.h, opt);
        }
        else if (a.lemma == "l44") {
            params.update(Json{ { "l", a.l }, { "t", a.t } });
            r = meager_or_biclique(g, *con, a.l, a.t, opt);
            if (r.outcome == Outcome::constellation)
                params["meager"] = a.t;
        }
        else if (a.lemma == "array") {
            params.update(Json{ { "c", a.c }, { "h", a.h }, { "s", a.s }, { "t", a.t } });
            r = array_or_witness(g, *con, a.c, a.h, a.s, a.t, opt);
        }
        else
            throw Failure{ usage, "unknown lemma '" + a.lemma + "'" };

        auto out = to_json(r, g.fingerprint(), params);
        must_validate(g, out);
        emit(sh.out, dump(out));
        std::cerr << to_string(r.outcome) << "\n";
        return exit_for(r.outcome);
    }

    // ---- certify ---------------------------------------------------------

    auto cmd_certify(const std::string & graph, const std::string & array, const Shared & sh) -> int
    {
        auto g = load_graph(graph);
        auto arr = array_from_json(load_json(array));
        require_fingerprint(g, arr.graph);
        if (auto v = validate_array(g, arr) ; ! v) {
            std::cout << "array: " << to_string(v) << "\n";
            return invalid;
        }
        Watchdog dog(sh.budgets.time_limit_ms);
        CertifyOptions opt{ sh.budgets.vertex_budget, SearchLimits{ sh.budgets.node_limit, dog.flag() } };
        auto rep = certify_array_properties(g, arr, opt);

        std::cout << "array s=" << rep.s << " h=" << rep.h << " on " << rep.vertices.size() << " vertices\n";
        bool exhausted = false;
        for (auto & c : rep.checks) {
            std::cout << "  [" << to_string(c.status) << "] " << c.name;
            if (c.budget)
                std::cout << " (budget " << c.budget << ")";
            if (! c.detail.empty())
                std::cout << ": " << c.detail;
            std::cout << "\n";
            exhausted = exhausted || c.status == CheckStatus::exhausted;
        }
        std::cout << "treewidth lower bound " << rep.treewidth_lower_bound << "\n";
        if (sh.out)
            write_atomic(*sh.out, dump(to_json(rep, arr, opt.vertex_budget)));
        if (rep.all_pass())
            return ok;
        bool failed = std::any_of(rep.checks.begin(), rep.checks.end(),
                [] (const CertifyCheck & c) { return c.status == CheckStatus::fail; });
        return failed ? invalid : budget_exhausted;
    }

    // ---- driver ----------------------------------------------------------

    auto run(std::vector<std::string> args, const std::optional<Budgets> & forced) -> int;

    auto save_config(const std::string & path, std::vector<std::string> args, const Shared & sh) -> void
    {
        // drop --save-config and its value so a replay does not rewrite it
        for (std::size_t i = 0 ; i < args.size() ; ) {
            if (args[i] == "--save-config")
                args.erase(args.begin() + i, args.begin() + std::min(args.size(), i + 2));
            else if (args[i].rfind("--save-config=", 0) == 0)
                args.erase(args.begin() + i);
            else
                ++i;
        }
        Json cfg{
            { "schema_version", schema_version },
            { "kind", "run-config" },
            { "argv", args },
            { "budgets", {
                { "node_limit", sh.budgets.node_limit },
                { "vertex_budget", sh.budgets.vertex_budget },
                { "time_limit_ms", sh.budgets.time_limit_ms },
                { "treewidth_cap", sh.budgets.treewidth_cap } } },
            { "format", sh.format },
            { "output", sh.out ? Json(*sh.out) : Json(nullptr) } };
        write_atomic(path, dump(cfg));
    }

    auto cmd_run(const std::string & path) -> int
    {
        auto cfg = load_json(path);
        if (! cfg.is_object() || cfg.value("schema_version", 0) != schema_version)
            throw SchemaError(path + ": unsupported run-config schema_version");
        if (cfg.value("kind", "") != "run-config")
            throw SchemaError(path + ": not a run-config");
        auto args = cfg.at("argv").get<std::vector<std::string>>();
        if (! args.empty() && args[0] == "run")
            throw SchemaError(path + ": a run-config cannot replay another one");
        auto & b = cfg.at("budgets");
        Budgets budgets{ b.at("node_limit").get<std::uint64_t>(), b.at("vertex_budget").get<int>(),
            b.at("time_limit_ms").get<int>(), b.at("treewidth_cap").get<int>() };
        return run(std::move(args), budgets);
    }

    auto run(std::vector<std::string> args, const std::optional<Budgets> & forced) -> int
    {
        CLI::App app{ "Witness-producing toolkit for pinched graphs and (s,h)-arrays" };
        app.require_subcommand(1);
        app.set_version_flag("--version", "pinched 1.0");

        Shared sh;
        std::optional<int> time_limit, tw_cap;
        auto common = [&] (CLI::App * sub) {
            sub->add_option("-o,--out", sh.out, "output file (default: stdout)");
            sub->add_option("--node-limit", sh.node_limit_flag, "search node limit, 0 = none (env PINCHED_NODE_LIMIT)");
            sub->add_option("--vertex-budget,--budget", sh.vertex_budget_flag, "vertex budget for bounded searches (env PINCHED_VERTEX_BUDGET)");
            sub->add_option("--time-limit", time_limit, "wall-clock limit in ms, 0 = none");
            sub->add_option("--save-config", sh.save_config, "write a run config that replays this command");
        };

        GenArgs gen;
        auto * g = app.add_subcommand("gen", "generate a graph (graph6 or DOT) and its witness");
        g->set_help_flag("--help", "print this help");   // --h is a parameter
        g->add_option("family", gen.family, "complete|biclique|grid|wall|subdivision|pd|pd-expansion|array|constellation")->required();
        g->add_option("--t", gen.t);
        g->add_option("--a", gen.a);
        g->add_option("--b", gen.b);
        g->add_option("--s", gen.s);
        g->add_option("--h", gen.h);
        g->add_option("--l", gen.l);
        g->add_option("--d", gen.d, "meagerness of a generated constellation");
        g->add_option("--min-path", gen.min_path);
        g->add_option("--max-path", gen.max_path);
        g->add_option("--max-extra", gen.max_extra, "subdivision vertices per edge, at most");
        g->add_option("--base", gen.base, "base graph for subdivision (pattern name, graph6 or @file)");
        g->add_option("--seed", gen.seed);
        g->add_flag("--non-plain", gen.non_plain);
        g->add_option("--witness", gen.witness, "witness sidecar (default: <out>.json)");
        g->add_option("--model", gen.model, "also write the array's K_{s,s} minor model");
        g->add_option("--format", sh.format)->check(CLI::IsMember({ "graph6", "dot" }));
        common(g);

        std::string v_graph, v_witness;
        auto * v = app.add_subcommand("validate", "check a witness against a graph");
        v->add_option("graph", v_graph)->required();
        v->add_option("witness", v_witness)->required();

        FindArgs find;
        auto * f = app.add_subcommand("find", "run an oracle search");
        f->add_option("graph", find.graph)->required();
        f->add_option("--pinch", find.pinch, "C H")->expected(2);
        f->add_option("--induced", find.induced, "pattern");
        f->add_option("--subdivision", find.subdivision, "base pattern");
        f->add_option("--line-subdivision", find.line_subdivision, "base pattern");
        f->add_option("--clean", find.clean, "t");
        f->add_option("--max-unsubdivided", find.max_unsubdivided);
        common(f);

        TwArgs tw;
        auto * t = app.add_subcommand("tw", "treewidth: exact, min-fill upper bound, or minor-model lower bound");
        t->add_option("graph", tw.graph)->required();
        t->add_flag("--exact", tw.exact);
        t->add_flag("--upper", tw.upper);
        t->add_option("--lower-model", tw.lower_model, "minor-model witness");
        t->add_option("--cap", tw_cap, "vertex cap for --exact");
        common(t);

        ExtractArgs ex;
        auto * e = app.add_subcommand("extract", "run an extractor on a constellation");
        e->set_help_flag("--help", "print this help");
        e->add_option("graph", ex.graph)->required();
        e->add_option("constellation", ex.constellation, "constellation or array witness");
        e->add_option("--lemma", ex.lemma, "ramsey|l42|l43|l44|array")->required()
            ->check(CLI::IsMember({ "ramsey", "l42", "l43", "l44", "array" }));
        e->add_option("--a", ex.a);
        e->add_option("--c", ex.c);
        e->add_option("--d", ex.d);
        e->add_option("--s", ex.s);
        e->add_option("--l", ex.l);
        e->add_option("--t", ex.t);
        e->add_option("--h", ex.h);
        e->add_flag("--relaxed", ex.relaxed, "accept inputs below the size bound");
        common(e);

        std::string c_graph, c_array;
        auto * c = app.add_subcommand("certify", "check an array's cleanness, pinch and treewidth properties");
        c->add_option("graph", c_graph)->required();
        c->add_option("array", c_array)->required();
        common(c);

        std::string r_config;
        auto * r = app.add_subcommand("run", "replay a saved run config");
        r->add_option("config", r_config)->required();

        std::vector<std::string> argv_store{ "pinched" };
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<char *> argv;
        for (auto & s : argv_store)
            argv.push_back(s.data());
        try {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & err) {
            auto code = app.exit(err);
            return code == 0 ? ok : usage;
        }

        if (forced)
            sh.budgets = *forced;
        else {
            if (auto n = env_number("PINCHED_NODE_LIMIT"))
                sh.budgets.node_limit = std::uint64_t(*n);
            if (auto n = env_number("PINCHED_VERTEX_BUDGET"))
                sh.budgets.vertex_budget = int(*n);
            if (sh.node_limit_flag)
                sh.budgets.node_limit = *sh.node_limit_flag;
            if (sh.vertex_budget_flag)
                sh.budgets.vertex_budget = *sh.vertex_budget_flag;
            if (time_limit)
                sh.budgets.time_limit_ms = *time_limit;
            if (tw_cap)
                sh.budgets.treewidth_cap = *tw_cap;
        }
        if (sh.save_config)
            save_config(*sh.save_config, args, sh);

        if (*g)
            return cmd_gen(gen, sh);
        if (*v)
            return cmd_validate(v_graph, v_witness);
        if (*f)
            return cmd_find(find, sh);
        if (*t)
            return cmd_tw(tw, sh);
        if (*e)
            return cmd_extract(ex, sh);
        if (*c)
            return cmd_certify(c_graph, c_array, sh);
        return cmd_run(r_config);
    }
}

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(args, std::nullopt);
    }
    catch (const Failure & f) {
        std::cerr << "pinched: " << f.message << "\n";
        return f.code;
    }
    catch (const IoError & e) {
        std::cerr << "pinched: " << e.what() << "\n";
        return io_error;
    }
    catch (const Graph6Error & e) {
        std::cerr << "pinched: graph6: " << e.what() << "\n";
        return parse_error;
    }
    catch (const SchemaError & e) {
        std::cerr << "pinched: witness: " << e.what() << "\n";
        return parse_error;
    }
    catch (const nlohmann::json::exception & e) {
        std::cerr << "pinched: witness: " << e.what() << "\n";
        return parse_error;
    }
    catch (const FingerprintMismatch & e) {
        std::cerr << "pinched: fingerprint: " << e.what() << "\n";
        return parse_error;
    }
    catch (const TreewidthCapExceeded & e) {
        std::cerr << "pinched: " << e.what() << "\n";
        return cap_exceeded;
    }
    catch (const PreconditionFailed & e) {
        std::cerr << "pinched: precondition " << e.clause() << ": " << e.what() << "\n";
        return usage;
    }
    catch (const InvalidWitness & e) {
        std::cerr << "pinched: invalid: " << e.what() << "\n";
        return invalid;
    }
    catch (const GeneratorError & e) {
        std::cerr << "pinched: " << e.what() << "\n";
        return usage;
    }
    catch (const GraphError & e) {
        std::cerr << "pinched: graph: " << e.what() << "\n";
        return parse_error;
    }
    catch (const std::exception & e) {
        std::cerr << "pinched: internal error: " << e.what() << "\n";
        return 70;
    }
}
