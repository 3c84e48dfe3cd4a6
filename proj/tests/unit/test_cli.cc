#include <doctest.h>

#include "fixtures.hh"

#include <pinched/generators.hh>
#include <pinched/graph6.hh>
#include <pinched/witness_json.hh>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace pinched;
namespace fs = std::filesystem;

namespace
{
    auto work(const std::string & name) -> std::string
    {
        fs::create_directories(PINCHED_WORK_DIR);
        return (fs::path(PINCHED_WORK_DIR) / name).string();
    }

    // runs the tool, stdout and stderr into a log; returns the exit status
    auto cli(const std::string & args, const std::string & env = "") -> int
    {
        auto cmd = env + (env.empty() ? "" : " ") + "\"" + PINCHED_CLI + "\" " + args + " > \"" + work("last.log") + "\" 2>&1";
        int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    }

    auto slurp(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto last_log() -> std::string
    {
        return slurp(work("last.log"));
    }

    auto write(const std::string & name, const std::string & data) -> std::string
    {
        auto path = work(name);
        std::ofstream(path) << data;
        return path;
    }

    auto read_json(const std::string & path) -> Json
    {
        return Json::parse(slurp(path));
    }
}

TEST_CASE("gen and validate")
{
    auto g = work("pd6.g6");
    REQUIRE(cli("gen pd --s 6 -o " + g) == 0);
    CHECK(graph6_parse(slurp(g)) == gen_pd(6).graph);
    CHECK(cli("validate " + g + " " + g + ".json") == 0);
    CHECK(last_log().find("array: valid") != std::string::npos);

    // swapping two stable vertices breaks the order
    auto w = read_json(g + ".json");
    std::swap(w["payload"]["order"][0], w["payload"]["order"][1]);
    auto bad = write("pd6-transposed.json", w.dump());
    CHECK(cli("validate " + g + " " + bad) == 1);
    CHECK(last_log().find("(AL)") != std::string::npos);

    auto other = work("pd5.g6");
    REQUIRE(cli("gen pd --s 5 -o " + other) == 0);
    CHECK(cli("validate " + other + " " + g + ".json") == 2);

    CHECK(cli("validate " + write("junk.g6", "not graph6\n") + " " + g + ".json") == 2);
    CHECK(cli("validate " + work("missing.g6") + " " + g + ".json") == 5);
    CHECK(cli("validate " + g) == 6);
    CHECK(cli("gen teapot") == 6);

    auto dot = work("w3.dot");
    REQUIRE(cli("gen wall --t 3 --format dot -o " + dot) == 0);
    CHECK(slurp(dot).find("graph") != std::string::npos);

    for (auto family : { "pd-expansion --s 3 --max-extra 2 --seed 4", "array --s 3 --h 2 --seed 2",
                         "constellation --s 3 --l 2 --d 2 --min-path 2 --max-path 5 --seed 3",
                         "subdivision --base W3 --max-extra 2 --seed 9" }) {
        CAPTURE(family);
        auto path = work("family.g6");
        REQUIRE(cli(std::string("gen ") + family + " -o " + path) == 0);
        CHECK(cli("validate " + path + " " + path + ".json") == 0);
    }
}

TEST_CASE("find")
{
    auto g = work("pd4.g6");
    REQUIRE(cli("gen pd --s 4 -o " + g) == 0);
    auto out = work("pinch.json");
    CHECK(cli("find " + g + " --pinch 2 1 -o " + out) == 0);
    CHECK(read_json(out)["kind"] == "pinch");
    CHECK(cli("validate " + g + " " + out) == 0);

    CHECK(cli("find " + g + " --pinch 3 1 -o " + out) == 1);
    CHECK(read_json(out)["kind"] == "no-witness");
    CHECK(read_json(out)["parameters"]["status"] == "none");

    auto pd5 = work("pd5.g6");
    REQUIRE(cli("gen pd --s 5 -o " + pd5) == 0);
    CHECK(cli("find " + pd5 + " --induced K4") == 1);
    CHECK(cli("find " + pd5 + " --induced K2,3") == 1);
    CHECK(cli("find " + pd5 + " --induced P4 -o " + out) == 0);
    CHECK(cli("validate " + pd5 + " " + out) == 0);

    CHECK(cli("find " + pd5 + " --pinch 2 1 --node-limit 3") == 3);
    CHECK(cli("find " + pd5) == 6);
    CHECK(cli("find " + pd5 + " --pinch 2 1 --induced K4") == 6);

    CHECK(cli("find " + pd5 + " --subdivision K4 --max-unsubdivided 1 --budget 12") == 1);
    CHECK(last_log().find("none-within-budget") != std::string::npos);
    // the environment supplies the budget when no flag does
    CHECK(cli("find " + pd5 + " --subdivision K4 --max-unsubdivided 1 -o " + out, "PINCHED_VERTEX_BUDGET=11") == 1);
    CHECK(read_json(out)["parameters"]["query"]["budget"] == 11);
    CHECK(cli("find " + pd5 + " --subdivision K4 --budget 9 -o " + out, "PINCHED_VERTEX_BUDGET=11") == 1);
    CHECK(read_json(out)["parameters"]["query"]["budget"] == 9);
    CHECK(cli("find " + pd5 + " --pinch 2 1", "PINCHED_NODE_LIMIT=banana") == 6);
}

TEST_CASE("tw")
{
    auto k33 = work("k33.g6");
    REQUIRE(cli("gen biclique --a 3 --b 3 -o " + k33) == 0);
    CHECK(cli("tw " + k33 + " --exact") == 0);
    CHECK(last_log().find("treewidth = 3") != std::string::npos);

    auto w3 = work("w3.g6");
    REQUIRE(cli("gen wall --t 3 -o " + w3) == 0);
    auto td = work("w3-td.json");
    CHECK(cli("tw " + w3 + " --exact -o " + td) == 0);
    CHECK(read_json(td)["payload"]["width"] == 3);
    CHECK(cli("validate " + w3 + " " + td) == 0);
    CHECK(cli("tw " + w3 + " --upper") == 0);

    auto pd6 = work("pd6m.g6");
    auto model = work("pd6-model.json");
    REQUIRE(cli("gen pd --s 6 -o " + pd6 + " --model " + model) == 0);
    CHECK(cli("tw " + pd6 + " --exact --cap 20") == 4);
    CHECK(cli("tw " + pd6 + " --lower-model " + model) == 0);
    CHECK(last_log().find("treewidth >= 6") != std::string::npos);
    CHECK(cli("tw " + pd6 + " --exact --upper") == 6);
}

TEST_CASE("extract")
{
    auto g = work("x-pd4.g6");
    REQUIRE(cli("gen pd --s 4 -o " + g) == 0);
    auto out = work("x.json");
    // one path of PD_4 with its stable set is a 1-meager (4,1)-constellation
    auto pd4 = gen_pd(4);
    Constellation one{ pd4.graph.fingerprint(), pd4.array.order, { pd4.array.paths[2] } };
    auto oc = write("x-one.json", to_json(one).dump());
    CHECK(cli("extract " + g + " " + oc + " --lemma l42 --a 4 --d 1 --s 4 --l 1 -o " + out) == 10);
    CHECK(read_json(out)["kind"] == "alignment");
    CHECK(cli("validate " + g + " " + out) == 0);

    CHECK(cli("extract " + g + " " + g + ".json --lemma array --c 3 --h 1 --s 4 --t 2 --relaxed -o " + out) == 10);
    CHECK(read_json(out)["kind"] == "array");
    CHECK(cli("validate " + g + " " + out) == 0);

    // strict mode refuses the small input
    CHECK(cli("extract " + g + " " + g + ".json --lemma array --c 3 --h 1 --s 4 --t 2") == 6);
    CHECK(cli("extract " + g + " --lemma l42") == 6);

    auto planted = fixtures::planted_heavy(2, 16, 3, false);
    auto pg = write("planted.g6", graph6_emit(planted.graph) + "\n");
    auto pc = write("planted.json", to_json(planted.constellation, true).dump());
    CHECK(cli("extract " + pg + " " + pc + " --lemma l44 --l 3 --t 2 -o " + out) == 12);
    CHECK(read_json(out)["kind"] == "embedding");
    CHECK(read_json(out)["parameters"]["outcome"] == "biclique");
    CHECK(cli("validate " + pg + " " + out) == 0);

    Graph empty(9, std::span<const Edge>{});
    auto eg = write("empty9.g6", graph6_emit(empty) + "\n");
    CHECK(cli("extract " + eg + " --lemma ramsey --c 3 --s 2 -o " + out) == 15);
    CHECK(cli("validate " + eg + " " + out) == 0);
}

TEST_CASE("certify")
{
    for (int s : { 3, 4 }) {
        auto g = work("c-pd" + std::to_string(s) + ".g6");
        REQUIRE(cli("gen pd --s " + std::to_string(s) + " -o " + g) == 0);
        auto rep = work("report.json");
        CHECK(cli("certify " + g + " " + g + ".json --budget 18 -o " + rep) == 0);
        CHECK(read_json(rep)["kind"] == "certify-report");
        CHECK(cli("validate " + g + " " + rep) == 0);
    }

    auto g = work("c-pd3.g6");
    auto w = read_json(g + ".json");
    w["payload"]["paths"][0] = w["payload"]["paths"][1];
    auto bad = write("c-bad.json", w.dump());
    CHECK(cli("certify " + g + " " + bad) == 1);
}

TEST_CASE("saved configs replay")
{
    auto g = work("r-pd4.g6");
    REQUIRE(cli("gen pd --s 4 -o " + g) == 0);
    auto cfg = work("run.json");
    auto out = work("r-out.json");
    CHECK(cli("find " + g + " --pinch 2 1 --node-limit 100000 -o " + out + " --save-config " + cfg) == 0);
    auto c = read_json(cfg);
    CHECK(c["kind"] == "run-config");
    CHECK(c["budgets"]["node_limit"] == 100000);
    for (auto & arg : c["argv"])
        CHECK(arg != "--save-config");

    auto first = slurp(out);
    fs::remove(out);
    CHECK(cli("run " + cfg) == 0);
    CHECK(slurp(out) == first);

    auto broken = write("run-bad.json", R"({"schema_version": 7, "kind": "run-config"})");
    CHECK(cli("run " + broken) == 2);
}
