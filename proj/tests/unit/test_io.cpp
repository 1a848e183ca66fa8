#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "psep/instance_io.hpp"

using namespace psep;

namespace {

InstanceFile parse(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

std::string render(const InstanceFile& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

std::string message_of(const std::string& text) {
    try {
        parse(text);
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("instances parse labels in order of first appearance") {
    InstanceFile inst = parse("# sample\npsep 4 3\ne alpha beta\ne beta gamma\nv delta  # isolated\ne alpha gamma\n");
    CHECK(inst.labels == std::vector<std::string>{"alpha", "beta", "gamma", "delta"});
    CHECK(inst.graph.num_vertices() == 4);
    CHECK(inst.graph.num_edges() == 3);
    CHECK(inst.graph.has_edge(0, 1));
    CHECK(inst.graph.has_edge(0, 2));
    CHECK(inst.label_id("gamma") == 2);
    CHECK(inst.label_id("nope") == -1);
}

TEST_CASE("serialization is canonical and round-trips") {
    InstanceFile inst = parse("psep 4 3\ne c a\nv d\ne b a\ne c b\n");
    std::string text = render(inst);
    CHECK(text == "psep 4 3\nv d\ne c a\ne c b\ne a b\n");
    InstanceFile again = parse(text);
    CHECK(render(again) == text);
    CHECK(again.graph.num_edges() == 3);
}

TEST_CASE("duplicate edges collapse but still count as lines") {
    InstanceFile inst = parse("psep 2 3\ne a b\ne a b\ne b a\n");
    CHECK(inst.graph.num_edges() == 1);
    CHECK(render(inst) == "psep 2 1\ne a b\n");
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(message_of("psep 2 1\ne a a\n") == "line 2: self loop on 'a'");
    CHECK(message_of("psep 1 0\nx what\n") == "line 2: unknown directive 'x'");
    CHECK(message_of("graph 3 2\n") == "line 1: expected header 'psep <n> <m>'");
    CHECK(message_of("psep two 0\n") ==
          "line 1: expected a nonnegative integer, got 'two'");
    CHECK(message_of("psep 2 1\ne a\n") == "line 2: expected 'e <a> <b>'");
    CHECK(message_of("") == "missing 'psep <n> <m>' header");
    CHECK(message_of("psep 3 1\ne a b\n") ==
          "header declares 3 vertices but the file uses 2 distinct labels");
    CHECK(message_of("psep 2 2\ne a b\n") ==
          "header declares 2 edges but the file has 1 edge lines");
}

TEST_CASE("default labels count up from zero") {
    Graph p3(3, {{0, 1}, {1, 2}});
    InstanceFile inst = make_instance(p3);
    CHECK(render(inst) == "psep 3 2\ne 0 1\ne 1 2\n");
}

TEST_CASE("separator witnesses round-trip") {
    InstanceFile inst = parse("psep 3 2\ne a b\ne b c\n");
    std::ostringstream out;
    write_separator_witness(out, inst, VertexSet{1});
    CHECK(out.str() == "psepw separator\ns b\n");

    std::istringstream in(out.str());
    WitnessFile w = read_witness(in, inst);
    CHECK(w.kind == WitnessFile::separator);
    CHECK(w.separator_vertices == VertexSet{1});
}

TEST_CASE("crown witnesses round-trip with stars and leaves") {
    InstanceFile inst = parse("psep 5 4\ne hub l1\ne hub l2\ne hub l3\ne hub spare\n");
    CrownDecomposition cd;
    cd.p = 1;
    cd.c_set = VertexSet{0};
    cd.i_set = VertexSet{1, 2, 3};
    cd.j_set = VertexSet{4};
    CrownStar star;
    star.center = 0;
    star.leaf_components = {VertexSet{1}, VertexSet{2}, VertexSet{3}};
    star.total_weight = 3;
    cd.witness.push_back(star);

    std::ostringstream out;
    write_crown_witness(out, inst, cd);
    CHECK(out.str() ==
          "psepw crown\np 1\ni l1\ni l2\ni l3\nc hub\nj spare\n"
          "star hub\nleaf l1\nleaf l2\nleaf l3\n");

    std::istringstream in(out.str());
    WitnessFile w = read_witness(in, inst);
    CHECK(w.kind == WitnessFile::crown);
    CHECK(w.decomposition.p == 1);
    CHECK(w.decomposition.c_set == cd.c_set);
    CHECK(w.decomposition.i_set == cd.i_set);
    CHECK(w.decomposition.j_set == cd.j_set);
    REQUIRE(w.decomposition.witness.size() == 1);
    CHECK(w.decomposition.witness[0].center == 0);
    CHECK(w.decomposition.witness[0].total_weight == 3);
    CHECK(w.decomposition.witness[0].leaf_components == star.leaf_components);
}

TEST_CASE("witness parse errors") {
    InstanceFile inst = parse("psep 2 1\ne a b\n");
    auto fails_with = [&](const std::string& text, const std::string& want) {
        std::istringstream in(text);
        try {
            read_witness(in, inst);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == want);
            return;
        }
        FAIL("expected a parse error for: " << text);
    };
    fails_with("psepw nonsense\n", "line 1: expected header 'psepw separator' or 'psepw crown'");
    fails_with("psepw separator\ns zz\n", "line 2: unknown vertex label 'zz'");
    fails_with("psepw crown\np 1\nleaf a\n", "line 3: leaf line before any star line");
    fails_with("psepw crown\ni a\n", "crown witness is missing its 'p' line");
    fails_with("", "missing 'psepw' header");
}

TEST_CASE("text reports print stable key-value lines") {
    Report r;
    r.command = "kernelize";
    r.mode = "linear";
    r.p = 2;
    r.k = 3;
    r.verdict = "reduced";
    r.original_vertices = 20;
    r.original_edges = 31;
    r.kernel_vertices = 8;
    r.kernel_edges = 9;
    r.size_bound = 36;
    r.budget_used = 1;
    r.forced_labels = {"hub", "x"};
    r.extension_steps = 0;
    r.crown_rounds = 2;
    r.eliminations = 5;
    r.repacked_bases = 0;
    r.components_processed = 1;
    r.stripped_components = 0;

    std::ostringstream out;
    write_report_text(out, r);
    CHECK(out.str() ==
          "command: kernelize\nmode: linear\np: 2\nk: 3\nverdict: reduced\n"
          "original_vertices: 20\noriginal_edges: 31\nkernel_vertices: 8\n"
          "kernel_edges: 9\nsize_bound: 36\nbudget_used: 1\nforced_count: 2\n"
          "forced: hub x\nextension_steps: 0\ncrown_rounds: 2\neliminations: 5\n"
          "repacked_bases: 0\ncomponents_processed: 1\nstripped_components: 0\n");
}

TEST_CASE("json reports carry the same fields") {
    Report r;
    r.command = "solve";
    r.mode = "linear";
    r.p = 1;
    r.verdict = "ok";
    r.original_vertices = 5;
    r.original_edges = 4;
    r.separator_labels = std::vector<std::string>{"1", "3"};

    std::ostringstream out;
    write_report_json(out, r);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["command"] == "solve");
    CHECK(j["p"] == 1);
    CHECK(j["verdict"] == "ok");
    CHECK(j["separator"] == nlohmann::json::array({"1", "3"}));
    CHECK(j["forced"] == nlohmann::json::array());
    CHECK_FALSE(j.contains("k"));
    CHECK_FALSE(j.contains("wall_ms"));
}
