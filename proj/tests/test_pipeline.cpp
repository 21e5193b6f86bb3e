#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "keypartx/pipeline.hpp"

using namespace keypartx;
namespace fs = std::filesystem;

namespace {

const fs::path kWorkRoot = "/tmp/kx_pipe_test";

fs::path fresh_dir(const std::string& name) {
    fs::path dir = kWorkRoot / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
}

const char* kWorkedCsv =
    "id,text\n"
    "1,\"Thai food was great, delicousr and not expensive, we loved it. "
    "We visited 3 beach resorts , they are highly recommended... "
    "We had \"\"Fire-Vodka\"\" !!!\"\n";

// One-document corpus: every pair appears once, so keep weight-1 edges.
PipelineConfig worked_config(const fs::path& dir) {
    PipelineConfig cfg;
    cfg.input = write_file(dir / "corpus.csv", kWorkedCsv);
    cfg.k_weight = 1;
    cfg.k_core = 0;
    cfg.out_dir = (dir / "out").string();
    return cfg;
}

bool has_pair(const std::vector<MatchPair>& pairs, const std::string& mod, const std::string& noun,
              MatchPattern pattern) {
    for (const auto& p : pairs)
        if (p.modifier == mod && p.noun == noun && p.pattern == pattern) return true;
    return false;
}

const std::vector<std::string> kArtifacts = {
    "graph_full.json", "graph_full.graphml", "graph_full.dot",
    "graph_reduced.json", "graph_reduced.graphml", "graph_reduced.dot",
    "partition.json", "report.csv", "run_manifest.json"};

}  // namespace

TEST_CASE("nn mode and unit names parse") {
    CHECK(parse_nn_mode("off") == NnMode::off);
    CHECK(parse_nn_mode("restricted") == NnMode::restricted);
    CHECK(parse_nn_mode("greedy") == NnMode::greedy);
    CHECK_THROWS_AS(parse_nn_mode("all"), argument_error);

    CHECK(parse_unit("sentence") == CoocUnit::sentence);
    CHECK(parse_unit("document") == CoocUnit::document);
    CHECK_THROWS_AS(parse_unit("corpus"), argument_error);
}

TEST_CASE("config validation rejects bad settings") {
    PipelineConfig ok;
    ok.input = "corpus.csv";
    CHECK_NOTHROW(validate_config(ok));

    PipelineConfig cfg = ok;
    cfg.input.clear();
    CHECK_THROWS_AS(validate_config(cfg), argument_error);

    cfg = ok;
    cfg.format = "tsv";
    CHECK_THROWS_AS(validate_config(cfg), argument_error);

    cfg = ok;
    cfg.k_weight = -1;
    CHECK_THROWS_AS(validate_config(cfg), argument_error);

    cfg = ok;
    cfg.gamma = 0.0;
    CHECK_THROWS_AS(validate_config(cfg), argument_error);
    cfg.gamma = -2.0;
    CHECK_THROWS_AS(validate_config(cfg), argument_error);

    cfg = ok;
    cfg.workers = 0;
    CHECK_THROWS_AS(validate_config(cfg), argument_error);

    cfg = ok;
    cfg.exports.clear();
    CHECK_THROWS_AS(validate_config(cfg), argument_error);
}

TEST_CASE("data dir honours the environment override") {
    const char* old = std::getenv("KEYPARTX_DATA_DIR");
    std::string saved = old ? old : "";

    setenv("KEYPARTX_DATA_DIR", "/tmp/kx_other_data", 1);
    CHECK(data_dir() == "/tmp/kx_other_data");

    setenv("KEYPARTX_DATA_DIR", "", 1);  // empty value falls back
    CHECK(data_dir() == KEYPARTX_BUNDLED_DATA_DIR);

    unsetenv("KEYPARTX_DATA_DIR");
    CHECK(data_dir() == KEYPARTX_BUNDLED_DATA_DIR);

    if (old) setenv("KEYPARTX_DATA_DIR", saved.c_str(), 1);
}

TEST_CASE("analyze_document runs the full text path") {
    PipelineConfig cfg;
    PipelineResources res = load_resources(cfg);

    Document doc = analyze_document("d", "Thai food was delicousr.", res);
    REQUIRE(doc.sentences.size() == 1);
    std::vector<std::string> labels;
    for (const auto& t : doc.sentences[0])
        if (!t.label.empty()) labels.push_back(t.label);
    CHECK(labels == std::vector<std::string>{"thaifood2n", "be2v", "delicious2a"});
}

TEST_CASE("worked example end to end") {
    fs::path dir = fresh_dir("worked");
    PipelineConfig cfg = worked_config(dir);
    PipelineResult result = run_pipeline(cfg);

    CHECK(result.exit_status == exit_ok);
    REQUIRE(result.documents.size() == 1);
    CHECK(result.documents[0].id == "1");
    CHECK(result.token_count == result.documents[0].token_count());
    CHECK(result.token_count > 0);

    // matcher output still includes pairs the conative filter later drops
    CHECK(has_pair(result.pairs, "great2a", "thaifood2n", MatchPattern::N_COP_A));
    CHECK(has_pair(result.pairs, "delicious2a", "thaifood2n", MatchPattern::N_COP_A));
    CHECK(has_pair(result.pairs, "notexpensive2a", "thaifood2n", MatchPattern::N_COP_A));
    CHECK(has_pair(result.pairs, "love2v", "thaifood2n", MatchPattern::V_N));
    CHECK(has_pair(result.pairs, "visit2v", "beachresort2n", MatchPattern::V_N));
    CHECK(has_pair(result.pairs, "recommend2v", "beachresort2n", MatchPattern::N_PASS_V));
    for (const auto& p : result.pairs) CHECK(p.doc_id == "1");

    REQUIRE(result.full.directed_edges.size() == 5);
    CHECK(result.full.directed_edges.at({"great2a", "thaifood2n"}) == 1);
    CHECK(result.full.directed_edges.at({"delicious2a", "thaifood2n"}) == 1);
    CHECK(result.full.directed_edges.at({"notexpensive2a", "thaifood2n"}) == 1);
    CHECK(result.full.directed_edges.at({"love2v", "thaifood2n"}) == 1);
    CHECK(result.full.directed_edges.at({"recommend2v", "beachresort2n"}) == 1);
    CHECK(result.full.directed_edges.count({"visit2v", "beachresort2n"}) == 0);

    REQUIRE(result.full.undirected_edges.size() == 3);
    CHECK(result.full.undirected_edges.at({"beachresort2n", "firevodka2n"}) == 1);
    CHECK(result.full.undirected_edges.at({"beachresort2n", "thaifood2n"}) == 1);
    CHECK(result.full.undirected_edges.at({"firevodka2n", "thaifood2n"}) == 1);
    CHECK(result.full.node_count() == 8);

    // k-weight 1 and k-core 0 keep the whole graph
    CHECK(result.after_k_weight.directed_edges == result.full.directed_edges);
    CHECK(result.reduced.node_count() == 8);
    REQUIRE(result.partition.has_value());
    CHECK(result.partition->assignment.size() == 8);

    CHECK(result.corpus_checksum == fnv1a(read_text_file(cfg.input)));

    fs::path out = cfg.out_dir;
    for (const auto& name : kArtifacts) CHECK(fs::exists(out / name));

    PerceptionGraph reloaded = import_graph_json(read_text_file((out / "graph_full.json").string()));
    CHECK(reloaded.nodes == result.full.nodes);
    CHECK(reloaded.directed_edges == result.full.directed_edges);
    CHECK(reloaded.undirected_edges == result.full.undirected_edges);

    auto manifest = nlohmann::json::parse(read_text_file((out / "run_manifest.json").string()));
    CHECK(manifest["tool"] == "keypartx");
    CHECK(manifest["config"]["input"] == cfg.input);
    CHECK(manifest["config"]["nn_mode"] == "greedy");
    CHECK(manifest["config"]["unit"] == "document");
    CHECK(manifest["config"]["k_weight"] == 1);
    CHECK(manifest["config"]["k_core"] == 0);
    CHECK(manifest["config"]["gamma"] == 1.0);
    CHECK(manifest["config"]["seed"] == 42);
    CHECK(manifest["config"]["workers"] == 1);
    CHECK(manifest["input"]["documents"] == 1);
    CHECK(manifest["input"]["checksum_fnv1a"] == detail::hex64(result.corpus_checksum));
    CHECK(manifest["stages"]["tokens"] == result.token_count);
    CHECK(manifest["stages"]["match_pairs"] == result.pairs.size());
    CHECK(manifest["stages"]["graph_full"]["nodes"] == 8);
    CHECK(manifest["stages"]["graph_full"]["directed_edges"] == 5);
    CHECK(manifest["stages"]["graph_full"]["undirected_edges"] == 3);
    REQUIRE_FALSE(manifest["stages"]["partition"].is_null());
    CHECK(manifest["stages"]["partition"]["communities"] == result.partition->community_count);

    std::string report = read_text_file((out / "report.csv").string());
    CHECK(report.rfind("noun,degree,adjectives,verbs,nouns\n", 0) == 0);
    CHECK(report.find("thaifood2n,6,delicious2a:1 great2a:1 notexpensive2a:1,"
                      "love2v:1,beachresort2n:1 firevodka2n:1\n") != std::string::npos);

    auto pj = nlohmann::json::parse(read_text_file((out / "partition.json").string()));
    CHECK(pj["gamma"] == 1.0);
    REQUIRE(pj["communities"].size() == result.partition->community_count);
    std::size_t total_nodes = 0;
    for (const auto& c : pj["communities"]) total_nodes += c["nodes"].size();
    CHECK(total_nodes == 8);
}

TEST_CASE("reduction that empties the graph sets the dedicated exit status") {
    fs::path dir = fresh_dir("empty");
    PipelineConfig cfg;  // defaults: k-weight 2, k-core 2
    cfg.input = write_file(dir / "tiny.csv", "id,text\n1,Thai food was great.\n");
    cfg.out_dir = (dir / "out").string();

    PipelineResult result = run_pipeline(cfg);
    CHECK(result.exit_status == exit_empty_reduction);
    CHECK_FALSE(result.partition.has_value());
    CHECK(result.full.node_count() == 2);  // great2a -> thaifood2n, weight 1
    CHECK(result.reduced.empty());

    fs::path out = cfg.out_dir;
    CHECK_FALSE(fs::exists(out / "partition.json"));
    auto manifest = nlohmann::json::parse(read_text_file((out / "run_manifest.json").string()));
    CHECK(manifest["stages"]["partition"].is_null());

    PerceptionGraph reduced = import_graph_json(read_text_file((out / "graph_reduced.json").string()));
    CHECK(reduced.empty());
    CHECK(read_text_file((out / "report.csv").string()) == "noun,degree,adjectives,verbs,nouns\n");
}

TEST_CASE("conllu input keeps the provided tags and lemmas") {
    fs::path dir = fresh_dir("conllu");
    std::string conllu =
        "# newdoc id = d1\n"
        "1\tWonderful\twonderful\tADJ\t_\t_\t_\t_\t_\t_\n"
        "2\tbeaches\tzzz\tNOUN\t_\t_\t_\t_\t_\t_\n"
        "3\t.\t.\tPUNCT\t_\t_\t_\t_\t_\t_\n"
        "\n"
        "1\tWe\twe\tPRON\t_\t_\t_\t_\t_\t_\n"
        "2\tloved\tlove\tVERB\t_\t_\t_\t_\t_\t_\n"
        "3\tthem\tthey\tPRON\t_\t_\t_\t_\t_\t_\n"
        "4\t.\t.\tPUNCT\t_\t_\t_\t_\t_\t_\n";

    PipelineConfig cfg;
    cfg.input = write_file(dir / "corpus.conllu", conllu);
    cfg.format = "conllu";
    // never read on the pretagged path; a bogus path proves that
    cfg.tagger_model_path = (dir / "no_such_model.json").string();
    cfg.nn_mode = NnMode::off;
    cfg.k_weight = 1;
    cfg.k_core = 0;
    cfg.out_dir = (dir / "out").string();

    PipelineResult result = run_pipeline(cfg);
    CHECK(result.exit_status == exit_ok);
    REQUIRE(result.documents.size() == 1);
    CHECK(result.documents[0].id == "d1");

    // file lemma "zzz" is kept verbatim; "them" corefers to the noun
    REQUIRE(result.full.directed_edges.size() == 2);
    CHECK(result.full.directed_edges.at({"wonderful2a", "zzz2n"}) == 1);
    CHECK(result.full.directed_edges.at({"love2v", "zzz2n"}) == 1);
    CHECK(result.full.undirected_edges.empty());
}

TEST_CASE("conative list can be replaced or disabled") {
    fs::path dir = fresh_dir("conative");
    PipelineConfig cfg = worked_config(dir);
    cfg.conative_list_path = write_file(dir / "verbs.txt", "visit\n");
    PipelineResult custom = run_pipeline(cfg);
    CHECK(custom.full.directed_edges.count({"visit2v", "beachresort2n"}) == 1);
    CHECK(custom.full.directed_edges.count({"love2v", "thaifood2n"}) == 0);
    CHECK(custom.full.directed_edges.count({"recommend2v", "beachresort2n"}) == 0);
    CHECK(custom.full.count_kind(NodeKind::verb) == 1);
    CHECK(custom.full.count_kind(NodeKind::adj) == 3);  // adjectives unaffected

    PipelineConfig off = worked_config(fresh_dir("conative_off"));
    off.conative_enabled = false;
    PipelineResult all = run_pipeline(off);
    CHECK(all.full.directed_edges.count({"love2v", "thaifood2n"}) == 1);
    CHECK(all.full.directed_edges.count({"visit2v", "beachresort2n"}) == 1);
    CHECK(all.full.directed_edges.count({"recommend2v", "beachresort2n"}) == 1);
    CHECK(all.full.count_kind(NodeKind::verb) >= 3);
}

TEST_CASE("same configuration writes byte-identical artifacts") {
    fs::path dir = fresh_dir("determinism");
    PipelineConfig cfg = worked_config(dir);

    cfg.out_dir = (dir / "out1").string();
    run_pipeline(cfg);
    cfg.out_dir = (dir / "out2").string();
    run_pipeline(cfg);

    for (const auto& name : kArtifacts) {
        INFO(name);
        CHECK(read_text_file((dir / "out1" / name).string()) ==
              read_text_file((dir / "out2" / name).string()));
    }
}

TEST_CASE("worker count does not change the analysis") {
    fs::path dir = fresh_dir("workers");
    std::string csv =
        "id,text\n"
        "a,Thai food was great. We loved it.\n"
        "b,We visited 3 beach resorts. They are highly recommended.\n"
        "c,The beach was great and not expensive. We loved the beach.\n"
        "d,Thai food was delicious. We loved Thai food.\n"
        "e,We loved the beach resorts. The food was great.\n"
        "f,The beach was delicious. We loved it.\n";

    PipelineConfig cfg;
    cfg.input = write_file(dir / "corpus.csv", csv);
    cfg.k_weight = 1;
    cfg.k_core = 0;

    cfg.out_dir = (dir / "out1").string();
    cfg.workers = 1;
    PipelineResult serial = run_pipeline(cfg);

    cfg.out_dir = (dir / "out4").string();
    cfg.workers = 4;
    PipelineResult threaded = run_pipeline(cfg);

    CHECK(serial.exit_status == threaded.exit_status);
    CHECK(serial.pairs == threaded.pairs);  // corpus order, not completion order
    CHECK(serial.token_count == threaded.token_count);
    CHECK(serial.full.nodes == threaded.full.nodes);
    CHECK(serial.full.directed_edges == threaded.full.directed_edges);
    CHECK(serial.full.undirected_edges == threaded.full.undirected_edges);
    REQUIRE(serial.partition.has_value());
    REQUIRE(threaded.partition.has_value());
    CHECK(serial.partition->assignment == threaded.partition->assignment);
    CHECK(serial.partition->q_raw == threaded.partition->q_raw);
}

TEST_CASE("pipeline errors carry their cause") {
    fs::path dir = fresh_dir("errors");
    PipelineConfig cfg;
    cfg.input = (dir / "missing.csv").string();
    cfg.out_dir = (dir / "out").string();
    CHECK_THROWS_AS(run_pipeline(cfg), io_error);

    cfg.input = write_file(dir / "bad.csv", "id,body\n1,hello\n");
    CHECK_THROWS_AS(run_pipeline(cfg), schema_error);  // no "text" column
}

TEST_CASE("inspect formats noun rows and suggests near matches") {
    PerceptionGraph g;
    g.add_directed("great2a", "beach2n", 2);
    g.add_undirected("beach2n", "pier2n", 4);

    std::string beach_row = "beach2n (6)\n  adj:  great2a(2)\n  verb: -\n  noun: pier2n(4)\n";
    std::string pier_row = "pier2n (4)\n  adj:  -\n  verb: -\n  noun: beach2n(4)\n";
    CHECK(inspect_noun(g, "beach2n") == beach_row);
    CHECK(inspect_top(g, 1) == beach_row);
    CHECK(inspect_top(g, 5) == beach_row + pier_row);

    try {
        inspect_noun(g, "beach");
        FAIL("expected argument_error");
    } catch (const argument_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("no noun node 'beach' in graph") != std::string::npos);
        CHECK(msg.find("did you mean: beach2n") != std::string::npos);
    }
}

TEST_CASE("partition json lists communities with a part-of-speech census") {
    PerceptionGraph g;
    g.add_directed("a12a", "n12n", 3);
    g.add_directed("b12a", "n22n", 3);

    CommunityResult part = detect_communities(g, 1.0, 42);
    REQUIRE(part.community_count == 2);

    auto j = partition_json(part, g);
    CHECK(j["gamma"] == 1.0);
    CHECK(j["Q_raw"] == 3.0);
    CHECK(j["Q_normalized"] == 0.5);
    REQUIRE(j["communities"].size() == 2);
    CHECK(j["communities"][0]["id"] == 0);
    CHECK(j["communities"][0]["nodes"] == nlohmann::json::array({"a12a", "n12n"}));
    CHECK(j["communities"][0]["adj"] == 1);
    CHECK(j["communities"][0]["verb"] == 0);
    CHECK(j["communities"][0]["noun"] == 1);
    CHECK(j["communities"][1]["id"] == 1);
    CHECK(j["communities"][1]["nodes"] == nlohmann::json::array({"b12a", "n22n"}));
}

TEST_CASE("report csv lists weighted neighbours per noun") {
    PerceptionGraph g;
    g.add_directed("great2a", "beach2n", 2);
    g.add_directed("love2v", "beach2n", 1);
    g.add_undirected("beach2n", "pier2n", 4);

    std::string report = report_csv(g);
    CHECK(report ==
          "noun,degree,adjectives,verbs,nouns\n"
          "beach2n,7,great2a:2,love2v:1,pier2n:4\n"
          "pier2n,4,,,beach2n:4\n");
}
