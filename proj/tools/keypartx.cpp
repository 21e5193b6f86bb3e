// Command-line front end: corpus in, graphs/partitions/reports out.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "keypartx/pipeline.hpp"

namespace {

int cmd_run(keypartx::PipelineConfig cfg, const std::vector<std::string>& export_names,
            const std::string& nn_mode, const std::string& unit) {
    cfg.nn_mode = keypartx::parse_nn_mode(nn_mode);
    cfg.unit = keypartx::parse_unit(unit);
    if (!export_names.empty()) {
        cfg.exports.clear();
        for (const auto& name : export_names) cfg.exports.push_back(keypartx::parse_export_format(name));
    }
    keypartx::validate_config(cfg);

    keypartx::PipelineResult result = keypartx::run_pipeline(cfg);

    std::cout << "documents analyzed, artifacts in " << cfg.out_dir << "\n"
              << "full graph:    " << result.full.node_count() << " nodes, " << result.full.edge_count()
              << " edges\n"
              << "reduced graph: " << result.reduced.node_count() << " nodes, "
              << result.reduced.edge_count() << " edges\n";
    if (result.partition) {
        std::cout << "communities:   " << result.partition->community_count
                  << " (Q_raw=" << result.partition->q_raw << ")\n";
    } else {
        std::cout << "reduced graph is empty at k_weight=" << cfg.k_weight << ", k_core=" << cfg.k_core
                  << "; partitioning skipped\n";
    }
    return result.exit_status;
}

int cmd_inspect(const std::string& graph_path, const std::string& noun, int top) {
    keypartx::PerceptionGraph g =
        keypartx::import_graph_json(keypartx::read_text_file(graph_path));
    if (!noun.empty())
        std::cout << keypartx::inspect_noun(g, noun);
    else
        std::cout << keypartx::inspect_top(g, top);
    return keypartx::exit_ok;
}

int cmd_train(const std::string& treebank, int epochs, std::uint64_t seed, const std::string& out) {
    auto corpus = keypartx::load_treebank(treebank);
    keypartx::TagModel model = keypartx::train_tagger(corpus, epochs, seed);
    keypartx::save_tag_model(model, out);
    std::cout << "trained on " << corpus.size() << " sentences, model written to " << out << "\n";
    return keypartx::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"keypartx: perception graphs from text corpora"};
    app.require_subcommand(1);

    // run
    keypartx::PipelineConfig cfg;
    std::string nn_mode = "greedy";
    std::string unit = "document";
    std::vector<std::string> export_names;
    bool no_conative = false;

    CLI::App* run = app.add_subcommand("run", "run the full pipeline on a corpus");
    run->add_option("--input", cfg.input, "corpus file")->required();
    run->add_option("--format", cfg.format, "input format: csv or conllu (default csv)");
    run->add_option("--text-col", cfg.text_column, "CSV text column, name or 0-based index (default text)");
    run->add_option("--nn-mode", nn_mode, "noun-noun edges: off, restricted, or greedy (default greedy)");
    run->add_option("--unit", unit, "co-occurrence unit: sentence or document (default document)");
    run->add_flag("--no-conative", no_conative, "keep all verbs instead of the conative list");
    run->add_option("--conative-list", cfg.conative_list_path, "file with one conative verb lemma per line");
    run->add_option("--k-weight", cfg.k_weight, "minimum edge weight kept (default 2)");
    run->add_option("--k-core", cfg.k_core, "k-core degree threshold (default 2)");
    run->add_option("--gamma", cfg.gamma, "modularity resolution (default 1.0)");
    run->add_option("--seed", cfg.seed, "random seed for community detection (default 42)");
    run->add_option("--export", export_names, "graph formats: json, graphml, dot (default all)");
    run->add_option("--out-dir", cfg.out_dir, "output directory (default out)");
    run->add_option("--workers", cfg.workers, "worker threads for the NLP stages (default 1)");
    run->add_option("--lexicon", cfg.lexicon_path, "frequency lexicon (default bundled)");
    run->add_option("--tagger-model", cfg.tagger_model_path, "tagger model json (default bundled)");

    // inspect
    std::string graph_path, noun;
    int top = 10;
    CLI::App* inspect = app.add_subcommand("inspect", "print semantic relations from a graph json");
    inspect->add_option("graph", graph_path, "graph json file")->required();
    inspect->add_option("--noun", noun, "noun label to inspect (e.g. room2n)");
    inspect->add_option("--top", top, "print the top-N nouns by degree (default 10)");

    // train-tagger
    std::string treebank, model_out = "tagger_model.json";
    int epochs = 5;
    std::uint64_t train_seed = 1;
    CLI::App* train = app.add_subcommand("train-tagger", "train the averaged-perceptron tagger");
    train->add_option("--treebank", treebank, "training file: word_TAG tokens, one sentence per line")
        ->required();
    train->add_option("--epochs", epochs, "training epochs (default 5)");
    train->add_option("--seed", train_seed, "shuffle seed (default 1)");
    train->add_option("--out", model_out, "output model path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : keypartx::exit_usage;
    }

    try {
        if (run->parsed()) {
            cfg.conative_enabled = !no_conative;
            return cmd_run(cfg, export_names, nn_mode, unit);
        }
        if (inspect->parsed()) return cmd_inspect(graph_path, noun, top);
        if (train->parsed()) return cmd_train(treebank, epochs, train_seed, model_out);
    } catch (const keypartx::argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return keypartx::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return keypartx::exit_failure;
    }
    return keypartx::exit_usage;
}
