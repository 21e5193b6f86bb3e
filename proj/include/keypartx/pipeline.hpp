#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "keypartx/community.hpp"
#include "keypartx/compound.hpp"
#include "keypartx/corpus_io.hpp"
#include "keypartx/graph.hpp"
#include "keypartx/match.hpp"
#include "keypartx/normalize.hpp"
#include "keypartx/reduce.hpp"
#include "keypartx/tagger.hpp"

namespace keypartx {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_empty_reduction = 3;  // small corpora legitimately reduce to nothing

#ifndef KEYPARTX_BUNDLED_DATA_DIR
#define KEYPARTX_BUNDLED_DATA_DIR "data"
#endif

// KEYPARTX_DATA_DIR overrides the build-time bundled data location.
inline std::string data_dir() {
    if (const char* env = std::getenv("KEYPARTX_DATA_DIR"); env && *env) return env;
    return KEYPARTX_BUNDLED_DATA_DIR;
}

struct PipelineConfig {
    std::string input;
    std::string format = "csv";  // csv | conllu
    std::string text_column = "text";
    std::string lexicon_path;         // empty -> <data>/lexicon.txt
    std::string tagger_model_path;    // empty -> <data>/tagger_model.json
    std::string irregular_forms_path; // empty -> <data>/irregular_forms.txt
    std::string conative_list_path;   // empty -> built-in 23-verb list
    NnMode nn_mode = NnMode::greedy;
    CoocUnit unit = CoocUnit::document;
    bool conative_enabled = true;
    long long k_weight = 2;
    std::size_t k_core = 2;
    double gamma = 1.0;
    std::uint64_t seed = 42;
    std::vector<ExportFormat> exports = {ExportFormat::json, ExportFormat::graphml, ExportFormat::dot};
    std::string out_dir = "out";
    int workers = 1;
};

inline NnMode parse_nn_mode(const std::string& s) {
    if (s == "off") return NnMode::off;
    if (s == "restricted") return NnMode::restricted;
    if (s == "greedy") return NnMode::greedy;
    throw argument_error("unknown nn-mode '" + s + "' (expected off, restricted, or greedy)");
}

inline CoocUnit parse_unit(const std::string& s) {
    if (s == "sentence") return CoocUnit::sentence;
    if (s == "document") return CoocUnit::document;
    throw argument_error("unknown unit '" + s + "' (expected sentence or document)");
}

inline void validate_config(const PipelineConfig& cfg) {
    if (cfg.input.empty()) throw argument_error("no input corpus given");
    if (cfg.format != "csv" && cfg.format != "conllu")
        throw argument_error("unknown input format '" + cfg.format + "' (expected csv or conllu)");
    if (cfg.k_weight < 0) throw argument_error("k-weight must be >= 0");
    if (!(cfg.gamma > 0.0)) throw argument_error("gamma must be positive");
    if (cfg.workers < 1) throw argument_error("workers must be >= 1");
    if (cfg.exports.empty()) throw argument_error("at least one export format is required");
}

// Shared read-only tables: safe to use from several worker threads at once.
struct PipelineResources {
    Lexicon lexicon;
    Lemmatizer lemmatizer;
    TagModel tag_model;
    CompoundRules compound_rules;
    ConativeFilter conative;
};

inline PipelineResources load_resources(const PipelineConfig& cfg) {
    PipelineResources r;
    std::string base = data_dir();
    std::string lexicon = cfg.lexicon_path.empty() ? base + "/lexicon.txt" : cfg.lexicon_path;
    std::string irregulars =
        cfg.irregular_forms_path.empty() ? base + "/irregular_forms.txt" : cfg.irregular_forms_path;

    r.lexicon = load_lexicon(lexicon);
    r.lemmatizer.load_irregulars(irregulars);
    std::set<std::string> vocab;
    for (const auto& [word, freq] : r.lexicon.entries) vocab.insert(word);
    r.lemmatizer.set_vocabulary(std::move(vocab));

    if (cfg.format == "csv") {
        std::string model = cfg.tagger_model_path.empty() ? base + "/tagger_model.json" : cfg.tagger_model_path;
        r.tag_model = load_tag_model(model);
    }
    if (!cfg.conative_list_path.empty()) r.conative.verbs = load_word_list(cfg.conative_list_path);
    r.conative.enabled = cfg.conative_enabled;
    return r;
}

namespace detail {

template <typename F>
auto stage(const char* name, const std::string& doc_id, F&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        throw kx_error("stage " + std::string(name) + ", document '" + doc_id + "': " + e.what());
    }
}

}  // namespace detail

// Full NLP path for raw text: segment, tokenize, spell-correct, tag,
// compound, corefer, fuse negations, map suffixes.
inline Document analyze_document(const std::string& id, const std::string& text,
                                 const PipelineResources& r) {
    Document doc;
    doc.id = id;
    detail::stage("normalize", id, [&] {
        auto sentences = segment_sentences(text);
        for (std::size_t s = 0; s < sentences.size(); ++s)
            doc.sentences.push_back(tokenize(sentences[s], static_cast<int>(s)));
        return 0;
    });
    detail::stage("spell", id, [&] {
        for (auto& sent : doc.sentences) sent = correct_spelling(std::move(sent), r.lexicon);
        return 0;
    });
    doc = detail::stage("tag", id, [&] { return tag_tokens(std::move(doc), r.tag_model, r.lemmatizer); });
    doc = detail::stage("compound", id, [&] {
        Document d = form_compound_nouns(std::move(doc), r.compound_rules);
        d = resolve_coreference(std::move(d));
        return compound_negation(std::move(d), r.compound_rules);
    });
    return detail::stage("suffix", id, [&] { return map_suffixes(std::move(doc)); });
}

// Pre-tagged path: the file's POS and lemmas are kept, so tagging and
// lemmatization are skipped; everything after them still runs.
inline Document analyze_pretagged(Document doc, const PipelineResources& r) {
    const std::string id = doc.id;
    doc = detail::stage("compound", id, [&] {
        Document d = form_compound_nouns(std::move(doc), r.compound_rules);
        d = resolve_coreference(std::move(d));
        return compound_negation(std::move(d), r.compound_rules);
    });
    return detail::stage("suffix", id, [&] { return map_suffixes(std::move(doc)); });
}

struct PipelineResult {
    std::vector<Document> documents;
    std::vector<MatchPair> pairs;
    PerceptionGraph full;
    PerceptionGraph after_k_weight;
    PerceptionGraph reduced;
    std::optional<CommunityResult> partition;  // absent when the reduced graph is empty
    std::size_t token_count = 0;
    std::uint64_t corpus_checksum = 0;
    int exit_status = exit_ok;
};

namespace detail {

template <typename Job>
inline void run_jobs(std::size_t count, int workers, Job&& job) {
    std::atomic<std::size_t> next{0};
    std::mutex err_mx;
    std::vector<std::pair<std::size_t, std::string>> errors;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                job(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mx);
                errors.emplace_back(i, e.what());
            }
        }
    };
    if (workers <= 1 || count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int n = std::min<std::size_t>(workers, count);
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (!errors.empty()) {
        std::sort(errors.begin(), errors.end());
        throw kx_error(errors.front().second);
    }
}

inline PipelineResult finish_result(std::vector<Document> docs, const PipelineConfig& cfg,
                                    const PipelineResources& r) {
    PipelineResult result;
    result.documents = std::move(docs);

    // matching is pure per document; pairs are collected in corpus order
    std::vector<std::vector<MatchPair>> per_doc(result.documents.size());
    run_jobs(result.documents.size(), cfg.workers, [&](std::size_t i) {
        per_doc[i] = stage("match", result.documents[i].id, [&] { return match_av2n(result.documents[i]); });
    });
    for (auto& list : per_doc)
        result.pairs.insert(result.pairs.end(), list.begin(), list.end());

    for (const auto& d : result.documents) result.token_count += d.token_count();

    result.full = build_graph(result.pairs, result.documents, cfg.nn_mode, cfg.unit, r.conative);
    result.after_k_weight = k_weight_filter(result.full, cfg.k_weight);
    result.reduced = remove_isolates(k_core(result.after_k_weight, cfg.k_core));

    if (result.reduced.empty()) {
        result.exit_status = exit_empty_reduction;
    } else {
        result.partition = detect_communities(result.reduced, cfg.gamma, cfg.seed);
    }
    return result;
}

}  // namespace detail

inline PipelineResult analyze_corpus(const RawCorpus& corpus, const PipelineConfig& cfg,
                                     const PipelineResources& r) {
    std::vector<Document> docs(corpus.size());
    detail::run_jobs(corpus.size(), cfg.workers, [&](std::size_t i) {
        docs[i] = analyze_document(corpus.documents[i].id, corpus.documents[i].text, r);
    });
    return detail::finish_result(std::move(docs), cfg, r);
}

inline PipelineResult analyze_pretagged_corpus(std::vector<Document> docs, const PipelineConfig& cfg,
                                               const PipelineResources& r) {
    detail::run_jobs(docs.size(), cfg.workers,
                     [&](std::size_t i) { docs[i] = analyze_pretagged(std::move(docs[i]), r); });
    return detail::finish_result(std::move(docs), cfg, r);
}

// ---------------------------------------------------------------------------
// Artifacts
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::ordered_json graph_counts(const PerceptionGraph& g) {
    return {{"nodes", g.node_count()},
            {"edges", g.edge_count()},
            {"directed_edges", g.directed_edges.size()},
            {"undirected_edges", g.undirected_edges.size()},
            {"total_weight", g.total_weight()}};
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xF];
    return out;
}

}  // namespace detail

inline nlohmann::ordered_json partition_json(const CommunityResult& part, const PerceptionGraph& g) {
    nlohmann::ordered_json j;
    j["gamma"] = part.gamma;
    j["Q_raw"] = part.q_raw;
    j["Q_normalized"] = part.q_normalized;
    j["communities"] = nlohmann::ordered_json::array();
    for (const auto& row : community_pos_census(g, part.assignment)) {
        j["communities"].push_back({{"id", row.id},
                                    {"nodes", row.nodes},
                                    {"adj", row.adj},
                                    {"verb", row.verb},
                                    {"noun", row.noun}});
    }
    return j;
}

inline std::string report_csv(const PerceptionGraph& g) {
    auto rows = semantic_relations_report(g, g.nodes.empty() ? 1 : static_cast<int>(g.nodes.size()));
    auto cell = [](const std::vector<NeighborWeight>& v) {
        std::string out;
        for (const auto& n : v) {
            if (!out.empty()) out += ' ';
            out += n.label + ":" + std::to_string(n.weight);
        }
        return out;
    };
    std::string out = "noun,degree,adjectives,verbs,nouns\n";
    for (const auto& row : rows) {
        out += detail::csv_quote(row.noun) + "," + std::to_string(row.degree) + "," +
               detail::csv_quote(cell(row.adjectives)) + "," + detail::csv_quote(cell(row.verbs)) + "," +
               detail::csv_quote(cell(row.nouns)) + "\n";
    }
    return out;
}

inline nlohmann::ordered_json manifest_json(const PipelineConfig& cfg, const PipelineResult& result,
                                            std::size_t document_count) {
    nlohmann::ordered_json exports = nlohmann::ordered_json::array();
    for (auto f : cfg.exports) exports.push_back(export_format_name(f));

    nlohmann::ordered_json j;
    j["tool"] = "keypartx";
    j["version"] = kx_version;
    j["config"] = {{"input", cfg.input},
                   {"format", cfg.format},
                   {"text_column", cfg.text_column},
                   {"nn_mode", nn_mode_name(cfg.nn_mode)},
                   {"unit", unit_name(cfg.unit)},
                   {"conative", cfg.conative_enabled},
                   {"conative_list", cfg.conative_list_path},
                   {"k_weight", cfg.k_weight},
                   {"k_core", cfg.k_core},
                   {"gamma", cfg.gamma},
                   {"seed", cfg.seed},
                   {"exports", exports},
                   {"workers", cfg.workers}};
    j["input"] = {{"documents", document_count},
                  {"checksum_fnv1a", detail::hex64(result.corpus_checksum)}};
    j["stages"] = {{"tokens", result.token_count},
                   {"match_pairs", result.pairs.size()},
                   {"graph_full", detail::graph_counts(result.full)},
                   {"graph_k_weight", detail::graph_counts(result.after_k_weight)},
                   {"graph_reduced", detail::graph_counts(result.reduced)}};
    if (result.partition) {
        j["stages"]["partition"] = {{"communities", result.partition->community_count},
                                    {"Q_raw", result.partition->q_raw},
                                    {"Q_normalized", result.partition->q_normalized}};
    } else {
        j["stages"]["partition"] = nullptr;  // reduction left nothing to partition
    }
    return j;
}

inline void write_artifacts(const PipelineConfig& cfg, const PipelineResult& result,
                            std::size_t document_count) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    auto path = [&](const std::string& name) { return (fs::path(cfg.out_dir) / name).string(); };

    for (auto fmt : cfg.exports) {
        std::string ext = export_format_name(fmt);
        write_text_file(path("graph_full." + ext), export_graph(result.full, fmt).payload);
        write_text_file(path("graph_reduced." + ext), export_graph(result.reduced, fmt).payload);
    }
    if (result.partition)
        write_text_file(path("partition.json"), partition_json(*result.partition, result.reduced).dump(2) + "\n");
    write_text_file(path("report.csv"), report_csv(result.reduced));
    write_text_file(path("run_manifest.json"), manifest_json(cfg, result, document_count).dump(2) + "\n");
}

// Loads the corpus, runs analysis, writes every artifact. Returns the result
// with exit_status set; throws on stage errors.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
    validate_config(cfg);
    PipelineResources resources = load_resources(cfg);

    std::string raw = read_text_file(cfg.input);
    std::uint64_t checksum = fnv1a(raw);

    PipelineResult result;
    std::size_t document_count = 0;
    if (cfg.format == "csv") {
        RawCorpus corpus = load_csv_text(raw, cfg.text_column, cfg.input);
        document_count = corpus.size();
        result = analyze_corpus(corpus, cfg, resources);
    } else {
        std::vector<Document> docs = load_conllu(cfg.input);
        document_count = docs.size();
        result = analyze_pretagged_corpus(std::move(docs), cfg, resources);
    }
    result.corpus_checksum = checksum;
    write_artifacts(cfg, result, document_count);
    return result;
}

// ---------------------------------------------------------------------------
// Inspection
// ---------------------------------------------------------------------------

inline std::string format_relation_row(const RelationRow& row) {
    auto cell = [](const std::vector<NeighborWeight>& v) {
        if (v.empty()) return std::string("-");
        std::string out;
        for (const auto& n : v) {
            if (!out.empty()) out += ", ";
            out += n.label + "(" + std::to_string(n.weight) + ")";
        }
        return out;
    };
    return row.noun + " (" + std::to_string(row.degree) + ")\n  adj:  " + cell(row.adjectives) +
           "\n  verb: " + cell(row.verbs) + "\n  noun: " + cell(row.nouns) + "\n";
}

// Unknown labels are reported together with close matches so typos in node
// names are cheap to fix.
inline std::string inspect_noun(const PerceptionGraph& g, const std::string& noun) {
    auto rows = semantic_relations_report(g, g.nodes.empty() ? 1 : static_cast<int>(g.nodes.size()));
    for (const auto& row : rows)
        if (row.noun == noun) return format_relation_row(row);

    std::vector<std::pair<int, std::string>> near;
    for (const auto& [label, kind] : g.nodes) {
        int d = damerau_levenshtein(noun, label, 3);
        if (d <= 3) near.emplace_back(d, label);
    }
    std::sort(near.begin(), near.end());
    std::string msg = "no noun node '" + noun + "' in graph";
    if (!near.empty()) {
        msg += "; did you mean: ";
        for (std::size_t i = 0; i < near.size() && i < 5; ++i)
            msg += (i ? ", " : "") + near[i].second;
    }
    throw argument_error(msg);
}

inline std::string inspect_top(const PerceptionGraph& g, int top_n) {
    auto rows = semantic_relations_report(g, top_n);
    std::string out;
    for (const auto& row : rows) out += format_relation_row(row);
    return out;
}

}  // namespace keypartx
