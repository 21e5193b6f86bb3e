#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "keypartx/compound.hpp"
#include "keypartx/core.hpp"
#include "keypartx/match.hpp"

namespace keypartx {

enum class NodeKind { adj, verb, noun };

inline const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::adj: return "adj";
        case NodeKind::verb: return "verb";
        case NodeKind::noun: return "noun";
    }
    return "?";
}

// Node kinds are carried by the 2a/2v/2n label suffix.
inline bool kind_from_label(const std::string& label, NodeKind& out) {
    if (label.size() < 3) return false;
    std::string_view suf = std::string_view(label).substr(label.size() - 2);
    if (suf == "2a") out = NodeKind::adj;
    else if (suf == "2v") out = NodeKind::verb;
    else if (suf == "2n") out = NodeKind::noun;
    else return false;
    return true;
}

inline std::string label_base(const std::string& label) {
    NodeKind k;
    return kind_from_label(label, k) ? label.substr(0, label.size() - 2) : label;
}

enum class EdgeKind { a2n, v2n, nn };

inline const char* edge_kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::a2n: return "a2n";
        case EdgeKind::v2n: return "v2n";
        case EdgeKind::nn: return "nn";
    }
    return "?";
}

// Directed adjective/verb -> noun edges plus optional undirected noun-noun
// co-occurrence edges, all weighted by raw counts. Nodes exist exactly while
// they have an incident edge.
struct PerceptionGraph {
    std::map<std::string, NodeKind> nodes;
    std::map<std::pair<std::string, std::string>, long long> directed_edges;
    std::map<std::pair<std::string, std::string>, long long> undirected_edges;  // key.first < key.second

    bool operator==(const PerceptionGraph&) const = default;

    bool empty() const { return nodes.empty(); }
    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return directed_edges.size() + undirected_edges.size(); }

    long long total_weight() const {
        long long m = 0;
        for (const auto& [e, w] : directed_edges) m += w;
        for (const auto& [e, w] : undirected_edges) m += w;
        return m;
    }

    void add_node(const std::string& label) {
        NodeKind k;
        if (!kind_from_label(label, k))
            throw argument_error("node label lacks a 2a/2v/2n suffix: '" + label + "'");
        auto [it, inserted] = nodes.emplace(label, k);
        if (!inserted && it->second != k) throw argument_error("node kind conflict for '" + label + "'");
    }

    void add_directed(const std::string& src, const std::string& dst, long long w = 1) {
        if (w < 1) throw argument_error("edge weight must be >= 1");
        NodeKind ks, kd;
        if (!kind_from_label(src, ks) || !kind_from_label(dst, kd))
            throw argument_error("edge endpoint lacks a label suffix: " + src + " -> " + dst);
        if (kd != NodeKind::noun || ks == NodeKind::noun)
            throw argument_error("directed edges run adj/verb -> noun: " + src + " -> " + dst);
        add_node(src);
        add_node(dst);
        directed_edges[{src, dst}] += w;
    }

    void add_undirected(const std::string& u, const std::string& v, long long w = 1) {
        if (w < 1) throw argument_error("edge weight must be >= 1");
        if (u == v) throw argument_error("self-loop: " + u);
        NodeKind ku, kv;
        if (!kind_from_label(u, ku) || !kind_from_label(v, kv))
            throw argument_error("edge endpoint lacks a label suffix: " + u + " -- " + v);
        if (ku != NodeKind::noun || kv != NodeKind::noun)
            throw argument_error("undirected edges join nouns: " + u + " -- " + v);
        add_node(u);
        add_node(v);
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        undirected_edges[key] += w;
    }

    EdgeKind directed_kind(const std::pair<std::string, std::string>& e) const {
        return nodes.at(e.first) == NodeKind::adj ? EdgeKind::a2n : EdgeKind::v2n;
    }

    // distinct incident edges, direction and weight ignored
    std::map<std::string, std::size_t> distinct_degrees() const {
        std::map<std::string, std::size_t> deg;
        for (const auto& [label, kind] : nodes) deg[label] = 0;
        for (const auto& [e, w] : directed_edges) {
            deg[e.first]++;
            deg[e.second]++;
        }
        for (const auto& [e, w] : undirected_edges) {
            deg[e.first]++;
            deg[e.second]++;
        }
        return deg;
    }

    std::size_t count_kind(NodeKind k) const {
        std::size_t n = 0;
        for (const auto& [label, kind] : nodes)
            if (kind == k) ++n;
        return n;
    }
};

// Weight-preserving union; node kinds must agree (they do for suffix-derived
// kinds). Associative and commutative, so per-document partial graphs can be
// reduced in any order.
inline PerceptionGraph merge_graphs(const PerceptionGraph& a, const PerceptionGraph& b) {
    PerceptionGraph out = a;
    for (const auto& [label, kind] : b.nodes) {
        auto [it, inserted] = out.nodes.emplace(label, kind);
        if (!inserted && it->second != kind) throw argument_error("merge: node kind conflict for '" + label + "'");
    }
    for (const auto& [e, w] : b.directed_edges) out.directed_edges[e] += w;
    for (const auto& [e, w] : b.undirected_edges) out.undirected_edges[e] += w;
    return out;
}

// ---------------------------------------------------------------------------
// Conative-verb filtering
// ---------------------------------------------------------------------------

inline const std::set<std::string>& default_conative_verbs() {
    static const std::set<std::string> s = {
        "enjoy",   "love",       "like",    "adore",   "avoid",   "revisit",  "desire", "dislike",
        "hate",    "wish",       "hope",    "appreciate", "value", "recommend", "unrecommend",
        "astonish", "impress",   "please",  "satisfy", "unsatisfy", "surprise", "mean",  "mind"};
    return s;
}

struct ConativeFilter {
    std::set<std::string> verbs = default_conative_verbs();
    bool enabled = true;
};

namespace detail {

// Splits a fused negation lemma: "neverrecommend" -> ("never", "recommend").
// Longest prefix wins so "not..." is never misread as "no" plus "t...".
inline bool split_negation(const std::string& lemma, std::string& base) {
    std::size_t best = 0;
    for (const auto& neg : default_negation_words())
        if (lemma.size() > neg.size() && neg.size() > best && lemma.compare(0, neg.size(), neg) == 0)
            best = neg.size();
    if (best == 0) return false;
    base = lemma.substr(best);
    return true;
}

// The list is the whitelist of surviving labels. A negated conative maps to
// the list's canonical negated entry ("neverrecommend" -> "unrecommend");
// negated conatives with no such entry are dropped like any other verb, so
// surviving verb labels never leave the list.
inline bool conative_verb_label(const std::string& label, const ConativeFilter& filter, std::string& out) {
    std::string lemma = label_base(label);
    if (filter.verbs.count(lemma)) {
        out = label;
        return true;
    }
    std::string base;
    if (split_negation(lemma, base) && filter.verbs.count(base) && filter.verbs.count("un" + base)) {
        out = "un" + base + "2v";
        return true;
    }
    return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph construction
// ---------------------------------------------------------------------------

enum class NnMode { off, restricted, greedy };
enum class CoocUnit { sentence, document };

inline const char* nn_mode_name(NnMode m) {
    switch (m) {
        case NnMode::off: return "off";
        case NnMode::restricted: return "restricted";
        case NnMode::greedy: return "greedy";
    }
    return "?";
}

inline const char* unit_name(CoocUnit u) { return u == CoocUnit::sentence ? "sentence" : "document"; }

// Per-document partial graph; the full graph is the merge over documents.
inline PerceptionGraph build_graph_for_document(const std::vector<MatchPair>& pairs, const Document& doc,
                                                NnMode nn_mode, CoocUnit unit, const ConativeFilter& filter) {
    PerceptionGraph g;

    // unit key -> nouns seen; sentence units are indexed, document unit is -1
    auto unit_of = [&](int sent_index) { return unit == CoocUnit::sentence ? sent_index : -1; };

    std::map<int, std::set<std::string>> av2n_nouns;  // nouns in surviving pairs
    for (const auto& p : pairs) {
        if (p.doc_id != doc.id) throw argument_error("match pair doc_id '" + p.doc_id + "' not in document set");
        std::string modifier = p.modifier;
        NodeKind mk;
        if (!kind_from_label(p.modifier, mk)) throw argument_error("bad modifier label: " + p.modifier);
        if (mk == NodeKind::verb && filter.enabled) {
            if (!detail::conative_verb_label(p.modifier, filter, modifier)) continue;
        }
        g.add_directed(modifier, p.noun);
        av2n_nouns[unit_of(p.sent_index)].insert(p.noun);
    }

    if (nn_mode == NnMode::off) return g;

    std::map<int, std::set<std::string>> unit_nouns;
    if (nn_mode == NnMode::greedy) {
        for (const auto& sent : doc.sentences)
            for (const auto& tok : sent)
                if (tok.pos == Pos::Noun && !tok.label.empty())
                    unit_nouns[unit_of(tok.sent_index)].insert(tok.label);
    } else {
        unit_nouns = av2n_nouns;
    }

    for (const auto& [u, nouns] : unit_nouns) {
        for (auto it = nouns.begin(); it != nouns.end(); ++it)
            for (auto jt = std::next(it); jt != nouns.end(); ++jt) g.add_undirected(*it, *jt);
    }
    return g;
}

// Builds the full perception graph from all documents' match pairs.
inline PerceptionGraph build_graph(const std::vector<MatchPair>& pairs, const std::vector<Document>& docs,
                                   NnMode nn_mode = NnMode::greedy, CoocUnit unit = CoocUnit::document,
                                   const ConativeFilter& filter = {}) {
    std::map<std::string, std::vector<MatchPair>> by_doc;
    std::set<std::string> doc_ids;
    for (const auto& d : docs) doc_ids.insert(d.id);
    for (const auto& p : pairs) {
        if (!doc_ids.count(p.doc_id))
            throw argument_error("match pair references unknown document '" + p.doc_id + "'");
        by_doc[p.doc_id].push_back(p);
    }
    PerceptionGraph g;
    for (const auto& doc : docs) {
        auto it = by_doc.find(doc.id);
        static const std::vector<MatchPair> none;
        g = merge_graphs(g, build_graph_for_document(it == by_doc.end() ? none : it->second, doc, nn_mode,
                                                     unit, filter));
    }
    return g;
}

// ---------------------------------------------------------------------------
// Semantic-relations report
// ---------------------------------------------------------------------------

struct NeighborWeight {
    std::string label;
    long long weight = 0;

    bool operator==(const NeighborWeight&) const = default;
};

struct RelationRow {
    std::string noun;
    long long degree = 0;
    std::vector<NeighborWeight> adjectives;
    std::vector<NeighborWeight> verbs;
    std::vector<NeighborWeight> nouns;
};

// Nouns ranked by degree; neighbor lists sorted by weight descending, then
// label. Degree is weighted by default; unweighted counts distinct neighbors.
inline std::vector<RelationRow> semantic_relations_report(const PerceptionGraph& g, int top_n,
                                                          bool weighted_degree = true) {
    if (top_n <= 0) throw argument_error("semantic_relations_report: top_n must be positive");

    std::map<std::string, RelationRow> rows;
    for (const auto& [label, kind] : g.nodes)
        if (kind == NodeKind::noun) rows[label].noun = label;

    for (const auto& [e, w] : g.directed_edges) {
        auto& row = rows.at(e.second);
        if (g.nodes.at(e.first) == NodeKind::adj) row.adjectives.push_back({e.first, w});
        else row.verbs.push_back({e.first, w});
        row.degree += weighted_degree ? w : 1;
    }
    for (const auto& [e, w] : g.undirected_edges) {
        rows.at(e.first).nouns.push_back({e.second, w});
        rows.at(e.second).nouns.push_back({e.first, w});
        rows.at(e.first).degree += weighted_degree ? w : 1;
        rows.at(e.second).degree += weighted_degree ? w : 1;
    }

    auto sort_neighbors = [](std::vector<NeighborWeight>& v) {
        std::sort(v.begin(), v.end(), [](const NeighborWeight& a, const NeighborWeight& b) {
            if (a.weight != b.weight) return a.weight > b.weight;
            return a.label < b.label;
        });
    };

    std::vector<RelationRow> out;
    out.reserve(rows.size());
    for (auto& [label, row] : rows) {
        sort_neighbors(row.adjectives);
        sort_neighbors(row.verbs);
        sort_neighbors(row.nouns);
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const RelationRow& a, const RelationRow& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.noun < b.noun;
    });
    if (out.size() > static_cast<std::size_t>(top_n)) out.resize(top_n);
    return out;
}

}  // namespace keypartx
