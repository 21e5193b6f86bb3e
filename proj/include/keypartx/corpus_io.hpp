#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "keypartx/core.hpp"
#include "keypartx/graph.hpp"
#include "keypartx/tagger.hpp"

namespace keypartx {

struct RawDocument {
    std::string id;
    std::string text;

    bool operator==(const RawDocument&) const = default;
};

struct RawCorpus {
    std::vector<RawDocument> documents;

    bool operator==(const RawCorpus&) const = default;
    std::size_t size() const { return documents.size(); }
};

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << content;
    if (!out) throw io_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180)
// ---------------------------------------------------------------------------

namespace detail {

// Parses quoted fields, doubled quotes, and embedded commas/newlines. Rows
// are 1-based for error messages, the header being row 1.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t row_no = 1;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        ++row_no;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                    // only a separator or row end may follow a closing quote
                    if (i + 1 < text.size() && text[i + 1] != ',' && text[i + 1] != '\r' &&
                        text[i + 1] != '\n')
                        throw parse_error("malformed CSV row " + std::to_string(row_no) +
                                          ": text after closing quote");
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field_started || !field.empty())
                    throw parse_error("malformed CSV row " + std::to_string(row_no) +
                                      ": quote inside unquoted field");
                quoted = true;
                field_started = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
                end_row();
                break;
            case '\n':
                end_row();
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (quoted) throw parse_error("malformed CSV row " + std::to_string(row_no) + ": unterminated quote");
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

inline std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!ascii_digit(c)) return false;
    return true;
}

}  // namespace detail

// The text column may be named (case-insensitive) or given as a 0-based
// index. doc_id comes from an `id` column when the header has one, otherwise
// from the 0-based data-row index.
inline RawCorpus load_csv_text(const std::string& text, const std::string& text_column,
                               const std::string& origin = "csv") {
    auto rows = detail::parse_csv(text);
    if (rows.empty()) throw schema_error(origin + ": missing header row");

    const auto& header = rows.front();
    auto find_column = [&](const std::string& name) -> int {
        std::string want = to_lower(name);
        for (std::size_t i = 0; i < header.size(); ++i)
            if (to_lower(trim(header[i])) == want) return static_cast<int>(i);
        return -1;
    };

    int text_idx;
    if (detail::all_digits(text_column)) {
        text_idx = std::stoi(text_column);
        if (text_idx < 0 || text_idx >= static_cast<int>(header.size()))
            throw schema_error(origin + ": text column index " + text_column + " out of range (" +
                               std::to_string(header.size()) + " columns)");
    } else {
        text_idx = find_column(text_column);
        if (text_idx < 0) {
            std::string cols;
            for (const auto& h : header) cols += (cols.empty() ? "" : ", ") + trim(h);
            throw schema_error(origin + ": no column named '" + text_column + "' (available: " + cols + ")");
        }
    }
    int id_idx = find_column("id");

    RawCorpus corpus;
    std::set<std::string> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size())
            throw parse_error(origin + ": malformed CSV row " + std::to_string(r + 1) + ": expected " +
                              std::to_string(header.size()) + " fields, got " + std::to_string(row.size()));
        RawDocument doc;
        doc.id = id_idx >= 0 ? row[id_idx] : std::to_string(r - 1);
        doc.text = row[text_idx];
        if (doc.id.empty())
            throw schema_error(origin + ": empty doc id at row " + std::to_string(r + 1));
        if (!seen.insert(doc.id).second)
            throw schema_error(origin + ": duplicate doc id '" + doc.id + "' at row " + std::to_string(r + 1));
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

inline RawCorpus load_csv(const std::string& path, const std::string& text_column) {
    return load_csv_text(read_text_file(path), text_column, path);
}

inline std::string serialize_csv(const RawCorpus& corpus) {
    std::string out = "id,text\n";
    for (const auto& doc : corpus.documents)
        out += detail::csv_quote(doc.id) + "," + detail::csv_quote(doc.text) + "\n";
    return out;
}

inline void save_csv(const RawCorpus& corpus, const std::string& path) {
    write_text_file(path, serialize_csv(corpus));
}

// ---------------------------------------------------------------------------
// CoNLL-U (pre-tagged bypass)
// ---------------------------------------------------------------------------

namespace detail {

inline Pos upos_to_pos(const std::string& upos) {
    if (upos == "ADJ") return Pos::Adj;
    if (upos == "VERB" || upos == "AUX") return Pos::Verb;  // copulas arrive as AUX
    if (upos == "NOUN" || upos == "PROPN") return Pos::Noun;
    if (upos == "PRON") return Pos::Pron;
    return Pos::Other;  // unknown tags degrade, never error
}

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

}  // namespace detail

// Tokens keep the file's lemma and POS verbatim; the tagger and lemmatizer
// are not consulted. Multiword-token ranges (1-2) and empty nodes (1.1) are
// skipped, as are unnamed comment lines.
inline std::vector<Document> load_conllu(const std::string& path) {
    std::string text = read_text_file(path);
    const auto& copular = default_copular_verbs();
    const auto& passive_aux = default_passive_aux();

    std::vector<Document> docs;
    Sentence sentence;
    int implicit_id = 0;

    auto flush_sentence = [&] {
        if (sentence.empty()) return;
        if (docs.empty()) {
            docs.push_back({std::to_string(implicit_id++), {}});
        }
        for (auto& tok : sentence) tok.sent_index = static_cast<int>(docs.back().sentences.size());
        docs.back().sentences.push_back(std::move(sentence));
        sentence.clear();
    };

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush_sentence();
            continue;
        }
        if (line[0] == '#') {
            std::string comment = trim(line.substr(1));
            const std::string marker = "newdoc id";
            if (comment.compare(0, marker.size(), marker) == 0) {
                std::size_t eq = comment.find('=');
                flush_sentence();
                std::string id = eq == std::string::npos ? "" : trim(comment.substr(eq + 1));
                if (id.empty()) id = std::to_string(implicit_id);
                ++implicit_id;
                docs.push_back({id, {}});
            }
            continue;
        }
        auto cols = detail::split_tabs(line);
        if (cols.size() < 4)
            throw parse_error(path + ": malformed CoNLL-U line " + std::to_string(line_no) +
                              ": expected at least 4 tab-separated columns");
        const std::string& tok_id = cols[0];
        if (tok_id.find('-') != std::string::npos || tok_id.find('.') != std::string::npos) continue;

        Token tok;
        tok.surface = cols[1];
        tok.lower = to_lower(cols[1]);
        tok.lemma = cols[2];
        tok.pos = detail::upos_to_pos(cols[3]);
        tok.tok_index = static_cast<int>(sentence.size());
        tok.is_copular = tok.pos == Pos::Verb && copular.count(tok.lemma) > 0;
        tok.is_passive_aux = passive_aux.count(tok.lemma) > 0;
        sentence.push_back(std::move(tok));
    }
    flush_sentence();

    std::set<std::string> seen;
    for (const auto& d : docs)
        if (!seen.insert(d.id).second) throw schema_error(path + ": duplicate newdoc id '" + d.id + "'");
    return docs;
}

// ---------------------------------------------------------------------------
// Graph export / import
// ---------------------------------------------------------------------------

enum class ExportFormat { graphml, dot, json };

inline const char* export_format_name(ExportFormat f) {
    switch (f) {
        case ExportFormat::graphml: return "graphml";
        case ExportFormat::dot: return "dot";
        case ExportFormat::json: return "json";
    }
    return "?";
}

inline ExportFormat parse_export_format(const std::string& name) {
    if (name == "graphml") return ExportFormat::graphml;
    if (name == "dot") return ExportFormat::dot;
    if (name == "json") return ExportFormat::json;
    throw argument_error("unknown export format '" + name + "' (expected graphml, dot, or json)");
}

struct GraphExport {
    ExportFormat format = ExportFormat::json;
    std::string payload;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string export_json(const PerceptionGraph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [label, kind] : g.nodes)
        j["nodes"].push_back({{"id", label}, {"kind", kind_name(kind)}});
    for (const auto& [e, w] : g.directed_edges)
        j["edges"].push_back({{"src", e.first},
                              {"dst", e.second},
                              {"kind", edge_kind_name(g.directed_kind(e))},
                              {"weight", w}});
    for (const auto& [e, w] : g.undirected_edges)
        j["edges"].push_back({{"src", e.first}, {"dst", e.second}, {"kind", "nn"}, {"weight", w}});
    return j.dump();
}

inline std::string export_graphml(const PerceptionGraph& g) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d0\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d1\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d2\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
    out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
    for (const auto& [label, kind] : g.nodes) {
        out += "    <node id=\"" + xml_escape(label) + "\"><data key=\"d0\">";
        out += kind_name(kind);
        out += "</data></node>\n";
    }
    auto edge = [&](const std::string& src, const std::string& dst, const char* kind, long long w,
                    bool directed) {
        out += "    <edge source=\"" + xml_escape(src) + "\" target=\"" + xml_escape(dst) + "\"";
        if (!directed) out += " directed=\"false\"";
        out += "><data key=\"d1\">";
        out += kind;
        out += "</data><data key=\"d2\">" + std::to_string(w) + "</data></edge>\n";
    };
    for (const auto& [e, w] : g.directed_edges)
        edge(e.first, e.second, edge_kind_name(g.directed_kind(e)), w, true);
    for (const auto& [e, w] : g.undirected_edges) edge(e.first, e.second, "nn", w, false);
    out += "  </graph>\n</graphml>\n";
    return out;
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string export_dot(const PerceptionGraph& g) {
    std::string out = "digraph perception {\n";
    for (const auto& [label, kind] : g.nodes)
        out += "  " + dot_quote(label) + " [kind=" + kind_name(kind) + "];\n";
    for (const auto& [e, w] : g.directed_edges)
        out += "  " + dot_quote(e.first) + " -> " + dot_quote(e.second) + " [kind=" +
               edge_kind_name(g.directed_kind(e)) + ", weight=" + std::to_string(w) + "];\n";
    for (const auto& [e, w] : g.undirected_edges)
        out += "  " + dot_quote(e.first) + " -- " + dot_quote(e.second) +
               " [kind=nn, weight=" + std::to_string(w) + "];\n";
    out += "}\n";
    return out;
}

}  // namespace detail

inline GraphExport export_graph(const PerceptionGraph& g, ExportFormat format) {
    GraphExport out;
    out.format = format;
    switch (format) {
        case ExportFormat::json: out.payload = detail::export_json(g); break;
        case ExportFormat::graphml: out.payload = detail::export_graphml(g); break;
        case ExportFormat::dot: out.payload = detail::export_dot(g); break;
    }
    return out;
}

// Inverse of the json export; validates the schema and rejects anything the
// exporter could not have produced.
inline PerceptionGraph import_graph_json(const std::string& payload) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") || !j["nodes"].is_array() ||
        !j["edges"].is_array())
        throw schema_error("graph json: expected object with nodes and edges arrays");

    PerceptionGraph g;
    for (const auto& n : j["nodes"]) {
        if (!n.is_object() || !n.contains("id") || !n.contains("kind") || !n["id"].is_string() ||
            !n["kind"].is_string())
            throw schema_error("graph json: node needs string id and kind");
        std::string label = n["id"].get<std::string>();
        NodeKind k;
        if (!kind_from_label(label, k) || std::string(kind_name(k)) != n["kind"].get<std::string>())
            throw schema_error("graph json: node kind does not match label suffix: " + label);
        g.add_node(label);
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("src") || !e.contains("dst") || !e.contains("kind") ||
            !e.contains("weight") || !e["src"].is_string() || !e["dst"].is_string() ||
            !e["kind"].is_string() || !e["weight"].is_number_integer())
            throw schema_error("graph json: edge needs src, dst, kind, and integer weight");
        std::string src = e["src"].get<std::string>();
        std::string dst = e["dst"].get<std::string>();
        std::string kind = e["kind"].get<std::string>();
        long long w = e["weight"].get<long long>();
        if (w < 1) throw schema_error("graph json: edge weight must be positive");
        if (!g.nodes.count(src) || !g.nodes.count(dst))
            throw schema_error("graph json: edge references undeclared node");
        if (kind == "nn") {
            g.add_undirected(src, dst, w);
        } else if (kind == "a2n" || kind == "v2n") {
            g.add_directed(src, dst, w);
            if (std::string(edge_kind_name(g.directed_kind({src, dst}))) != kind)
                throw schema_error("graph json: edge kind does not match endpoints: " + src + " -> " + dst);
        } else {
            throw schema_error("graph json: unknown edge kind '" + kind + "'");
        }
    }
    return g;
}

}  // namespace keypartx
