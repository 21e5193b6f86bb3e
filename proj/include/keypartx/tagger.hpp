#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "keypartx/core.hpp"
#include "keypartx/lemmatizer.hpp"

namespace keypartx {

inline const std::set<std::string>& default_copular_verbs() {
    static const std::set<std::string> s = {"be",    "get",  "taste",  "smell", "seem",  "look",
                                            "feel",  "sound", "appear", "become", "stay", "remain"};
    return s;
}

inline const std::set<std::string>& default_passive_aux() {
    static const std::set<std::string> s = {"be", "get"};
    return s;
}

// Closed-class words resolved before the perceptron runs.
inline std::map<std::string, Pos> closed_class_tagdict() {
    std::map<std::string, Pos> d;
    for (const char* w : {"i", "we", "you", "he", "she", "it", "they", "me", "us", "him", "her",
                          "them", "this", "these", "that", "those", "who", "someone", "everyone"})
        d[w] = Pos::Pron;
    for (const char* w : {"hardly", "scarcely", "barely", "no", "not", "none", "neither", "nor", "never",
                          "the", "a", "an", "and", "or", "but", "if", "so", "to", "of", "in", "on", "at",
                          "for", "with", "from", "by", "as", "than", "then", "there", "here", "very",
                          "really", "quite", "too", "also", "just", "when", "while", "because", "about"})
        d[w] = Pos::Other;
    return d;
}

using TrainSentence = std::vector<std::pair<std::string, Pos>>;

inline Pos pos_from_name(const std::string& name) {
    if (name == "ADJ") return Pos::Adj;
    if (name == "VERB") return Pos::Verb;
    if (name == "NOUN") return Pos::Noun;
    if (name == "PRON") return Pos::Pron;
    if (name == "OTHER") return Pos::Other;
    return Pos::Unset;
}

// Treebank format: one sentence per line, space-separated word_TAG items.
inline std::vector<TrainSentence> load_treebank(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open treebank: " + path);
    std::vector<TrainSentence> corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        TrainSentence sent;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && line[i] == ' ') ++i;
            std::size_t j = line.find(' ', i);
            if (j == std::string::npos) j = line.size();
            std::string item = line.substr(i, j - i);
            i = j;
            if (item.empty()) continue;
            auto u = item.rfind('_');
            if (u == std::string::npos || u == 0 || u + 1 >= item.size())
                throw parse_error("treebank line " + std::to_string(lineno) + ": expected word_TAG, got '" + item + "'");
            Pos tag = pos_from_name(item.substr(u + 1));
            if (tag == Pos::Unset)
                throw parse_error("treebank line " + std::to_string(lineno) + ": unknown tag in '" + item + "'");
            sent.emplace_back(item.substr(0, u), tag);
        }
        if (!sent.empty()) corpus.push_back(std::move(sent));
    }
    return corpus;
}

// ---------------------------------------------------------------------------
// Averaged perceptron over a 5-tag set
// ---------------------------------------------------------------------------

struct TagModel {
    // feature -> tag name -> weight
    std::map<std::string, std::map<std::string, double>> weights;
    std::map<std::string, Pos> tagdict;
    std::set<std::string> copular_list = default_copular_verbs();
    std::set<std::string> passive_aux_list = default_passive_aux();

    bool operator==(const TagModel&) const = default;
};

namespace detail {

inline const std::vector<std::string>& tag_names() {
    static const std::vector<std::string> t = {"ADJ", "NOUN", "OTHER", "PRON", "VERB"};
    return t;
}

inline std::string feature_word(const std::string& lower) {
    if (contains_digit(lower)) return "!DIGITS";
    if (lower.find('-') != std::string::npos) return "!HYPHEN";
    return lower;
}

inline std::string word_shape(const std::string& w) {
    std::string shape;
    char prev = 0;
    for (char c : w) {
        char k = ascii_upper(c) ? 'X' : ascii_alpha(c) ? 'x' : ascii_digit(c) ? 'd' : '-';
        if (k != prev) shape.push_back(k);
        prev = k;
    }
    return shape;
}

// Feature set: current word, suffixes up to length 3, previous tag, previous
// word, next word, word shape, plus a bias term.
inline std::vector<std::string> features(const std::vector<std::string>& ctx, std::size_t i,
                                         const std::string& surface, const std::string& prev_tag) {
    std::vector<std::string> f;
    f.reserve(9);
    const std::string& w = ctx[i];
    f.push_back("bias");
    f.push_back("w=" + w);
    for (std::size_t n = 1; n <= 3 && n <= w.size(); ++n) f.push_back("suf" + std::to_string(n) + "=" + w.substr(w.size() - n));
    f.push_back("shape=" + word_shape(surface));
    f.push_back("pt=" + prev_tag);
    f.push_back("pw=" + ctx[i - 1]);
    f.push_back("nw=" + ctx[i + 1]);
    return f;
}

struct PerceptronTrainer {
    std::map<std::string, std::map<std::string, double>> weights;
    std::map<std::string, std::map<std::string, double>> totals;
    std::map<std::string, std::map<std::string, long long>> stamps;
    long long instances = 0;

    std::string predict(const std::vector<std::string>& feats) const {
        std::map<std::string, double> scores;
        for (const auto& f : feats) {
            auto it = weights.find(f);
            if (it == weights.end()) continue;
            for (const auto& [tag, w] : it->second) scores[tag] += w;
        }
        std::string best = tag_names().front();
        double best_score = scores.count(best) ? scores[best] : 0.0;
        for (const auto& tag : tag_names()) {
            double s = scores.count(tag) ? scores[tag] : 0.0;
            if (s > best_score) {
                best_score = s;
                best = tag;
            }
        }
        return best;
    }

    void update(const std::string& truth, const std::string& guess, const std::vector<std::string>& feats) {
        ++instances;
        if (truth == guess) return;
        for (const auto& f : feats) {
            bump(f, truth, 1.0);
            bump(f, guess, -1.0);
        }
    }

    void bump(const std::string& f, const std::string& tag, double by) {
        double& w = weights[f][tag];
        totals[f][tag] += (instances - stamps[f][tag]) * w;
        stamps[f][tag] = instances;
        w += by;
    }

    std::map<std::string, std::map<std::string, double>> averaged() const {
        std::map<std::string, std::map<std::string, double>> avg;
        for (const auto& [f, tags] : weights) {
            for (const auto& [tag, w] : tags) {
                double total = 0;
                if (auto it = totals.find(f); it != totals.end())
                    if (auto jt = it->second.find(tag); jt != it->second.end()) total = jt->second;
                long long stamp = 0;
                if (auto it = stamps.find(f); it != stamps.end())
                    if (auto jt = it->second.find(tag); jt != it->second.end()) stamp = jt->second;
                total += static_cast<double>(instances - stamp) * w;
                double a = instances > 0 ? total / static_cast<double>(instances) : 0.0;
                a = std::round(a * 1e4) / 1e4;  // quantize: compact model file
                if (a != 0.0) avg[f][tag] = a;
            }
        }
        return avg;
    }
};

}  // namespace detail

// Trains the averaged perceptron. Deterministic for a fixed seed (the
// per-epoch shuffle is the only randomness). Also learns a tagdict of
// frequent unambiguous words; closed-class entries override it.
inline TagModel train_tagger(const std::vector<TrainSentence>& corpus, int epochs, std::uint64_t seed = 1) {
    if (corpus.empty()) throw argument_error("train_tagger: empty corpus");
    if (epochs < 1) throw argument_error("train_tagger: epochs must be >= 1");

    TagModel model;

    // frequent unambiguous words bypass the perceptron
    std::map<std::string, std::map<Pos, long long>> counts;
    for (const auto& sent : corpus)
        for (const auto& [w, t] : sent) counts[to_lower(w)][t]++;
    for (const auto& [w, byTag] : counts) {
        long long total = 0, best = 0;
        Pos best_tag = Pos::Other;
        for (const auto& [t, n] : byTag) {
            total += n;
            if (n > best) {
                best = n;
                best_tag = t;
            }
        }
        if (total >= 10 && static_cast<double>(best) / static_cast<double>(total) >= 0.97)
            model.tagdict[w] = best_tag;
    }
    for (const auto& [w, t] : closed_class_tagdict()) model.tagdict[w] = t;

    detail::PerceptronTrainer trainer;
    std::vector<std::size_t> order(corpus.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);

    for (int epoch = 0; epoch < epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t idx : order) {
            const TrainSentence& sent = corpus[idx];
            std::vector<std::string> ctx;
            ctx.reserve(sent.size() + 2);
            ctx.push_back("-START-");
            for (const auto& [w, t] : sent) ctx.push_back(detail::feature_word(to_lower(w)));
            ctx.push_back("-END-");
            std::string prev = "-START-";
            for (std::size_t i = 0; i < sent.size(); ++i) {
                const std::string lower = to_lower(sent[i].first);
                std::string guess;
                auto dict = model.tagdict.find(lower);
                if (dict != model.tagdict.end()) {
                    guess = pos_name(dict->second);
                } else {
                    auto feats = detail::features(ctx, i + 1, sent[i].first, prev);
                    guess = trainer.predict(feats);
                    trainer.update(pos_name(sent[i].second), guess, feats);
                }
                prev = guess;
            }
        }
    }
    model.weights = trainer.averaged();
    return model;
}

// Tags every token (none stays UNSET), lemmatizes, and sets the copular and
// passive-auxiliary flags from the model's lemma lists.
inline Document tag_tokens(Document doc, const TagModel& model, const Lemmatizer& lemmatizer) {
    for (auto& sent : doc.sentences) {
        std::vector<std::string> ctx;
        ctx.reserve(sent.size() + 2);
        ctx.push_back("-START-");
        for (const auto& t : sent) ctx.push_back(detail::feature_word(t.lower));
        ctx.push_back("-END-");
        std::string prev = "-START-";
        for (std::size_t i = 0; i < sent.size(); ++i) {
            Token& tok = sent[i];
            if (tok.pos == Pos::Other) {
                // punctuation/numerals fixed at tokenize time
            } else if (auto it = model.tagdict.find(tok.lower); it != model.tagdict.end()) {
                tok.pos = it->second;
            } else {
                std::map<std::string, double> scores;
                auto feats = detail::features(ctx, i + 1, tok.surface, prev);
                for (const auto& f : feats) {
                    auto w = model.weights.find(f);
                    if (w == model.weights.end()) continue;
                    for (const auto& [tag, wt] : w->second) scores[tag] += wt;
                }
                std::string best = detail::tag_names().front();
                double best_score = scores.count(best) ? scores[best] : 0.0;
                for (const auto& tag : detail::tag_names()) {
                    double s = scores.count(tag) ? scores[tag] : 0.0;
                    if (s > best_score) {
                        best_score = s;
                        best = tag;
                    }
                }
                tok.pos = pos_from_name(best);
            }
            if (tok.pos == Pos::Unset) tok.pos = Pos::Other;
            tok = lemmatizer.apply(std::move(tok));
            tok.is_copular = tok.pos == Pos::Verb && model.copular_list.count(tok.lemma) > 0;
            tok.is_passive_aux = model.passive_aux_list.count(tok.lemma) > 0;
            prev = pos_name(tok.pos);
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Model serialization (single JSON file)
// ---------------------------------------------------------------------------

inline void save_tag_model(const TagModel& model, const std::string& path) {
    nlohmann::ordered_json j;
    j["weights"] = nlohmann::ordered_json::object();
    for (const auto& [f, tags] : model.weights) {
        nlohmann::ordered_json t = nlohmann::ordered_json::object();
        for (const auto& [tag, w] : tags) t[tag] = w;
        j["weights"][f] = std::move(t);
    }
    j["tagdict"] = nlohmann::ordered_json::object();
    for (const auto& [w, t] : model.tagdict) j["tagdict"][w] = pos_name(t);
    j["copular"] = model.copular_list;
    j["passive_aux"] = model.passive_aux_list;
    std::ofstream out(path);
    if (!out) throw io_error("cannot write tagger model: " + path);
    out << j.dump() << "\n";
}

inline TagModel load_tag_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open tagger model: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("tagger model " + path + ": " + e.what());
    }
    TagModel model;
    for (const auto& [f, tags] : j.at("weights").items())
        for (const auto& [tag, w] : tags.items()) model.weights[f][tag] = w.get<double>();
    for (const auto& [w, t] : j.at("tagdict").items()) {
        Pos p = pos_from_name(t.get<std::string>());
        if (p == Pos::Unset) throw parse_error("tagger model: unknown tag for '" + w + "'");
        model.tagdict[w] = p;
    }
    model.copular_list.clear();
    for (const auto& v : j.at("copular")) model.copular_list.insert(v.get<std::string>());
    model.passive_aux_list.clear();
    for (const auto& v : j.at("passive_aux")) model.passive_aux_list.insert(v.get<std::string>());
    return model;
}

}  // namespace keypartx
