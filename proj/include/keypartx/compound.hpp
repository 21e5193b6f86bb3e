#pragma once

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "keypartx/core.hpp"

namespace keypartx {

inline const std::set<std::string>& default_negation_words() {
    static const std::set<std::string> s = {"hardly", "scarcely", "barely", "no",    "not",
                                            "none",   "neither",  "nor",   "never"};
    return s;
}

// Demonyms that fuse with a following noun ("thai" + "food" -> "thaifood").
inline const std::set<std::string>& default_nationality_words() {
    static const std::set<std::string> s = {
        "thai",     "chinese",  "japanese", "korean",   "indian",     "french",   "italian",
        "spanish",  "german",   "british",  "english",  "american",   "mexican",  "greek",
        "turkish",  "russian",  "vietnamese", "malaysian", "indonesian", "filipino", "burmese",
        "lao",      "khmer",    "cambodian", "balinese", "australian", "dutch",    "swedish",
        "finnish",  "danish",   "norwegian", "irish",    "scottish",   "canadian", "brazilian",
        "asian",    "european", "western",   "local"};
    return s;
}

struct CompoundRules {
    std::set<std::string> negation_words = default_negation_words();
    std::set<std::string> nationality_words = default_nationality_words();
    bool noun_noun_enabled = true;
    bool entity_heuristic_enabled = true;
};

// Word-per-line list files for negation/nationality overrides.
inline std::set<std::string> load_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open word list: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w = trim(line);
        if (!w.empty() && w[0] != '#') words.insert(to_lower(w));
    }
    return words;
}

namespace detail {

inline std::string strip_hyphens(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != '-') out.push_back(c);
    return out;
}

inline void redensify(Document& doc) {
    for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
        int ti = 0;
        for (auto& tok : doc.sentences[si]) {
            tok.sent_index = static_cast<int>(si);
            tok.tok_index = ti++;
        }
    }
}

inline Token make_compound(const std::vector<Token>& parts, std::string lower) {
    Token t;
    for (const auto& p : parts) t.surface += p.surface;
    t.lower = std::move(lower);
    t.lemma = t.lower;
    t.pos = Pos::Noun;
    t.sent_index = parts.front().sent_index;
    t.tok_index = parts.front().tok_index;
    t.plural = parts.back().plural;
    return t;
}

inline bool capitalized_word(const Token& t) {
    return !t.surface.empty() && ascii_upper(t.surface[0]) && is_word_chars(t.surface);
}

}  // namespace detail

namespace detail {

// One pass over the four compound triggers, in order.
inline Document compound_pass(Document doc, const CompoundRules& rules) {
    for (auto& sent : doc.sentences) {
        // 1) hyphen-joined token -> hyphens removed, NOUN
        for (auto& tok : sent) {
            if (tok.lower.find('-') != std::string::npos && is_word_chars(tok.lower)) {
                tok.lower = detail::strip_hyphens(tok.lower);
                tok.lemma = tok.lower;
                tok.pos = Pos::Noun;
            }
        }

        // 2) quoted span of <= 3 word tokens -> concatenated NOUN, quotes dropped
        {
            Sentence out;
            std::size_t i = 0;
            while (i < sent.size()) {
                if (sent[i].lower == "\"") {
                    std::size_t close = i + 1;
                    while (close < sent.size() && sent[close].lower != "\"") ++close;
                    std::size_t span = close - i - 1;
                    if (close < sent.size() && span >= 1 && span <= 3) {
                        std::vector<Token> parts(sent.begin() + i + 1, sent.begin() + close);
                        bool words = true;
                        for (const auto& p : parts)
                            if (p.pos == Pos::Other && !is_word_chars(p.lower)) words = false;
                        if (words) {
                            std::string lower;
                            for (const auto& p : parts) lower += p.lower;
                            out.push_back(detail::make_compound(parts, std::move(lower)));
                            i = close + 1;
                            continue;
                        }
                    }
                }
                out.push_back(sent[i]);
                ++i;
            }
            sent = std::move(out);
        }

        // 3) entity heuristic: run of >= 2 capitalized mid-sentence words
        if (rules.entity_heuristic_enabled) {
            Sentence out;
            std::size_t i = 0;
            while (i < sent.size()) {
                if (i > 0 && detail::capitalized_word(sent[i])) {
                    std::size_t j = i;
                    while (j < sent.size() && detail::capitalized_word(sent[j])) ++j;
                    if (j - i >= 2) {
                        std::vector<Token> parts(sent.begin() + i, sent.begin() + j);
                        std::string lower;
                        for (const auto& p : parts) lower += p.lower;
                        out.push_back(detail::make_compound(parts, std::move(lower)));
                        i = j;
                        continue;
                    }
                }
                out.push_back(sent[i]);
                ++i;
            }
            sent = std::move(out);
        }

        // 4) noun-noun (and nationality-adjective + noun) fused on lemmas
        if (rules.noun_noun_enabled) {
            Sentence out;
            std::size_t i = 0;
            while (i < sent.size()) {
                bool nat = sent[i].pos == Pos::Adj && rules.nationality_words.count(sent[i].lemma) > 0 &&
                           i + 1 < sent.size() && sent[i + 1].pos == Pos::Noun;
                if (sent[i].pos == Pos::Noun || nat) {
                    std::size_t j = i + 1;
                    while (j < sent.size() && sent[j].pos == Pos::Noun) ++j;
                    if (j - i >= 2) {
                        std::vector<Token> parts(sent.begin() + i, sent.begin() + j);
                        std::string lower;
                        for (const auto& p : parts) lower += p.lemma.empty() ? p.lower : p.lemma;
                        out.push_back(detail::make_compound(parts, std::move(lower)));
                        i = j;
                        continue;
                    }
                }
                out.push_back(sent[i]);
                ++i;
            }
            sent = std::move(out);
        }
    }
    redensify(doc);
    return doc;
}

}  // namespace detail

// Step 2: compound nouns. Triggers, in order: hyphen-joined tokens, quoted
// spans of up to three tokens, runs of capitalized mid-sentence words, and
// (optionally) adjacent noun-noun / nationality-adjective+noun runs fused on
// lemmas. The compound replaces its parts as a single NOUN token. Passes
// repeat until nothing more fuses, so a fused noun can join a neighbour
// ("thai" + "localfood") and the result is a fixpoint.
inline Document form_compound_nouns(Document doc, const CompoundRules& rules = {}) {
    std::size_t before = doc.token_count() + 1;
    while (doc.token_count() < before) {
        before = doc.token_count();
        doc = detail::compound_pass(std::move(doc), rules);
    }
    return doc;
}

namespace detail {

inline bool third_person_pronoun(const std::string& w) {
    return w == "it" || w == "they" || w == "them" || w == "this" || w == "these" || w == "that" ||
           w == "those";
}

inline bool plural_pronoun(const std::string& w) {
    return w == "they" || w == "them" || w == "these" || w == "those";
}

}  // namespace detail

// Step 3: third-person pronouns are replaced by the most recent noun in the
// same or immediately preceding sentence. Plural pronouns prefer the most
// recent plural noun. Determiner uses (pronoun directly before a noun) and
// pronouns with no antecedent in range stay untouched.
inline Document resolve_coreference(Document doc) {
    for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
        Sentence& sent = doc.sentences[si];
        for (std::size_t ti = 0; ti < sent.size(); ++ti) {
            Token& tok = sent[ti];
            if (tok.pos != Pos::Pron || !detail::third_person_pronoun(tok.lower)) continue;
            if (ti + 1 < sent.size() && sent[ti + 1].pos == Pos::Noun) continue;  // determiner use

            const Token* antecedent = nullptr;
            const Token* plural_antecedent = nullptr;
            auto scan = [&](const Sentence& s, std::size_t upto) {
                for (std::size_t k = 0; k < upto; ++k) {
                    if (s[k].pos != Pos::Noun) continue;
                    antecedent = &s[k];
                    if (s[k].plural) plural_antecedent = &s[k];
                }
            };
            if (si > 0) scan(doc.sentences[si - 1], doc.sentences[si - 1].size());
            scan(sent, ti);

            const Token* chosen = antecedent;
            if (detail::plural_pronoun(tok.lower) && plural_antecedent) chosen = plural_antecedent;
            if (!chosen) continue;

            Token replacement = *chosen;
            replacement.sent_index = tok.sent_index;
            replacement.tok_index = tok.tok_index;
            tok = std::move(replacement);
        }
    }
    return doc;
}

// Step 4: a negation word directly before an adjective or verb (one
// intervening adverb allowed, the adverb is dropped) fuses into a single
// negated token: "not expensive" -> "notexpensive".
inline Document compound_negation(Document doc, const CompoundRules& rules = {}) {
    for (auto& sent : doc.sentences) {
        Sentence out;
        std::size_t i = 0;
        while (i < sent.size()) {
            if (rules.negation_words.count(sent[i].lower) > 0 && sent[i].pos != Pos::Noun) {
                std::size_t target = i + 1;
                if (target < sent.size() && adverb_like(sent[target])) ++target;
                if (target < sent.size() && !sent[target].negated &&
                    (sent[target].pos == Pos::Adj || sent[target].pos == Pos::Verb)) {
                    Token fused = sent[target];
                    fused.surface = sent[i].surface + fused.surface;
                    fused.lower = sent[i].lower + fused.lower;
                    fused.lemma = sent[i].lower + fused.lemma;
                    fused.negated = true;
                    fused.sent_index = sent[i].sent_index;
                    fused.tok_index = sent[i].tok_index;
                    out.push_back(std::move(fused));
                    i = target + 1;
                    continue;
                }
            }
            out.push_back(sent[i]);
            ++i;
        }
        sent = std::move(out);
    }
    detail::redensify(doc);
    return doc;
}

}  // namespace keypartx
