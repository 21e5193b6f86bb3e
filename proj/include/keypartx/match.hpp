#pragma once

#include <set>
#include <string>
#include <vector>

#include "keypartx/core.hpp"
#include "keypartx/tagger.hpp"

namespace keypartx {

enum class MatchPattern { N_COP_A, A_N, V_N, N_PASS_V };

inline const char* pattern_name(MatchPattern p) {
    switch (p) {
        case MatchPattern::N_COP_A: return "N_COP_A";
        case MatchPattern::A_N: return "A_N";
        case MatchPattern::V_N: return "V_N";
        case MatchPattern::N_PASS_V: return "N_PASS_V";
    }
    return "?";
}

struct MatchPair {
    std::string modifier;  // "great2a", "love2v"
    std::string noun;      // "thaifood2n"
    MatchPattern pattern;
    std::string doc_id;
    int sent_index = 0;

    bool operator==(const MatchPair&) const = default;
};

// Step 5 label scheme: adjectives, verbs and nouns get 2a/2v/2n suffixes on
// their lemma so POS homographs stay distinct graph nodes.
inline Document map_suffixes(Document doc) {
    for (auto& sent : doc.sentences) {
        for (auto& tok : sent) {
            switch (tok.pos) {
                case Pos::Adj: tok.label = tok.lemma + "2a"; break;
                case Pos::Verb: tok.label = tok.lemma + "2v"; break;
                case Pos::Noun: tok.label = tok.lemma + "2n"; break;
                default: tok.label.clear();
            }
        }
    }
    return doc;
}

namespace detail {

inline const std::set<std::string>& irregular_participles() {
    static const std::set<std::string> s = {
        "done",  "made",  "taken",  "given",  "seen",   "known",  "found",  "kept",    "built",
        "bought", "brought", "sold", "told",  "left",   "lost",   "won",    "caught",  "felt",
        "met",   "paid",  "put",    "read",   "said",   "shown",  "spent",  "thought", "understood",
        "worn",  "written", "chosen", "driven", "eaten", "fallen", "forgotten", "grown", "held",
        "hidden", "spoken", "stolen", "drunk", "sung",  "swum",   "gone",   "been",    "got",
        "gotten"};
    return s;
}

inline bool participle_surface(const Token& t) {
    if (t.lower.ends_with("ed") || t.lower.ends_with("en")) return true;
    return irregular_participles().count(t.lower) > 0;
}

// comma/conjunction glue inside an adjective run
inline bool adj_run_separator(const Token& t) {
    return t.pos == Pos::Other && (t.lower == "," || t.lower == ";" || t.lower == "&" ||
                                   t.lower == "and" || t.lower == "or");
}

inline bool determiner_or_numeral(const Token& t) {
    if (t.pos != Pos::Other) return false;
    if (contains_digit(t.lower)) return true;
    return t.lower == "the" || t.lower == "a" || t.lower == "an" || t.lower == "some";
}

// Adjective run starting at i: ADJ tokens possibly joined by comma/conjunction
// separators. Returns indices of the ADJ tokens and the position one past the
// last ADJ consumed; empty result when sent[i] is not an ADJ.
inline std::vector<std::size_t> adj_run(const Sentence& sent, std::size_t i, std::size_t& end) {
    std::vector<std::size_t> adjs;
    if (i >= sent.size() || sent[i].pos != Pos::Adj) return adjs;
    adjs.push_back(i);
    std::size_t j = i + 1;
    while (j < sent.size()) {
        if (sent[j].pos == Pos::Adj) {
            adjs.push_back(j);
            ++j;
        } else if (adj_run_separator(sent[j]) && j + 1 < sent.size()) {
            std::size_t k = j + 1;
            // at most one more separator ("great, and cheap")
            if (adj_run_separator(sent[k]) && k + 1 < sent.size()) ++k;
            if (sent[k].pos == Pos::Adj) {
                adjs.push_back(k);
                j = k + 1;
            } else {
                break;
            }
        } else {
            break;
        }
    }
    end = adjs.back() + 1;
    return adjs;
}

inline std::vector<std::size_t> noun_run(const Sentence& sent, std::size_t i, std::size_t& end) {
    std::vector<std::size_t> nouns;
    std::size_t j = i;
    while (j < sent.size() && sent[j].pos == Pos::Noun) nouns.push_back(j), ++j;
    end = j;
    return nouns;
}

struct NounAnchorMatch {
    bool matched = false;
    MatchPattern pattern = MatchPattern::N_COP_A;
    std::vector<std::size_t> nouns;
    std::vector<std::size_t> modifiers;  // ADJ indices (P1) or the verb index (P4)
    std::size_t end = 0;
};

// Tries pattern 1 (N+ Cop+ A+) and pattern 4 (N+ Pass+ V-participle) at a
// noun anchor. One adverb may sit between the verb run and the target.
inline NounAnchorMatch match_at_noun(const Sentence& sent, std::size_t i) {
    NounAnchorMatch m;
    std::size_t after_nouns = 0;
    auto nouns = noun_run(sent, i, after_nouns);
    if (nouns.empty()) return m;

    std::size_t j = after_nouns;
    std::size_t verbs_begin = j;
    while (j < sent.size() && sent[j].pos == Pos::Verb && (sent[j].is_copular || sent[j].is_passive_aux))
        ++j;
    if (j == verbs_begin) return m;  // no copular/aux run

    bool all_passive_aux = true;
    for (std::size_t k = verbs_begin; k < j; ++k)
        if (!sent[k].is_passive_aux) all_passive_aux = false;

    std::size_t t = j;
    if (t < sent.size() && adverb_like(sent[t])) ++t;

    // pattern 1: adjective run after the copular run
    if (t < sent.size() && sent[t].pos == Pos::Adj) {
        std::size_t end = 0;
        auto adjs = adj_run(sent, t, end);
        m.matched = true;
        m.pattern = MatchPattern::N_COP_A;
        m.nouns = std::move(nouns);
        m.modifiers = std::move(adjs);
        m.end = end;
        return m;
    }
    // pattern 4: past participle after a passive auxiliary run
    if (all_passive_aux && t < sent.size() && sent[t].pos == Pos::Verb && !sent[t].is_copular &&
        participle_surface(sent[t])) {
        m.matched = true;
        m.pattern = MatchPattern::N_PASS_V;
        m.nouns = std::move(nouns);
        m.modifiers = {t};
        m.end = t + 1;
        return m;
    }
    return m;
}

}  // namespace detail

// Step 5 matching: a left-to-right scan per sentence. Noun-anchored patterns
// (N+Cop+A, N+Pass+V) take precedence over A+N and V+N; each token joins at
// most one pattern instance.
inline std::vector<MatchPair> match_av2n(const Document& doc) {
    std::vector<MatchPair> pairs;
    for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
        const Sentence& sent = doc.sentences[si];
        auto emit = [&](const Token& modifier, const Token& noun, MatchPattern p) {
            if (modifier.label.empty() || noun.label.empty()) return;
            pairs.push_back({modifier.label, noun.label, p, doc.id, static_cast<int>(si)});
        };

        std::size_t i = 0;
        while (i < sent.size()) {
            const Token& tok = sent[i];
            if (tok.pos == Pos::Noun) {
                auto m = detail::match_at_noun(sent, i);
                if (m.matched) {
                    for (auto mi : m.modifiers)
                        for (auto ni : m.nouns) emit(sent[mi], sent[ni], m.pattern);
                    i = m.end;
                    continue;
                }
                ++i;
                continue;
            }
            if (tok.pos == Pos::Adj) {
                std::size_t after_adjs = 0;
                auto adjs = detail::adj_run(sent, i, after_adjs);
                std::size_t after_nouns = 0;
                auto nouns = detail::noun_run(sent, after_adjs, after_nouns);
                if (!nouns.empty()) {
                    // the noun run may itself anchor pattern 1/4; those win
                    auto anchored = detail::match_at_noun(sent, nouns.front());
                    if (!anchored.matched) {
                        for (auto ai : adjs)
                            for (auto ni : nouns) emit(sent[ai], sent[ni], MatchPattern::A_N);
                        i = after_nouns;
                        continue;
                    }
                }
                i = after_adjs;
                continue;
            }
            if (tok.pos == Pos::Verb && !tok.is_copular) {
                std::size_t j = i + 1;
                if (j < sent.size() && detail::determiner_or_numeral(sent[j])) ++j;
                std::size_t after_nouns = 0;
                auto nouns = detail::noun_run(sent, j, after_nouns);
                if (!nouns.empty()) {
                    auto anchored = detail::match_at_noun(sent, nouns.front());
                    if (!anchored.matched) {
                        for (auto ni : nouns) emit(tok, sent[ni], MatchPattern::V_N);
                        i = after_nouns;
                        continue;
                    }
                }
                ++i;
                continue;
            }
            ++i;
        }
    }
    return pairs;
}

}  // namespace keypartx
