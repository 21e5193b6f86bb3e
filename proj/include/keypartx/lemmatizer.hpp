#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "keypartx/core.hpp"
#include "keypartx/normalize.hpp"

namespace keypartx {

// Rule-based lemmatizer: irregular-form table first, then suffix stripping
// with doubling and e-restoration. A known-word vocabulary (normally the
// spell-correction lexicon) arbitrates between stem candidates; without one
// the rules fall back to plain heuristics.
class Lemmatizer {
public:
    Lemmatizer() = default;

    void add_irregular(std::string form, std::string lemma, Pos pos = Pos::Unset) {
        irregulars_[{std::move(form), pos}] = std::move(lemma);
    }

    void set_vocabulary(std::set<std::string> vocab) { vocab_ = std::move(vocab); }

    bool knows(const std::string& w) const { return vocab_.count(w) > 0; }

    // Irregular table file: form<TAB>lemma[<TAB>POS], '#' comments allowed.
    void load_irregulars(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw io_error("cannot open irregular-form table: " + path);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            auto t1 = line.find('\t');
            if (t1 == std::string::npos)
                throw parse_error("irregular table line " + std::to_string(lineno) + ": expected form<TAB>lemma");
            auto t2 = line.find('\t', t1 + 1);
            std::string form = line.substr(0, t1);
            std::string lemma = (t2 == std::string::npos) ? line.substr(t1 + 1) : line.substr(t1 + 1, t2 - t1 - 1);
            Pos pos = Pos::Unset;
            if (t2 != std::string::npos) {
                std::string p = line.substr(t2 + 1);
                if (p == "VERB") pos = Pos::Verb;
                else if (p == "NOUN") pos = Pos::Noun;
                else if (p == "ADJ") pos = Pos::Adj;
                else if (p != "ANY")
                    throw parse_error("irregular table line " + std::to_string(lineno) + ": unknown POS '" + p + "'");
            }
            add_irregular(std::move(form), std::move(lemma), pos);
        }
    }

    std::string lemma(const std::string& word, Pos pos) const {
        if (pos == Pos::Other || pos == Pos::Pron || pos == Pos::Unset) return word;
        if (auto it = irregulars_.find({word, pos}); it != irregulars_.end()) return it->second;
        if (auto it = irregulars_.find({word, Pos::Unset}); it != irregulars_.end()) return it->second;
        switch (pos) {
            case Pos::Verb: return verb_lemma(word);
            case Pos::Noun: return noun_lemma(word);
            case Pos::Adj: return adj_lemma(word);
            default: return word;
        }
    }

    Token apply(Token tok) const {
        tok.lemma = lemma(tok.lower, tok.pos);
        if (tok.pos == Pos::Noun && tok.lemma != tok.lower && tok.lower.size() > tok.lemma.size() &&
            tok.lower.back() == 's')
            tok.plural = true;
        return tok;
    }

private:
    static bool ends_with(std::string_view s, std::string_view suf) {
        return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
    }

    static bool double_consonant_end(std::string_view s) {
        if (s.size() < 3) return false;
        char a = s[s.size() - 1], b = s[s.size() - 2];
        if (a != b || !ascii_alpha(a)) return false;
        static const std::string keep = "lsz";  // "ll"/"ss"/"zz" endings are usually real
        return keep.find(a) == std::string::npos;
    }

    // Resolve a stripped stem: prefer the stem itself, then e-restoration,
    // then undoubling, checked against the vocabulary when available.
    std::string resolve_stem(const std::string& stem, const std::string& fallback) const {
        if (!vocab_.empty()) {
            if (knows(stem)) return stem;
            if (knows(stem + "e")) return stem + "e";
            if (double_consonant_end(stem)) {
                std::string undoubled = stem.substr(0, stem.size() - 1);
                if (knows(undoubled)) return undoubled;
            }
            return fallback;
        }
        if (double_consonant_end(stem)) return stem.substr(0, stem.size() - 1);
        if (!stem.empty() && stem.back() == 'v') return stem + "e";  // lov -> love
        return stem;
    }

    std::string verb_lemma(const std::string& w) const {
        if (ends_with(w, "ing") && w.size() > 4) {
            std::string stem = w.substr(0, w.size() - 3);
            return resolve_stem(stem, stem);
        }
        if (ends_with(w, "ied") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
        if (ends_with(w, "ed") && w.size() > 3) {
            std::string stem = w.substr(0, w.size() - 2);
            return resolve_stem(stem, stem);
        }
        if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
        if (ends_with(w, "es") && w.size() > 3 && sibilant_stem(w.substr(0, w.size() - 2)))
            return w.substr(0, w.size() - 2);
        if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 2) return w.substr(0, w.size() - 1);
        return w;
    }

    std::string noun_lemma(const std::string& w) const {
        if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
        if (ends_with(w, "es") && w.size() > 3 && sibilant_stem(w.substr(0, w.size() - 2))) {
            std::string stem = w.substr(0, w.size() - 2);
            return resolve_stem(stem, stem);  // breezes -> breeze, beaches -> beach
        }
        if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is") && w.size() > 2)
            return w.substr(0, w.size() - 1);
        return w;
    }

    std::string adj_lemma(const std::string& w) const {
        if (ends_with(w, "ier") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
        if (ends_with(w, "iest") && w.size() > 5) return w.substr(0, w.size() - 4) + "y";
        if (ends_with(w, "est") && w.size() > 5) {
            std::string stem = w.substr(0, w.size() - 3);
            std::string r = resolve_stem(stem, w);
            return (vocab_.empty() || r != w) ? r : w;
        }
        if (ends_with(w, "er") && w.size() > 4) {
            std::string stem = w.substr(0, w.size() - 2);
            // only strip when the base is a known word ("nicer" -> "nice",
            // but "clever" stays)
            if (!vocab_.empty()) {
                if (knows(stem)) return stem;
                if (knows(stem + "e")) return stem + "e";
                if (double_consonant_end(stem) && knows(stem.substr(0, stem.size() - 1)))
                    return stem.substr(0, stem.size() - 1);
            }
            return w;
        }
        return w;
    }

    static bool sibilant_stem(std::string_view stem) {
        if (stem.empty()) return false;
        char c = stem.back();
        if (c == 's' || c == 'x' || c == 'z' || c == 'o') return true;
        if (stem.size() >= 2) {
            std::string_view last2 = stem.substr(stem.size() - 2);
            if (last2 == "ch" || last2 == "sh") return true;
        }
        return false;
    }

    std::map<std::pair<std::string, Pos>, std::string> irregulars_;
    std::set<std::string> vocab_;
};

}  // namespace keypartx
