#pragma once

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "keypartx/core.hpp"

namespace keypartx {

// ---------------------------------------------------------------------------
// Lexicon: word -> corpus frequency, one "word<TAB>count" per line.
// ---------------------------------------------------------------------------

struct Lexicon {
    std::map<std::string, long long> entries;

    bool contains(std::string_view w) const { return entries.find(std::string(w)) != entries.end(); }
    long long frequency(std::string_view w) const {
        auto it = entries.find(std::string(w));
        return it == entries.end() ? 0 : it->second;
    }
    std::size_t size() const { return entries.size(); }
};

inline Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open lexicon file: " + path);
    Lexicon lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw parse_error("lexicon line " + std::to_string(lineno) + ": expected word<TAB>count");
        std::string word = line.substr(0, tab);
        long long count = 0;
        try {
            count = std::stoll(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw parse_error("lexicon line " + std::to_string(lineno) + ": bad count");
        }
        if (!is_plain_word(word))
            throw parse_error("lexicon line " + std::to_string(lineno) +
                              ": key must be lowercase alphabetic-or-hyphen: '" + word + "'");
        if (count < 1)
            throw parse_error("lexicon line " + std::to_string(lineno) + ": count must be >= 1");
        lex.entries[word] += count;
    }
    return lex;
}

// ---------------------------------------------------------------------------
// Sentence segmentation
// ---------------------------------------------------------------------------

namespace detail {

// Multi-byte ellipsis U+2026.
inline bool is_ellipsis_at(std::string_view s, std::size_t i) {
    return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
           static_cast<unsigned char>(s[i + 1]) == 0x80 && static_cast<unsigned char>(s[i + 2]) == 0xA6;
}

inline bool is_terminator_at(std::string_view s, std::size_t i, std::size_t& len) {
    if (s[i] == '.' || s[i] == '!' || s[i] == '?') {
        len = 1;
        return true;
    }
    if (is_ellipsis_at(s, i)) {
        len = 3;
        return true;
    }
    return false;
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace detail

// Splits on runs of . ! ? and the ellipsis character when the run is followed
// by whitespace or end-of-text. Terminators inside double quotes do not end a
// sentence. Whitespace-only segments are dropped.
inline std::vector<std::string> segment_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    bool in_quotes = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '"') {
            in_quotes = !in_quotes;
            ++i;
            continue;
        }
        std::size_t tlen = 0;
        if (!in_quotes && detail::is_terminator_at(text, i, tlen)) {
            std::size_t j = i + tlen;
            while (j < text.size() && detail::is_terminator_at(text, j, tlen)) j += tlen;
            if (j >= text.size() || detail::is_space(text[j])) {
                std::string sent = trim(text.substr(start, j - start));
                if (!sent.empty()) sentences.push_back(std::move(sent));
                start = j;
            }
            i = j;
            continue;
        }
        ++i;
    }
    std::string tail = trim(text.substr(start));
    if (!tail.empty()) sentences.push_back(std::move(tail));
    return sentences;
}

// ---------------------------------------------------------------------------
// Tokenization
// ---------------------------------------------------------------------------

namespace detail {

// Peels a run of identical punctuation characters so "..." and "!!!" stay
// single tokens while '"(' splits in two.
inline std::size_t punct_run(std::string_view chunk, std::size_t from) {
    std::size_t n = 1;
    while (from + n < chunk.size() && chunk[from + n] == chunk[from]) ++n;
    // treat the UTF-8 ellipsis as one unit
    if (is_ellipsis_at(chunk, from)) return 3;
    return n;
}

inline bool is_core_char(char c) { return ascii_alpha(c) || ascii_digit(c) || static_cast<unsigned char>(c) >= 0x80; }

}  // namespace detail

// Whitespace split, then leading/trailing punctuation peeled into OTHER
// tokens. Internal hyphens and apostrophes stay attached. Tokens containing
// digits and pure-punctuation tokens get pos OTHER; word tokens stay UNSET.
inline std::vector<Token> tokenize(std::string_view sentence, int sent_index = 0) {
    std::vector<Token> out;
    auto push = [&](std::string_view surf, bool punct) {
        Token t;
        t.surface = std::string(surf);
        t.lower = to_lower(surf);
        t.sent_index = sent_index;
        t.tok_index = static_cast<int>(out.size());
        if (punct || contains_digit(surf)) t.pos = Pos::Other;
        out.push_back(std::move(t));
    };

    std::size_t i = 0;
    while (i < sentence.size()) {
        while (i < sentence.size() && detail::is_space(sentence[i])) ++i;
        if (i >= sentence.size()) break;
        std::size_t j = i;
        while (j < sentence.size() && !detail::is_space(sentence[j])) ++j;
        std::string_view chunk = sentence.substr(i, j - i);
        i = j;

        if (all_punct(chunk)) {
            push(chunk, true);
            continue;
        }
        // peel leading punctuation
        std::size_t b = 0;
        while (b < chunk.size() && !detail::is_core_char(chunk[b])) {
            std::size_t n = detail::punct_run(chunk, b);
            push(chunk.substr(b, n), true);
            b += n;
        }
        // find end of core: last alnum char
        std::size_t e = chunk.size();
        while (e > b && !detail::is_core_char(chunk[e - 1])) --e;
        if (e > b) push(chunk.substr(b, e - b), false);
        // peel trailing punctuation
        std::size_t p = e;
        while (p < chunk.size()) {
            std::size_t n = detail::punct_run(chunk, p);
            push(chunk.substr(p, n), true);
            p += n;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spelling correction
// ---------------------------------------------------------------------------

// Damerau-Levenshtein distance (optimal string alignment), capped: returns
// max_dist + 1 as soon as the true distance exceeds max_dist.
inline int damerau_levenshtein(std::string_view a, std::string_view b, int max_dist = 2) {
    const int la = static_cast<int>(a.size());
    const int lb = static_cast<int>(b.size());
    if (std::abs(la - lb) > max_dist) return max_dist + 1;
    std::vector<int> prev2(lb + 1), prev(lb + 1), cur(lb + 1);
    for (int j = 0; j <= lb; ++j) prev[j] = j;
    for (int i = 1; i <= la; ++i) {
        cur[0] = i;
        int row_min = cur[0];
        for (int j = 1; j <= lb; ++j) {
            int cost = (a[i - 1] == b[j - 1]) ? 0 : 1;
            int v = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                v = std::min(v, prev2[j - 2] + 1);
            cur[j] = v;
            row_min = std::min(row_min, v);
        }
        if (row_min > max_dist) return max_dist + 1;
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    return std::min(prev[lb], max_dist + 1);
}

// Best lexicon candidate within edit distance 1, falling back to distance 2.
// Highest frequency wins; ties go to the lexicographically smaller word.
// Returns empty string when nothing is within distance 2.
inline std::string best_correction(std::string_view word, const Lexicon& lex) {
    std::string best[3];       // per distance 1..2 (index 1,2)
    long long best_freq[3] = {0, -1, -1};
    for (const auto& [cand, freq] : lex.entries) {
        int d = damerau_levenshtein(word, cand, 2);
        if (d < 1 || d > 2) continue;
        if (freq > best_freq[d] || (freq == best_freq[d] && cand < best[d])) {
            best[d] = cand;
            best_freq[d] = freq;
        }
    }
    if (!best[1].empty()) return best[1];
    if (!best[2].empty()) return best[2];
    return {};
}

// Leaves lexicon words, punctuation, numerals, and anything non-word-shaped
// untouched. Unknown words move to the best candidate; words with no
// candidate within distance 2 are kept verbatim.
inline Token correct_spelling(Token tok, const Lexicon& lex) {
    if (tok.pos != Pos::Unset) return tok;  // punctuation / numerals
    if (!is_plain_word(tok.lower)) return tok;
    if (tok.lower.find('-') != std::string::npos) return tok;  // hyphenated: compound material
    if (lex.contains(tok.lower)) return tok;
    std::string fixed = best_correction(tok.lower, lex);
    if (!fixed.empty()) tok.lower = fixed;
    return tok;
}

inline Sentence correct_spelling(Sentence sent, const Lexicon& lex) {
    for (auto& t : sent) t = correct_spelling(std::move(t), lex);
    return sent;
}

}  // namespace keypartx
