#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keypartx {

inline constexpr const char* kx_version = "1.0.0";

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct kx_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : kx_error {
    using kx_error::kx_error;
};
struct parse_error : kx_error {
    using kx_error::kx_error;
};
struct schema_error : kx_error {
    using kx_error::kx_error;
};
struct argument_error : kx_error {
    using kx_error::kx_error;
};

// ---------------------------------------------------------------------------
// Tokens and documents
// ---------------------------------------------------------------------------

enum class Pos { Adj, Verb, Noun, Pron, Other, Unset };

inline const char* pos_name(Pos p) {
    switch (p) {
        case Pos::Adj: return "ADJ";
        case Pos::Verb: return "VERB";
        case Pos::Noun: return "NOUN";
        case Pos::Pron: return "PRON";
        case Pos::Other: return "OTHER";
        case Pos::Unset: return "UNSET";
    }
    return "UNSET";
}

// One surface word. `lower` is the lowercase surface until a compounding step
// rewrites it (then it holds the compound form). `label` is the 2a/2v/2n
// graph label and stays empty until suffix mapping runs.
struct Token {
    std::string surface;
    std::string lower;
    int sent_index = 0;
    int tok_index = 0;
    Pos pos = Pos::Unset;
    std::string lemma;
    std::string label;
    bool is_copular = false;
    bool is_passive_aux = false;
    bool negated = false;
    bool plural = false;

    bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct Document {
    std::string id;
    std::vector<Sentence> sentences;

    bool operator==(const Document&) const = default;

    std::size_t token_count() const {
        std::size_t n = 0;
        for (const auto& s : sentences) n += s.size();
        return n;
    }
};

// ---------------------------------------------------------------------------
// ASCII string helpers (corpus handling is byte-oriented UTF-8; only ASCII
// letters are case-mapped)
// ---------------------------------------------------------------------------

inline bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline char ascii_tolower(char c) { return ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

inline std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(ascii_tolower(c));
    return out;
}

inline bool is_word_chars(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!ascii_alpha(c) && c != '-' && c != '\'') return false;
    return ascii_alpha(s.front()) && ascii_alpha(s.back());
}

// Plain lowercase-alphabetic word, optionally with internal hyphens. This is
// the shape of lexicon keys and the only shape the spell corrector touches.
inline bool is_plain_word(std::string_view s) {
    if (s.empty()) return false;
    bool prev_hyphen = true;
    for (char c : s) {
        if (c == '-') {
            if (prev_hyphen) return false;
            prev_hyphen = true;
        } else if (c >= 'a' && c <= 'z') {
            prev_hyphen = false;
        } else {
            return false;
        }
    }
    return !prev_hyphen;
}

inline bool contains_digit(std::string_view s) {
    for (char c : s)
        if (ascii_digit(c)) return true;
    return false;
}

inline bool all_punct(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (ascii_alpha(c) || ascii_digit(c) || static_cast<unsigned char>(c) >= 0x80) return false;
    return true;
}

// Adverb-shaped filler the patterns may skip over ("highly recommended",
// "not very good"). The 5-tag scheme files adverbs under OTHER.
inline bool adverb_like(const Token& t) {
    if (t.pos != Pos::Other || !is_word_chars(t.lower)) return false;
    static const char* common[] = {"very",  "really", "quite", "so",        "too",   "just",      "pretty",
                                   "super", "extremely", "highly", "totally", "absolutely", "incredibly"};
    for (const char* w : common)
        if (t.lower == w) return true;
    return t.lower.size() > 3 && t.lower.compare(t.lower.size() - 2, 2, "ly") == 0;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\n' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\n' || s[e - 1] == '\r')) --e;
    return std::string(s.substr(b, e - b));
}

// FNV-1a, used for the corpus checksum in the run manifest.
inline std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace keypartx
