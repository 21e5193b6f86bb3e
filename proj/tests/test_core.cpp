#include <catch2/catch_amalgamated.hpp>

#include "keypartx/core.hpp"

using namespace keypartx;

TEST_CASE("pos names round-trip the enum") {
    CHECK(std::string(pos_name(Pos::Adj)) == "ADJ");
    CHECK(std::string(pos_name(Pos::Verb)) == "VERB");
    CHECK(std::string(pos_name(Pos::Noun)) == "NOUN");
    CHECK(std::string(pos_name(Pos::Pron)) == "PRON");
    CHECK(std::string(pos_name(Pos::Other)) == "OTHER");
    CHECK(std::string(pos_name(Pos::Unset)) == "UNSET");
}

TEST_CASE("trim strips surrounding whitespace only") {
    CHECK(trim("  a b \t") == "a b");
    CHECK(trim("") == "");
    CHECK(trim(" \n ") == "");
    CHECK(trim("x") == "x");
}

TEST_CASE("ascii helpers") {
    CHECK(to_lower("Fire-Vodka") == "fire-vodka");
    CHECK(ascii_alpha('z'));
    CHECK_FALSE(ascii_alpha('3'));
    CHECK(ascii_digit('0'));
    CHECK(is_plain_word("tuk-tuk"));
    CHECK_FALSE(is_plain_word("Tuk"));
    CHECK_FALSE(is_plain_word("a b"));
    CHECK_FALSE(is_plain_word(""));
}

TEST_CASE("adverb_like covers the fixed list and long -ly words") {
    Token t;
    t.pos = Pos::Other;
    t.lower = "very";
    CHECK(adverb_like(t));
    t.lower = "highly";
    CHECK(adverb_like(t));
    t.lower = "breathtakingly";
    CHECK(adverb_like(t));
    t.lower = "fly";  // too short for the -ly rule
    CHECK_FALSE(adverb_like(t));
    t.lower = "table";
    CHECK_FALSE(adverb_like(t));
    t.pos = Pos::Adj;
    t.lower = "very";
    CHECK_FALSE(adverb_like(t));  // only OTHER tokens qualify
}

TEST_CASE("fnv1a is stable and input-sensitive") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("abc") == fnv1a("abc"));
    CHECK(fnv1a("abc") != fnv1a("abd"));
    CHECK(fnv1a("ab") != fnv1a("ba"));
}

TEST_CASE("error types carry their messages and hierarchy") {
    CHECK_THROWS_AS(throw io_error("x"), kx_error);
    CHECK_THROWS_AS(throw parse_error("x"), kx_error);
    CHECK_THROWS_AS(throw schema_error("x"), kx_error);
    CHECK_THROWS_AS(throw argument_error("x"), kx_error);
    try {
        throw parse_error("bad row");
    } catch (const kx_error& e) {
        CHECK(std::string(e.what()) == "bad row");
    }
}

TEST_CASE("document token_count sums sentences") {
    Document d;
    d.sentences.resize(2);
    d.sentences[0].resize(3);
    d.sentences[1].resize(2);
    CHECK(d.token_count() == 5);
}
