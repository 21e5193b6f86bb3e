#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "keypartx/compound.hpp"

using namespace keypartx;

namespace {

Token tok(std::string surface, Pos pos, std::string lemma = "", bool plural = false) {
    Token t;
    t.surface = surface;
    t.lower = to_lower(surface);
    t.lemma = lemma.empty() ? t.lower : std::move(lemma);
    t.pos = pos;
    t.plural = plural;
    return t;
}

Document doc_of(std::vector<Sentence> sentences) {
    Document d;
    d.id = "t";
    d.sentences = std::move(sentences);
    int si = 0;
    for (auto& s : d.sentences) {
        int ti = 0;
        for (auto& t : s) {
            t.sent_index = si;
            t.tok_index = ti++;
        }
        ++si;
    }
    return d;
}

std::vector<std::string> lowers(const Sentence& s) {
    std::vector<std::string> out;
    for (const auto& t : s) out.push_back(t.lower);
    return out;
}

}  // namespace

TEST_CASE("hyphen-joined tokens become nouns with hyphens removed") {
    auto d = doc_of({{tok("we", Pos::Pron), tok("had", Pos::Verb), tok("Fire-Vodka", Pos::Unset)}});
    d = form_compound_nouns(d);
    const auto& t = d.sentences[0][2];
    CHECK(t.lower == "firevodka");
    CHECK(t.lemma == "firevodka");
    CHECK(t.pos == Pos::Noun);
}

TEST_CASE("quoted spans of up to three tokens fuse and drop the quotes") {
    auto d = doc_of({{tok("we", Pos::Pron), tok("ate", Pos::Verb), tok("\"", Pos::Other),
                      tok("pad", Pos::Noun), tok("thai", Pos::Adj), tok("\"", Pos::Other),
                      tok(".", Pos::Other)}});
    d = form_compound_nouns(d);
    auto lw = lowers(d.sentences[0]);
    CHECK(lw == std::vector<std::string>{"we", "ate", "padthai", "."});
    CHECK(d.sentences[0][2].pos == Pos::Noun);

    // span of four stays (too long for the quote rule)
    auto e = doc_of({{tok("\"", Pos::Other), tok("a", Pos::Other), tok("b", Pos::Other),
                      tok("c", Pos::Other), tok("d", Pos::Other), tok("\"", Pos::Other)}});
    auto e2 = form_compound_nouns(e);
    CHECK(e2.token_count() == 6);

    // unclosed quote stays
    auto u = doc_of({{tok("\"", Pos::Other), tok("pad", Pos::Noun), tok("thai", Pos::Noun)}});
    auto u2 = form_compound_nouns(u);
    CHECK(u2.sentences[0][0].lower == "\"");

    // span containing punctuation stays
    auto p = doc_of({{tok("\"", Pos::Other), tok("pad", Pos::Noun), tok(",", Pos::Other),
                      tok("\"", Pos::Other)}});
    auto p2 = form_compound_nouns(p);
    CHECK(p2.token_count() == 4);
}

TEST_CASE("entity heuristic fuses runs of capitalized mid-sentence words") {
    auto d = doc_of({{tok("We", Pos::Pron), tok("visited", Pos::Verb), tok("Koh", Pos::Noun),
                      tok("Samui", Pos::Noun), tok("today", Pos::Other)}});
    auto r = form_compound_nouns(d);
    auto lw = lowers(r.sentences[0]);
    CHECK(lw == std::vector<std::string>{"we", "visited", "kohsamui", "today"});
    CHECK(r.sentences[0][2].pos == Pos::Noun);

    // sentence-initial capitalization alone never triggers
    auto s = doc_of({{tok("Beach", Pos::Noun), tok("life", Pos::Noun)}});
    auto s2 = form_compound_nouns(s, CompoundRules{.noun_noun_enabled = false});
    CHECK(s2.token_count() == 2);

    // single capitalized word stays
    auto one = doc_of({{tok("we", Pos::Pron), tok("like", Pos::Verb), tok("Bangkok", Pos::Noun)}});
    CHECK(form_compound_nouns(one).token_count() == 3);

    // heuristic can be switched off
    CompoundRules off;
    off.entity_heuristic_enabled = false;
    off.noun_noun_enabled = false;
    CHECK(form_compound_nouns(d, off).token_count() == 5);
}

TEST_CASE("noun-noun runs fuse on lemmas") {
    auto d = doc_of({{tok("the", Pos::Other), tok("beach", Pos::Noun),
                      tok("resorts", Pos::Noun, "resort", true), tok(".", Pos::Other)}});
    auto r = form_compound_nouns(d);
    REQUIRE(r.sentences[0].size() == 3);
    const auto& c = r.sentences[0][1];
    CHECK(c.lower == "beachresort");  // fused from lemmas, not surfaces
    CHECK(c.lemma == "beachresort");
    CHECK(c.pos == Pos::Noun);
    CHECK(c.plural);  // last part was plural

    // a run of three nouns fuses in one token
    auto three = doc_of({{tok("night", Pos::Noun), tok("market", Pos::Noun), tok("stall", Pos::Noun)}});
    auto r3 = form_compound_nouns(three);
    REQUIRE(r3.token_count() == 1);
    CHECK(r3.sentences[0][0].lower == "nightmarketstall");

    // switched off: nothing fuses
    CompoundRules off;
    off.noun_noun_enabled = false;
    CHECK(form_compound_nouns(d, off).token_count() == 4);
}

TEST_CASE("nationality adjectives fuse with a following noun") {
    auto d = doc_of({{tok("thai", Pos::Adj), tok("food", Pos::Noun)}});
    auto r = form_compound_nouns(d);
    REQUIRE(r.token_count() == 1);
    CHECK(r.sentences[0][0].lower == "thaifood");
    CHECK(r.sentences[0][0].pos == Pos::Noun);

    // non-nationality adjective does not fuse
    auto n = doc_of({{tok("nice", Pos::Adj), tok("food", Pos::Noun)}});
    CHECK(form_compound_nouns(n).token_count() == 2);

    // nationality adjective with no following noun does not fuse
    auto a = doc_of({{tok("thai", Pos::Adj), tok("delicious", Pos::Adj)}});
    CHECK(form_compound_nouns(a).token_count() == 2);
}

TEST_CASE("triggers compose: hyphen output can join a noun run") {
    auto d = doc_of({{tok("fire-vodka", Pos::Unset), tok("bar", Pos::Noun)}});
    auto r = form_compound_nouns(d);
    REQUIRE(r.token_count() == 1);
    CHECK(r.sentences[0][0].lower == "firevodkabar");
}

TEST_CASE("compounding runs to a fixpoint") {
    // first pass makes "localfood"; the stacked nationality adjective joins next
    auto d = doc_of({{tok("thai", Pos::Adj), tok("local", Pos::Adj), tok("food", Pos::Noun)}});
    auto once = form_compound_nouns(d);
    REQUIRE(once.token_count() == 1);
    CHECK(once.sentences[0][0].lower == "thailocalfood");
    CHECK(form_compound_nouns(once) == once);
}

TEST_CASE("compound indices are re-densified") {
    auto d = doc_of({{tok("night", Pos::Noun), tok("market", Pos::Noun), tok("fun", Pos::Noun),
                      tok(".", Pos::Other)},
                     {tok("great", Pos::Adj)}});
    auto r = form_compound_nouns(d);
    for (std::size_t si = 0; si < r.sentences.size(); ++si) {
        for (std::size_t ti = 0; ti < r.sentences[si].size(); ++ti) {
            CHECK(r.sentences[si][ti].sent_index == static_cast<int>(si));
            CHECK(r.sentences[si][ti].tok_index == static_cast<int>(ti));
        }
    }
}

TEST_CASE("coreference replaces third-person pronouns with the latest noun") {
    auto d = doc_of({{tok("thaifood", Pos::Noun), tok("was", Pos::Verb), tok("great", Pos::Adj),
                      tok(",", Pos::Other), tok("we", Pos::Pron), tok("loved", Pos::Verb),
                      tok("it", Pos::Pron), tok(".", Pos::Other)}});
    auto r = resolve_coreference(d);
    const auto& it = r.sentences[0][6];
    CHECK(it.lower == "thaifood");
    CHECK(it.pos == Pos::Noun);
    CHECK(it.tok_index == 6);  // keeps its position
    // first-person pronoun untouched
    CHECK(r.sentences[0][4].lower == "we");
    CHECK(r.sentences[0][4].pos == Pos::Pron);
}

TEST_CASE("plural pronouns prefer the latest plural noun") {
    auto d = doc_of({{tok("beachresorts", Pos::Noun, "beachresort", true), tok("and", Pos::Other),
                      tok("the", Pos::Other), tok("bar", Pos::Noun)},
                     {tok("they", Pos::Pron), tok("are", Pos::Verb), tok("great", Pos::Adj)}});
    auto r = resolve_coreference(d);
    CHECK(r.sentences[1][0].lemma == "beachresort");  // not "bar"
    CHECK(r.sentences[1][0].pos == Pos::Noun);

    // singular pronoun takes the most recent noun regardless of number
    auto s = doc_of({{tok("beaches", Pos::Noun, "beach", true), tok("and", Pos::Other),
                      tok("bar", Pos::Noun)},
                     {tok("it", Pos::Pron), tok("was", Pos::Verb), tok("good", Pos::Adj)}});
    auto r2 = resolve_coreference(s);
    CHECK(r2.sentences[1][0].lemma == "bar");
}

TEST_CASE("determiner uses and out-of-range pronouns stay untouched") {
    // pronoun directly before a noun is a determiner use
    auto det = doc_of({{tok("beach", Pos::Noun), tok(".", Pos::Other)},
                       {tok("this", Pos::Pron), tok("place", Pos::Noun)}});
    auto r = resolve_coreference(det);
    CHECK(r.sentences[1][0].lower == "this");
    CHECK(r.sentences[1][0].pos == Pos::Pron);

    // no antecedent at document start
    auto start = doc_of({{tok("it", Pos::Pron), tok("was", Pos::Verb), tok("great", Pos::Adj)}});
    auto r2 = resolve_coreference(start);
    CHECK(r2.sentences[0][0].lower == "it");

    // antecedent two sentences back is out of the window
    auto far = doc_of({{tok("beach", Pos::Noun)},
                       {tok("sunny", Pos::Adj)},
                       {tok("it", Pos::Pron), tok("was", Pos::Verb), tok("great", Pos::Adj)}});
    auto r3 = resolve_coreference(far);
    CHECK(r3.sentences[2][0].lower == "it");
}

TEST_CASE("coreference is idempotent") {
    auto d = doc_of({{tok("thaifood", Pos::Noun), tok("was", Pos::Verb)},
                     {tok("it", Pos::Pron), tok("was", Pos::Verb), tok("great", Pos::Adj)},
                     {tok("it", Pos::Pron), tok("was", Pos::Verb), tok("cheap", Pos::Adj)}});
    auto once = resolve_coreference(d);
    CHECK(resolve_coreference(once) == once);
    CHECK(once.sentences[1][0].lower == "thaifood");
    CHECK(once.sentences[2][0].lower == "thaifood");  // replacement feeds the next window
}

TEST_CASE("negation fuses into the following adjective or verb") {
    auto d = doc_of({{tok("not", Pos::Other), tok("expensive", Pos::Adj)}});
    auto r = compound_negation(d);
    REQUIRE(r.token_count() == 1);
    const auto& t = r.sentences[0][0];
    CHECK(t.lower == "notexpensive");
    CHECK(t.lemma == "notexpensive");
    CHECK(t.pos == Pos::Adj);
    CHECK(t.negated);

    auto v = doc_of({{tok("never", Pos::Other), tok("recommended", Pos::Verb, "recommend")}});
    auto rv = compound_negation(v);
    REQUIRE(rv.token_count() == 1);
    CHECK(rv.sentences[0][0].lower == "neverrecommended");
    CHECK(rv.sentences[0][0].lemma == "neverrecommend");  // lemma fuses with lemma
    CHECK(rv.sentences[0][0].pos == Pos::Verb);
}

TEST_CASE("one adverb between negation and target is dropped") {
    auto d = doc_of({{tok("not", Pos::Other), tok("very", Pos::Other), tok("good", Pos::Adj),
                      tok(".", Pos::Other)}});
    auto r = compound_negation(d);
    auto lw = lowers(r.sentences[0]);
    CHECK(lw == std::vector<std::string>{"notgood", "."});
    CHECK(r.sentences[0][0].negated);
}

TEST_CASE("negation without an eligible target stays") {
    // negation before a noun is untouched
    auto n = doc_of({{tok("no", Pos::Other), tok("beach", Pos::Noun)}});
    CHECK(compound_negation(n).token_count() == 2);
    // negation at sentence end is untouched
    auto e = doc_of({{tok("why", Pos::Other), tok("not", Pos::Other)}});
    CHECK(compound_negation(e).token_count() == 2);
    // a negation word tagged as a noun is not a trigger
    auto as_noun = doc_of({{tok("none", Pos::Noun), tok("pleased", Pos::Verb, "please")}});
    CHECK(compound_negation(as_noun).token_count() == 2);
    // an already negated target is not fused again
    auto neg = doc_of({{tok("not", Pos::Other), tok("nevergood", Pos::Adj)}});
    neg.sentences[0][1].negated = true;
    CHECK(compound_negation(neg).token_count() == 2);
}

TEST_CASE("negation fusion is idempotent") {
    auto d = doc_of({{tok("not", Pos::Other), tok("never", Pos::Other), tok("good", Pos::Adj)}});
    auto once = compound_negation(d);
    CHECK(compound_negation(once) == once);
}

TEST_CASE("token count never increases through the compound stages") {
    auto d = doc_of({{tok("Thai", Pos::Adj, "thai"), tok("food", Pos::Noun), tok("was", Pos::Verb),
                      tok("not", Pos::Other), tok("expensive", Pos::Adj), tok(",", Pos::Other),
                      tok("we", Pos::Pron), tok("loved", Pos::Verb), tok("it", Pos::Pron),
                      tok(".", Pos::Other)}});
    auto n0 = d.token_count();
    auto c = form_compound_nouns(d);
    CHECK(c.token_count() <= n0);
    auto co = resolve_coreference(c);
    CHECK(co.token_count() <= c.token_count());
    auto ng = compound_negation(co);
    CHECK(ng.token_count() <= co.token_count());
}

TEST_CASE("word list loader reads one word per line") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "kx_compound_wl";
    fs::create_directories(dir);
    auto path = (dir / "words.txt").string();
    {
        std::ofstream out(path);
        out << "# comment\n";
        out << "Thai\n";
        out << "  lao  \n";
        out << "\n";
    }
    auto words = load_word_list(path);
    CHECK(words == std::set<std::string>{"thai", "lao"});
    CHECK_THROWS_AS(load_word_list((dir / "none.txt").string()), io_error);
    fs::remove_all(dir);
}
