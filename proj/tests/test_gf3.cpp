#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twodist/common.hpp"
#include "twodist/gf3.hpp"

using namespace twodist;
using gf3::Word;

namespace {

const gf3::Code& golay() {
    static gf3::Code c = gf3::ternary_golay();
    return c;
}

const gf3::Code& golay_dual() {
    static gf3::Code d = gf3::dual(golay());
    return d;
}

}  // namespace

TEST_CASE("weight") {
    Word zero{};
    CHECK(gf3::weight(zero) == 0);
    Word w{1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
    CHECK(gf3::weight(w) == 6);
    Word v{2, 0, 2, 0, 2, 0, 0, 0, 0, 0, 1};
    CHECK(gf3::weight(v) == 4);
}

TEST_CASE("componentwise arithmetic is mod 3") {
    Word a{2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1};
    Word b{1, 1, 1, 0, 0, 0, 2, 2, 2, 1, 0};
    Word d = gf3::sub(a, b);
    for (int i = 0; i < gf3::kLength; ++i) CHECK(d[i] == (a[i] + 3 - b[i]) % 3);
    CHECK(gf3::dot(a, b) == (2 + 1 + 0 + 0 + 0 + 0 + 4 + 2 + 0 + 2 + 0) % 3);
}

TEST_CASE("ternary golay code invariants") {
    const gf3::Code& c = golay();
    CHECK(c.dim() == 6);
    CHECK(c.codewords.size() == 729);  // 3^6
    CHECK(gf3::min_distance(c) == 5);
    // Perfect code: spheres of radius 2 tile GF(3)^11.
    long sphere = 1 + 11 * 2 + (11 * 10 / 2) * 4;
    CHECK(sphere == 243);
    CHECK(729 * sphere == 177147);  // 3^11
}

TEST_CASE("dual code") {
    const gf3::Code& d = golay_dual();
    CHECK(d.dim() == 5);
    CHECK(d.codewords.size() == 243);
    SUBCASE("orthogonality of every pair") {
        for (const Word& y : d.codewords)
            for (const Word& c : golay().generator) CHECK(gf3::dot(y, c) == 0);
    }
    SUBCASE("biduality") {
        gf3::Code dd = gf3::dual(d);
        CHECK(dd.codewords == golay().codewords);
    }
    SUBCASE("|C| * |dual| = 3^11") { CHECK(golay().codewords.size() * d.codewords.size() == 177147); }
}

TEST_CASE("dual of the full space is the zero code") {
    gf3::Code z = gf3::dual(gf3::full_space());
    CHECK(z.dim() == 0);
    CHECK(z.codewords.size() == 1);
    CHECK(gf3::weight(z.codewords[0]) == 0);
}

TEST_CASE("weight enumerators") {
    SUBCASE("zero code") {
        auto e = gf3::weight_enumerator(gf3::zero_code());
        CHECK(e.size() == 1);
        CHECK(e.at(0) == 1);
    }
    SUBCASE("dual golay: weights 0, 6, 9 with counts 1, 132, 110") {
        auto e = gf3::weight_enumerator(golay_dual());
        REQUIRE(e.size() == 3);
        CHECK(e.at(0) == 1);
        CHECK(e.at(6) == 132);
        CHECK(e.at(9) == 110);
        long total = 0;
        for (const auto& [w, n] : e) total += n;
        CHECK(total == 243);
    }
}

TEST_CASE("codeword text export") {
    const gf3::Code& d = golay_dual();
    std::string text = gf3::codewords_text(d);
    auto words = gf3::words_from_text(text);
    REQUIRE(words.size() == d.codewords.size());
    CHECK(words == d.codewords);
    // Lexicographic order, 11 digits per line.
    for (size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
    CHECK(text[11] == '\n');
}

TEST_CASE("code_from_words round trip and validation") {
    gf3::Code rebuilt = gf3::code_from_words(golay_dual().codewords);
    CHECK(rebuilt.codewords == golay_dual().codewords);
    CHECK(rebuilt.dim() == 5);

    std::vector<Word> broken = golay_dual().codewords;
    broken.pop_back();
    CHECK_THROWS_AS(gf3::code_from_words(broken), VerificationError);
}

TEST_CASE("code_from_generator rejects dependent rows") {
    Word a{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    Word b{2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(gf3::code_from_generator({a, b}), VerificationError);
}
