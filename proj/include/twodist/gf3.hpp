#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twodist::gf3 {

// Everything here lives over GF(3) = {0,1,2} with mod-3 arithmetic; words
// have fixed length 11.
constexpr int kLength = 11;

using Word = std::array<uint8_t, kLength>;

int weight(const Word& w);
Word sub(const Word& a, const Word& b);
int dot(const Word& a, const Word& b);  // inner product mod 3

// Linear code given by a generator matrix; all 3^k codewords are
// materialized in lexicographic order.
struct Code {
    std::vector<Word> generator;  // k rows, linearly independent
    std::vector<Word> codewords;  // 3^k words, lexicographically sorted

    int dim() const { return static_cast<int>(generator.size()); }
};

// Builds a Code from generator rows; throws if the rows are dependent.
Code code_from_generator(std::vector<Word> rows);

// Recovers a Code from a plain codeword list (e.g. a cache file): extracts a
// basis and checks that the list is exactly the span.
Code code_from_words(const std::vector<Word>& words);

// The [11,6,5] perfect ternary Golay code, realized as the length-11
// quadratic-residue code: generator polynomial = the lexicographically first
// monic degree-5 divisor of x^11 - 1 over GF(3). Validated by invariants
// (dimension 6, minimum distance 5, |dual| = 243).
Code ternary_golay();

// { y : <y,c> = 0 mod 3 for all c in code }
Code dual(const Code& code);

Code full_space();  // the [11,11] code
Code zero_code();

int min_distance(const Code& code);  // brute force over nonzero codewords
std::map<int, long> weight_enumerator(const Code& code);

// One word per line, 11 digits each, lexicographic order.
std::string codewords_text(const Code& code);
std::vector<Word> words_from_text(const std::string& text);

std::string word_to_string(const Word& w);

}  // namespace twodist::gf3
