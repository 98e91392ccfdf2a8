#include "twodist/gf3.hpp"

#include <algorithm>
#include <sstream>

#include "twodist/common.hpp"

namespace twodist::gf3 {

int weight(const Word& w) {
    int n = 0;
    for (uint8_t v : w) n += (v != 0);
    return n;
}

Word sub(const Word& a, const Word& b) {
    Word r;
    for (int i = 0; i < kLength; ++i) r[i] = static_cast<uint8_t>((a[i] + 3 - b[i]) % 3);
    return r;
}

int dot(const Word& a, const Word& b) {
    int s = 0;
    for (int i = 0; i < kLength; ++i) s += a[i] * b[i];
    return s % 3;
}

namespace {

Word add(const Word& a, const Word& b) {
    Word r;
    for (int i = 0; i < kLength; ++i) r[i] = static_cast<uint8_t>((a[i] + b[i]) % 3);
    return r;
}

Word scale(const Word& a, int c) {
    Word r;
    for (int i = 0; i < kLength; ++i) r[i] = static_cast<uint8_t>((a[i] * c) % 3);
    return r;
}

bool is_zero(const Word& a) {
    for (uint8_t v : a)
        if (v) return false;
    return true;
}

// Row-reduces rows in place; returns the rank. Used both for independence
// checks and for nullspace extraction.
int rref(std::vector<Word>& rows, std::vector<int>* pivot_cols = nullptr) {
    int r = 0;
    for (int col = 0; col < kLength && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        if (rows[r][col] == 2) rows[r] = scale(rows[r], 2);  // normalize pivot to 1
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i != r && rows[i][col] != 0) {
                int c = 3 - rows[i][col];  // rows[i] += c * rows[r] clears the column
                rows[i] = add(rows[i], scale(rows[r], c));
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++r;
    }
    return r;
}

std::vector<Word> enumerate_span(const std::vector<Word>& basis) {
    std::vector<Word> words;
    size_t total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= 3;
    words.reserve(total);
    Word zero{};
    words.push_back(zero);
    for (const Word& b : basis) {
        size_t n = words.size();
        for (size_t i = 0; i < n; ++i) {
            words.push_back(add(words[i], b));
            words.push_back(add(words[i], scale(b, 2)));
        }
    }
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace

Code code_from_generator(std::vector<Word> rows) {
    std::vector<Word> copy = rows;
    int r = rref(copy);
    check(r == static_cast<int>(rows.size()), "code_from_generator: dependent generator rows");
    Code c;
    c.generator = std::move(rows);
    c.codewords = enumerate_span(c.generator);
    return c;
}

Code code_from_words(const std::vector<Word>& words) {
    std::vector<Word> reduced = words;
    std::vector<int> pivots;
    int r = rref(reduced, &pivots);
    std::vector<Word> basis(reduced.begin(), reduced.begin() + r);
    Code c = code_from_generator(basis);
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    check(sorted == c.codewords, "code_from_words: word list is not a linear code");
    return c;
}

namespace {

// Polynomials over GF(3), coefficient vector low degree first.
using Poly = std::vector<int>;

Poly x_pow_minus_one(int n) {
    Poly p(n + 1, 0);
    p[0] = 2;  // -1 mod 3
    p[n] = 1;
    return p;
}

// Division of a by monic b; returns true and the quotient if remainder is 0.
bool divides_monic(const Poly& b, const Poly& a, Poly* quotient = nullptr) {
    Poly r = a;
    int db = static_cast<int>(b.size()) - 1;
    Poly q(a.size(), 0);
    for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
        int c = r[d] % 3;
        if (c == 0) continue;
        q[d - db] = c;
        for (int i = 0; i <= db; ++i) r[d - db + i] = (r[d - db + i] + 9 - c * b[i]) % 3;
    }
    for (int c : r)
        if (c % 3 != 0) return false;
    if (quotient) *quotient = q;
    return true;
}

}  // namespace

Code ternary_golay() {
    Poly target = x_pow_minus_one(kLength);
    // Scan monic degree-5 candidates in lexicographic coefficient order.
    Poly found;
    for (int a0 = 0; a0 < 3 && found.empty(); ++a0)
        for (int a1 = 0; a1 < 3 && found.empty(); ++a1)
            for (int a2 = 0; a2 < 3 && found.empty(); ++a2)
                for (int a3 = 0; a3 < 3 && found.empty(); ++a3)
                    for (int a4 = 0; a4 < 3 && found.empty(); ++a4) {
                        Poly g = {a0, a1, a2, a3, a4, 1};
                        if (divides_monic(g, target)) found = g;
                    }
    check(!found.empty(), "ternary_golay: no degree-5 divisor of x^11-1 found");

    // Cyclic code: generator matrix rows are x^i * g(x), i = 0..5.
    std::vector<Word> rows;
    for (int i = 0; i < 6; ++i) {
        Word w{};
        for (int j = 0; j <= 5; ++j) w[i + j] = static_cast<uint8_t>(found[j]);
        rows.push_back(w);
    }
    Code c = code_from_generator(rows);
    check(c.dim() == 6, "ternary_golay: dimension != 6");
    check(min_distance(c) == 5, "ternary_golay: minimum distance != 5");
    return c;
}

Code dual(const Code& code) {
    // Nullspace of the generator matrix over GF(3).
    std::vector<Word> rows = code.generator;
    std::vector<int> pivots;
    int r = rref(rows, &pivots);
    check(r == code.dim(), "dual: generator rank mismatch");

    std::vector<bool> is_pivot(kLength, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Word> basis;
    for (int free = 0; free < kLength; ++free) {
        if (is_pivot[free]) continue;
        Word v{};
        v[free] = 1;
        // Solve pivot entries so every generator row is orthogonal to v:
        // row i of the RREF reads  x_{pivot_i} + sum_{free j} a_ij x_j = 0.
        for (int i = 0; i < r; ++i) {
            int coeff = rows[i][free];
            v[pivots[i]] = static_cast<uint8_t>((3 - coeff) % 3);
        }
        basis.push_back(v);
    }
    Code d = code_from_generator(basis);
    for (const Word& w : d.generator)
        for (const Word& g : code.generator) check(dot(w, g) == 0, "dual: basis not orthogonal to code");
    return d;
}

Code full_space() {
    std::vector<Word> rows(kLength);
    for (int i = 0; i < kLength; ++i) rows[i][i] = 1;
    return code_from_generator(rows);
}

Code zero_code() {
    Code c;
    c.codewords.push_back(Word{});
    return c;
}

int min_distance(const Code& code) {
    int best = kLength + 1;
    for (const Word& w : code.codewords) {
        if (is_zero(w)) continue;
        best = std::min(best, weight(w));
    }
    check(best <= kLength, "min_distance: zero code has no nonzero words");
    return best;
}

std::map<int, long> weight_enumerator(const Code& code) {
    std::map<int, long> e;
    for (const Word& w : code.codewords) ++e[weight(w)];
    return e;
}

std::string word_to_string(const Word& w) {
    std::string s(kLength, '0');
    for (int i = 0; i < kLength; ++i) s[i] = static_cast<char>('0' + w[i]);
    return s;
}

std::string codewords_text(const Code& code) {
    std::ostringstream os;
    for (const Word& w : code.codewords) os << word_to_string(w) << '\n';
    return os.str();
}

std::vector<Word> words_from_text(const std::string& text) {
    std::vector<Word> words;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        check(line.size() == kLength, "words_from_text: bad line length");
        Word w;
        for (int i = 0; i < kLength; ++i) {
            check(line[i] >= '0' && line[i] <= '2', "words_from_text: bad digit");
            w[i] = static_cast<uint8_t>(line[i] - '0');
        }
        words.push_back(w);
    }
    return words;
}

}  // namespace twodist::gf3
