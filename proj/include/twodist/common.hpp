#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twodist {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Any throw of this type means a certification check failed; the pipeline
// maps it to exit status 1 with the failing assertion named.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw VerificationError(msg); }

inline void check(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// 64-bit FNV-1a, used for cache keys (integrity, not crypto).
uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 14695981039346656037ull);
uint64_t fnv1a64(const std::string& s, uint64_t h = 14695981039346656037ull);
std::string hex64(uint64_t v);

// __int128 helpers for the enumeration fast path.
using i128 = __int128;

std::string i128_to_string(i128 v);
Int i128_to_mpz(i128 v);
// Returns false if v does not fit a signed 128-bit value (with one guard bit).
bool mpz_to_i128(const Int& v, i128& out);

inline i128 floordiv_i128(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

inline i128 ceildiv_i128(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if ((a % b) != 0 && a > 0) ++q;
    return q;
}

// Exact floor(sqrt(x)) for x >= 0.
i128 isqrt_i128(i128 x);

}  // namespace twodist
