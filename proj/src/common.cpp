#include "twodist/common.hpp"

#include <cmath>

namespace twodist {

uint64_t fnv1a64(const void* data, size_t n, uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t fnv1a64(const std::string& s, uint64_t h) { return fnv1a64(s.data(), s.size(), h); }

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

Int i128_to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64));
    Int lo(static_cast<unsigned long>(u & 0xffffffffffffffffull));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
}

bool mpz_to_i128(const Int& v, i128& out) {
    // Keep one bit of headroom so callers can negate freely.
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return false;
    Int a = abs(v);
    Int hi = a >> 64;
    Int lo = a - (hi << 64);
    unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
    out = static_cast<i128>(u);
    if (sgn(v) < 0) out = -out;
    return true;
}

i128 isqrt_i128(i128 x) {
    if (x < 0) fail("isqrt_i128: negative argument");
    if (x == 0) return 0;
    auto s = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    // long double sqrt is only a seed; fix up to the exact floor.
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

}  // namespace twodist
