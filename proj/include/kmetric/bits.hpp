#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Word-packed vertex sets. A set over n vertices occupies words_for(n)
// consecutive uint64 words, bit i of word i/64 marking vertex i.
namespace kmetric::bits {

inline int words_for(int nbits) { return (nbits + 63) / 64; }

inline void set(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

inline bool test(const std::uint64_t* w, int i) {
    return (w[i >> 6] >> (i & 63)) & 1u;
}

inline int popcount(const std::uint64_t* w, int nwords) {
    int c = 0;
    for (int i = 0; i < nwords; ++i) c += std::popcount(w[i]);
    return c;
}

inline int and_popcount(const std::uint64_t* a, const std::uint64_t* b, int nwords) {
    int c = 0;
    for (int i = 0; i < nwords; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// a subset of b
inline bool subset(const std::uint64_t* a, const std::uint64_t* b, int nwords) {
    for (int i = 0; i < nwords; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

inline bool equal(const std::uint64_t* a, const std::uint64_t* b, int nwords) {
    for (int i = 0; i < nwords; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline void or_assign(std::uint64_t* a, const std::uint64_t* b, int nwords) {
    for (int i = 0; i < nwords; ++i) a[i] |= b[i];
}

inline std::vector<int> to_vertices(const std::uint64_t* w, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (test(w, i)) out.push_back(i);
    return out;
}

inline std::vector<std::uint64_t> from_vertices(const std::vector<int>& vs, int n) {
    std::vector<std::uint64_t> w(words_for(n), 0);
    for (int v : vs) set(w.data(), v);
    return w;
}

}  // namespace kmetric::bits
