#pragma once
#include <bit>
#include <cstdint>
#include <span>

namespace fockspin {

// Sign of the shuffle that merges two disjoint ascending mode lists, given as
// bitmasks, into one ascending list with the s-block written first.
// Equals (-1)^{#(s,t) pairs with s > t}.
inline int merge_sign(std::uint32_t s, std::uint32_t t) {
    int inv = 0;
    while (t) {
        const int b = std::countr_zero(t);
        inv += std::popcount(s >> (b + 1));
        t &= t - 1;
    }
    return (inv & 1) ? -1 : 1;
}

// Sign of the permutation sorting `idx` ascending; 0 if any index repeats.
// Indices are arbitrary integers (0- or 1-based, caller's choice).
inline int perm_sign(std::span<const int> idx) {
    int inv = 0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (idx[a] == idx[b]) return 0;
            if (idx[a] > idx[b]) ++inv;
        }
    return (inv & 1) ? -1 : 1;
}

// Sign picked up when inserting mode bit `b` in front of the ascending
// monomial `mask`: (-1)^{#occupied modes below b}.
inline int insertion_sign(std::uint32_t mask, std::uint32_t bit) {
    return (std::popcount(mask & (bit - 1)) & 1) ? -1 : 1;
}

}  // namespace fockspin
