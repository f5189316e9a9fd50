#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace unionbound {

// Index sets over the ground set {0,...,n-1} are stored as bitmasks with
// element i on bit i (lowest index = least significant bit). Atom order is
// the plain binary counter over masks 1..2^n-1.

using SetMask = std::uint32_t;

inline int set_size(SetMask s) { return std::popcount(s); }

inline bool contains(SetMask s, int i) { return (s >> i) & 1u; }

inline SetMask singleton(int i) { return SetMask{1} << i; }

inline SetMask pair_mask(int i, int j) { return singleton(i) | singleton(j); }

/// C(n,k) as a 64-bit integer; n is expected to stay at desk scale (<= 34).
std::int64_t binomial(int n, int k);

/// Unordered pairs {i,j}, i<j, in colex order: (0,1),(0,2),(1,2),(0,3),...
inline int pair_count(int n) { return n * (n - 1) / 2; }

inline int pair_index(int i, int j) {
    if (i > j) { const int t = i; i = j; j = t; }
    return j * (j - 1) / 2 + i;
}

struct IndexPair {
    int i, j;  // i < j
};

/// Inverse of pair_index for a given n (n only bounds the range).
IndexPair pair_from_index(int idx);

/// All size-k subsets of {0..n-1} as masks, ascending (Gosper's hack).
std::vector<SetMask> subsets_of_size(int n, int k);

/// Lowest set bit index.
inline int lowest_bit(SetMask s) { return std::countr_zero(s); }

}  // namespace unionbound
