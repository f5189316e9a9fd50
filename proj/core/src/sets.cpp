#include "unionbound/sets.hpp"

#include <cassert>
#include <cmath>

namespace unionbound {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;  // exact: r*(n-k+t) is divisible by t here
    }
    return r;
}

IndexPair pair_from_index(int idx) {
    // invert idx = j(j-1)/2 + i with 0 <= i < j
    int j = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * idx)) / 2.0);
    while (j * (j - 1) / 2 > idx) --j;
    while ((j + 1) * j / 2 <= idx) ++j;
    return {idx - j * (j - 1) / 2, j};
}

std::vector<SetMask> subsets_of_size(int n, int k) {
    std::vector<SetMask> out;
    assert(k >= 0 && k <= n && n < 31);
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    SetMask s = (SetMask{1} << k) - 1;
    const SetMask limit = SetMask{1} << n;
    while (s < limit) {
        out.push_back(s);
        // Gosper's hack: next mask with the same popcount
        const SetMask c = s & (~s + 1);
        const SetMask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

}  // namespace unionbound
