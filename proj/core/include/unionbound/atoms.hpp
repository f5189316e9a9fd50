#pragma once

#include "unionbound/scalar.hpp"
#include "unionbound/sets.hpp"

#include <algorithm>
#include <iosfwd>
#include <utility>
#include <vector>

namespace unionbound {

/// Sparse nonnegative masses x_S over nonempty subsets S of {0..n-1},
/// kept sorted by mask. The empty set is implicit slack: a vector is a
/// sub-probability when total() <= 1.
template <class T>
struct AtomVector {
    int n = 0;
    std::vector<std::pair<SetMask, T>> mass;  // sorted by mask, masks != 0

    AtomVector() = default;
    explicit AtomVector(int n_) : n(n_) {}

    T total() const {
        T s{};
        for (const auto& [m, v] : mass) s += v;
        return s;
    }

    void set(SetMask s, T v) {
        auto it = std::lower_bound(mass.begin(), mass.end(), s,
                                   [](const auto& e, SetMask m) { return e.first < m; });
        if (it != mass.end() && it->first == s)
            it->second = std::move(v);
        else
            mass.insert(it, {s, std::move(v)});
    }

    T get(SetMask s) const {
        auto it = std::lower_bound(mass.begin(), mass.end(), s,
                                   [](const auto& e, SetMask m) { return e.first < m; });
        if (it != mass.end() && it->first == s) return it->second;
        return T{};
    }
};

/// Debug format: one "mask value" line per stored atom, masks ascending.
template <class T>
void write_atoms_debug(std::ostream& out, const AtomVector<T>& x);
template <class T>
AtomVector<T> read_atoms_debug(std::istream& in, int n);

extern template void write_atoms_debug<double>(std::ostream&, const AtomVector<double>&);
extern template void write_atoms_debug<Rational>(std::ostream&, const AtomVector<Rational>&);
extern template AtomVector<double> read_atoms_debug<double>(std::istream&, int);
extern template AtomVector<Rational> read_atoms_debug<Rational>(std::istream&, int);

}  // namespace unionbound
