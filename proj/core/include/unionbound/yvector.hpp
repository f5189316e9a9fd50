#pragma once

#include "unionbound/scalar.hpp"
#include "unionbound/sets.hpp"

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

namespace unionbound {

/// The three aggregation families. E0 keeps one value per level k, E1 one per
/// (k, index), E2 one per (k, Q) with Q empty, a singleton, or a pair.
enum class Family { E0, E1, E2 };

template <class T>
class YVector {
public:
    YVector() = default;
    YVector(int n, Family family)
        : n_(n), family_(family), data_(static_cast<std::size_t>(n) * level_stride(n, family)) {}

    int n() const { return n_; }
    Family family() const { return family_; }

    static std::size_t level_stride(int n, Family f) {
        switch (f) {
            case Family::E0: return 1;
            case Family::E1: return static_cast<std::size_t>(n);
            case Family::E2: return 1 + static_cast<std::size_t>(n) + static_cast<std::size_t>(pair_count(n));
        }
        return 0;
    }

    std::span<T> level(int k) {
        return {data_.data() + offset(k), level_stride(n_, family_)};
    }
    std::span<const T> level(int k) const {
        return {data_.data() + offset(k), level_stride(n_, family_)};
    }

    // E0 accessors
    T& e0(int k) { assert(family_ == Family::E0); return data_[offset(k)]; }
    const T& e0(int k) const { assert(family_ == Family::E0); return data_[offset(k)]; }

    // E1 accessors
    T& e1(int k, int i) { assert(family_ == Family::E1); return data_[offset(k) + i]; }
    const T& e1(int k, int i) const { assert(family_ == Family::E1); return data_[offset(k) + i]; }

    // E2 accessors (level-k slots: [0]=empty set, [1..n]=singletons, then pairs)
    T& empty(int k) { assert(family_ == Family::E2); return data_[offset(k)]; }
    const T& empty(int k) const { assert(family_ == Family::E2); return data_[offset(k)]; }
    T& single(int k, int i) { assert(family_ == Family::E2); return data_[offset(k) + 1 + i]; }
    const T& single(int k, int i) const { assert(family_ == Family::E2); return data_[offset(k) + 1 + i]; }
    T& pair(int k, int i, int j) {
        assert(family_ == Family::E2 && k >= 2);
        return data_[offset(k) + 1 + n_ + pair_index(i, j)];
    }
    const T& pair(int k, int i, int j) const {
        assert(family_ == Family::E2 && k >= 2);
        return data_[offset(k) + 1 + n_ + pair_index(i, j)];
    }
    std::span<T> pairs(int k) {
        assert(family_ == Family::E2 && k >= 2);
        return {data_.data() + offset(k) + 1 + n_, static_cast<std::size_t>(pair_count(n_))};
    }
    std::span<const T> pairs(int k) const {
        assert(family_ == Family::E2 && k >= 2);
        return {data_.data() + offset(k) + 1 + n_, static_cast<std::size_t>(pair_count(n_))};
    }

    /// Generic lookup by the mask of Q (mask 0 = empty set).
    const T& value(int k, SetMask q) const {
        const int sz = set_size(q);
        if (k < sz || k < 1 || k > n_) throw std::out_of_range("YVector::value: bad level");
        switch (family_) {
            case Family::E0:
                if (sz != 0) throw std::out_of_range("E0 carries only Q = empty");
                return e0(k);
            case Family::E1:
                if (sz != 1) throw std::out_of_range("E1 carries only singleton Q");
                return e1(k, lowest_bit(q));
            case Family::E2:
                if (sz == 0) return empty(k);
                if (sz == 1) return single(k, lowest_bit(q));
                if (sz == 2) {
                    const int i = lowest_bit(q);
                    return pair(k, i, lowest_bit(q & (q - 1)));
                }
                throw std::out_of_range("E2 carries |Q| <= 2");
        }
        throw std::logic_error("unreachable");
    }

private:
    std::size_t offset(int k) const {
        assert(k >= 1 && k <= n_);
        return static_cast<std::size_t>(k - 1) * level_stride(n_, family_);
    }

    int n_ = 0;
    Family family_ = Family::E0;
    std::vector<T> data_;
};

}  // namespace unionbound
