#pragma once

#include "unionbound/scalar.hpp"
#include "unionbound/sets.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace unionbound {

/// Quadratic pseudo-Boolean function in multilinear normal form:
///   F(Z) = a0 + sum_i a1[i] Z_i + sum_{i<j} a2[{i,j}] Z_i Z_j
/// on binary Z (so Z_i^2 = Z_i). Functions are equal iff their coefficients
/// are equal.
template <class T>
struct Qpbf {
    int n = 0;
    T a0{};
    std::vector<T> a1;  // size n
    std::vector<T> a2;  // size C(n,2), colex pair order

    Qpbf() = default;
    explicit Qpbf(int n_)
        : n(n_),
          a1(static_cast<std::size_t>(n_)),
          a2(static_cast<std::size_t>(pair_count(n_))) {}

    T& pair(int i, int j) { return a2[static_cast<std::size_t>(pair_index(i, j))]; }
    const T& pair(int i, int j) const { return a2[static_cast<std::size_t>(pair_index(i, j))]; }

    Qpbf& operator+=(const Qpbf& o);
    Qpbf& operator-=(const Qpbf& o);
    Qpbf& operator*=(const T& s);
    bool operator==(const Qpbf& o) const = default;
};

/// A point of the Boolean hypercube, bit i = Z_i.
struct BooleanPoint {
    int n = 0;
    SetMask mask = 0;
};

template <class T>
T qpbf_eval(const Qpbf<T>& f, BooleanPoint z);

template <class T>
struct QpbfMin {
    T value{};
    BooleanPoint argmin;  // lowest mask among minimizers
};

/// Exact minimum over all 2^n points (Gray-code sweep). Guard: n <= 24.
template <class T>
QpbfMin<T> qpbf_min(const Qpbf<T>& f);

template <class T>
bool qpbf_is_nonneg(const Qpbf<T>& f);

/// Level-k row of the function over the pair variables: substituting the
/// empty-set and singleton aggregates by their pair expansions leaves
///   coeff({i,j}) = a0 / C(k,2) + (a1_i + a1_j) / (k-1) + a2_{i,j}.
/// Requires 2 <= k <= n.
template <class T>
std::vector<T> qpbf_to_row(const Qpbf<T>& f, int k);

/// The level-k kernel (k - sum_i Z_i)^2, whose level-k row vanishes.
template <class T>
Qpbf<T> level_kernel(int n, int k);

/// f minus min(f,0) times the level-k kernel: same level-k row, and
/// nonnegative on the cube whenever f's level-k row was valid.
template <class T>
Qpbf<T> canonicalize_nonneg(const Qpbf<T>& f, int k);

// --- generator catalog -----------------------------------------------------

enum class Polarity : std::uint8_t { positive, negated };  // Z_i vs 1 - Z_i

struct Literal {
    int index = 0;
    Polarity pol = Polarity::positive;
};

/// At most one literal per index, kept sorted by index.
struct LiteralSet {
    std::vector<Literal> entries;

    static LiteralSet from_mask(const std::vector<int>& indices, std::uint32_t negated_bits);
    std::uint32_t polarity_bits() const;  // bit b set = entry b negated
};

// Elementary nonnegative generators.
template <class T> Qpbf<T> qpbf_single(int n, int i);                  // Z_i
template <class T> Qpbf<T> qpbf_pair_both(int n, int i, int j);        // Z_i Z_j
template <class T> Qpbf<T> qpbf_pair_mixed(int n, int i, int j);       // Z_i (1 - Z_j)
template <class T> Qpbf<T> qpbf_pair_neither(int n, int i, int j);     // (1-Z_i)(1-Z_j)
template <class T> Qpbf<T> qpbf_triple_agree(int n, int i, int j, int l);
// Z_i (1-Z_j)(1-Z_l) + (1-Z_i) Z_j Z_l, quadratic after expansion:
template <class T> Qpbf<T> qpbf_triple_odd_one(int n, int i, int j, int l, int odd);

/// The built-in catalog of support-2 and support-3 generators: n unary, three
/// polarity patterns per pair (i<j), and four per triple. All entries are
/// nonnegative with minimum zero.
template <class T>
std::vector<Qpbf<T>> catalog_g2_g3(int n);

/// Binomial generator over a literal set W: C(sum_{w in W} w - gamma, 2)
/// expanded to multilinear form. Requires |W| >= 4 and 1 <= gamma <= |W|-2;
/// the result is nonnegative with minimum zero.
template <class T>
Qpbf<T> binomial_qpbf(int n, const LiteralSet& w, int gamma);

/// Text form "a0 | i:a1_i ... | i,j:a2_ij ..." with 1-based indices and only
/// nonzero entries listed.
template <class T>
std::string qpbf_to_text(const Qpbf<T>& f);
template <class T>
Qpbf<T> qpbf_from_text(const std::string& text, int n);

#define UNIONBOUND_QPBF_EXTERN(T)                                              \
    extern template struct Qpbf<T>;                                            \
    extern template T qpbf_eval<T>(const Qpbf<T>&, BooleanPoint);              \
    extern template QpbfMin<T> qpbf_min<T>(const Qpbf<T>&);                    \
    extern template bool qpbf_is_nonneg<T>(const Qpbf<T>&);                    \
    extern template std::vector<T> qpbf_to_row<T>(const Qpbf<T>&, int);        \
    extern template Qpbf<T> level_kernel<T>(int, int);                         \
    extern template Qpbf<T> canonicalize_nonneg<T>(const Qpbf<T>&, int);       \
    extern template Qpbf<T> qpbf_single<T>(int, int);                          \
    extern template Qpbf<T> qpbf_pair_both<T>(int, int, int);                  \
    extern template Qpbf<T> qpbf_pair_mixed<T>(int, int, int);                 \
    extern template Qpbf<T> qpbf_pair_neither<T>(int, int, int);               \
    extern template Qpbf<T> qpbf_triple_agree<T>(int, int, int, int);          \
    extern template Qpbf<T> qpbf_triple_odd_one<T>(int, int, int, int, int);   \
    extern template std::vector<Qpbf<T>> catalog_g2_g3<T>(int);                \
    extern template Qpbf<T> binomial_qpbf<T>(int, const LiteralSet&, int);     \
    extern template std::string qpbf_to_text<T>(const Qpbf<T>&);               \
    extern template Qpbf<T> qpbf_from_text<T>(const std::string&, int);

UNIONBOUND_QPBF_EXTERN(double)
UNIONBOUND_QPBF_EXTERN(Rational)
#undef UNIONBOUND_QPBF_EXTERN

}  // namespace unionbound
