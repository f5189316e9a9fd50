#pragma once

#include "unionbound/bounds.hpp"
#include "unionbound/instance.hpp"
#include "unionbound/lp.hpp"
#include "unionbound/yvector.hpp"

#include <vector>

namespace unionbound {

/// Binomial moment model: n aggregated variables y^k, two equality rows.
BoundResult bm_bounds(const Instance& inst, LpMode mode = LpMode::floating);

/// Prekopa-Gao model over y^k_i: per-index marginal and pair-sum rows.
BoundResult pg_bounds(const Instance& inst, LpMode mode = LpMode::floating);

/// PG plus the full set of leave-one-out facet rows; by the cone
/// characterization this is the exact projection of the atom LP onto the
/// E1 variables.
BoundResult ipg_bounds(const Instance& inst, LpMode mode = LpMode::floating);

/// One facet of the E1 image cone: sum_{j != i} y^k_j - (k-1) y^k_i >= 0.
struct U1Facet {
    int i = 0;  // distinguished index, 0-based
    int k = 1;  // level

    /// Row coefficients over the n level-k variables: -(k-1) at i, +1 at j != i.
    template <class T>
    std::vector<T> coefficients(int n) const {
        std::vector<T> row(static_cast<std::size_t>(n), T(1));
        row[static_cast<std::size_t>(i)] = T(-(k - 1));
        return row;
    }
};

/// All n*n facets, ordered by (k, i).
std::vector<U1Facet> u1_facets(int n);

/// Membership of an E1 vector in the cone cut out by nonnegativity and the
/// leave-one-out facets (tolerance 1e-9 in floating point, exact otherwise).
template <class T>
bool u1_contains(const YVector<T>& y);

/// Single-level variant used by the per-level equivalence tests.
template <class T>
bool u1_contains_level(const YVector<T>& y, int k);

extern template bool u1_contains<double>(const YVector<double>&);
extern template bool u1_contains<Rational>(const YVector<Rational>&);
extern template bool u1_contains_level<double>(const YVector<double>&, int);
extern template bool u1_contains_level<Rational>(const YVector<Rational>&, int);

}  // namespace unionbound
