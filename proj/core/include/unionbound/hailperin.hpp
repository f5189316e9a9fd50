#pragma once

#include "unionbound/atoms.hpp"
#include "unionbound/bounds.hpp"
#include "unionbound/instance.hpp"
#include "unionbound/lp.hpp"

namespace unionbound {

/// Sharp bounds on P(union) from the exponential-size atom LP: variables x_S
/// over all nonempty S, one equality row per singleton and per pair,
/// objective sum of all x_S. Infeasibility of the row system or a minimum
/// above one both mean no probability space fits the data. Guard: n <= 20.
BoundResult hailperin_bounds(const Instance& inst, LpMode mode = LpMode::floating);

/// A feasible atom vector of the sharp model whose total mass equals target
/// (a convex combination of the min- and max-optimal vertices). Requires a
/// feasible instance and lb <= target <= ub; throws std::domain_error
/// otherwise. Rational target solves exactly.
template <class T>
AtomVector<T> atom_certificate(const Instance& inst, const T& target);

extern template AtomVector<double> atom_certificate<double>(const Instance&, const double&);
extern template AtomVector<Rational> atom_certificate<Rational>(const Instance&, const Rational&);

}  // namespace unionbound
