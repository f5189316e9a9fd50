#pragma once

#include "unionbound/atoms.hpp"
#include "unionbound/yvector.hpp"

namespace unionbound {

/// Image of an atom vector under the chosen aggregation family. For E2 the
/// redundant empty-set and singleton slots at levels k >= 2 are filled from
/// the pair sums, so the linear redundancy identities hold as computed.
template <class T>
YVector<T> aggregate(const AtomVector<T>& x, Family family);

/// True iff some nonnegative atom vector supported on size-k sets aggregates
/// to y's level k. Exact membership test: rational inputs solve an exact LP;
/// double inputs are lifted to rationals for n <= 10 and solved in floating
/// point (feasibility tolerance 1e-9) above that. Guard: n <= 16.
template <class T>
bool preimage_feasible(const YVector<T>& y, int k);

extern template YVector<double> aggregate<double>(const AtomVector<double>&, Family);
extern template YVector<Rational> aggregate<Rational>(const AtomVector<Rational>&, Family);
extern template bool preimage_feasible<double>(const YVector<double>&, int);
extern template bool preimage_feasible<Rational>(const YVector<Rational>&, int);

}  // namespace unionbound
