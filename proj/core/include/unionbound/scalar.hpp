#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace unionbound {

/// Exact arithmetic scalar used by the rational solver paths.
using Rational = boost::multiprecision::mpq_rational;

/// Per-scalar numeric policy. Exact scalars use zero tolerances.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr double feasibility_tol = 1e-9;
    static constexpr double pivot_tol = 1e-10;
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational feasibility_tol_value() { return Rational(0); }
};

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Exact lift: every double is a dyadic rational.
inline Rational to_rational(double v) { return Rational(v); }

std::string scalar_to_string(double v);
std::string scalar_to_string(const Rational& v);
bool scalar_from_string(const std::string& s, double& out);
bool scalar_from_string(const std::string& s, Rational& out);

}  // namespace unionbound
