#pragma once

#include "unionbound/scalar.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace unionbound {

enum class Sense { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };
enum class LpMode { exact, floating };

/// Dense LP over equality and >= rows with per-variable lower bounds
/// (default 0 when var_lower_bounds is empty).
template <class T>
struct LpProblem {
    struct Row {
        std::vector<T> coeffs;  // length num_vars
        T rhs{};
    };

    int num_vars = 0;
    Sense sense = Sense::maximize;
    std::vector<T> objective;
    std::vector<Row> eq_rows;
    std::vector<Row> ge_rows;
    std::vector<T> var_lower_bounds;

    Row& add_eq(T rhs) {
        eq_rows.push_back({std::vector<T>(static_cast<std::size_t>(num_vars)), std::move(rhs)});
        return eq_rows.back();
    }
    Row& add_ge(T rhs) {
        ge_rows.push_back({std::vector<T>(static_cast<std::size_t>(num_vars)), std::move(rhs)});
        return ge_rows.back();
    }
};

template <class T>
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    T objective_value{};      // valid iff optimal
    std::vector<T> primal;    // valid iff optimal
    // Dual certificate, valid iff optimal. With lb the variable lower bounds,
    //   objective_value = eq_duals . (b - A lb) + ge_duals . (h - G lb) + c . lb
    // and for minimize ge_duals >= 0 (maximize: <= 0) with A'eq_duals +
    // G'ge_duals componentwise below (minimize) resp. above (maximize) c.
    std::vector<T> eq_duals;
    std::vector<T> ge_duals;
    std::int64_t iterations = 0;
};

struct SolveOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    double pivot_tol = 1e-10;
    // Exact solves refuse problems with more dense tableau entries than this.
    std::size_t exact_entry_guard = 4'000'000;
    // Row-heavy problems are solved through their dual (floating mode only).
    bool allow_dualize = true;
    // Consecutive degenerate pivots before Bland's rule takes over.
    int stall_limit = 50;
    std::int64_t max_iterations = 20'000'000;
};

/// Two-phase dense simplex. Dantzig pricing with Bland's rule engaged as the
/// anti-cycling fallback after a degeneracy stall; exact instantiation uses
/// zero tolerances throughout.
template <class T>
LpSolution<T> solve_lp(const LpProblem<T>& p, const SolveOptions& options = {});

/// Mode-selecting wrapper: exact lifts the doubles to rationals (exactly),
/// solves, and rounds the results back.
LpSolution<double> solve_lp(const LpProblem<double>& p, LpMode mode,
                            const SolveOptions& options = {});

/// Line-oriented CPLEX LP text format, for cross-checking with external
/// solvers. Variables are named x1..xn.
void write_lp_text(std::ostream& out, const LpProblem<double>& p,
                   const std::string& name = "lp");

extern template LpSolution<double> solve_lp<double>(const LpProblem<double>&, const SolveOptions&);
extern template LpSolution<Rational> solve_lp<Rational>(const LpProblem<Rational>&, const SolveOptions&);

}  // namespace unionbound
