#pragma once

#include "unionbound/bounds.hpp"
#include "unionbound/instance.hpp"
#include "unionbound/lp.hpp"
#include "unionbound/qpbf.hpp"
#include "unionbound/yvector.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace unionbound {

/// Variable layout of the pairwise aggregation LP: y^1_i for i < n, then the
/// level-k pair blocks for k = 2..n in colex pair order.
struct YatLayout {
    int n = 0;

    int num_vars() const { return n + (n - 1) * pair_count(n); }
    int y1(int i) const { return i; }
    int pair_var(int k, int pair_idx) const {
        return n + (k - 2) * pair_count(n) + pair_idx;
    }
};

/// The pairwise aggregation LP: equality rows fix the per-index marginals and
/// the pair sums; inequality rows are the level-k rows of every support-2 and
/// support-3 generator over all admissible index choices.
LpProblem<double> build_yat_lp(const Instance& inst);

/// Bounds from the pairwise aggregation model.
BoundResult yat_bounds(const Instance& inst, LpMode mode = LpMode::floating);

struct CutDescriptor {
    enum class Source { catalog_g2g3, binomial_g4 };

    Source source = Source::binomial_g4;
    LiteralSet w;        // populated for binomial cuts
    int gamma = 0;
    int k = 0;           // level the row is instantiated at
    std::vector<double> row;  // C(n,2) coefficients over the level-k pairs
    double violation = 0.0;   // row value at the separated point
    int round = 0;            // cut-loop round that accepted it
};

struct SeparationOptions {
    double violation_tol = 1e-7;  // accept rows below -tol
    int support = 4;              // |W|; larger supports are opt-in
    int batch = 1;                // top-k cuts per call (default one-by-one)
};

/// Most violated binomial-generator row at y, enumerating all support-size
/// index sets, polarity patterns, gamma in {1, 2} and levels 2..n in
/// lexicographic (k, indices, polarity bits, gamma) order. Returns nothing
/// when every candidate row clears -violation_tol.
std::optional<CutDescriptor> separate_g4(const YVector<double>& y,
                                         const SeparationOptions& options = {});

/// Top `batch` violated cuts, most violated first (same enumeration).
std::vector<CutDescriptor> separate_g4_batch(const YVector<double>& y,
                                             const SeparationOptions& options = {});

struct QpbMinusResult {
    BoundResult bounds;
    std::vector<CutDescriptor> cuts;
    bool hit_round_limit = false;
    // Objective value after each max-side (resp. min-side) solve; the max
    // series is non-increasing and the min series non-decreasing.
    std::vector<double> max_objectives;
    std::vector<double> min_objectives;
};

/// Cutting-plane tightening of the pairwise model: alternately solve the max
/// and min problems and add the most violated binomial-generator row, until
/// no candidate is violated or max_rounds cuts were added.
QpbMinusResult qpb_minus_with_cuts(const Instance& inst, int max_rounds = 200,
                                   const SeparationOptions& options = {});
BoundResult qpb_minus_bounds(const Instance& inst, int max_rounds = 200);

/// Exact membership of an E2 vector in the image of the nonnegative orthant:
/// preimage feasibility at every level. Guard: n <= 12.
template <class T>
bool u2_member_oracle(const YVector<T>& y);

/// CSV cut log: header plus one line per cut
/// (round,k,indices,polarity_bits,gamma,violation), indices 1-based and
/// polarity bit b set iff the b-th listed index enters negated.
void write_cut_log(std::ostream& out, const std::vector<CutDescriptor>& cuts);

extern template bool u2_member_oracle<double>(const YVector<double>&);
extern template bool u2_member_oracle<Rational>(const YVector<Rational>&);

}  // namespace unionbound
