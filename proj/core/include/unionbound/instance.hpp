#pragma once

#include "unionbound/sets.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace unionbound {

/// Problem data: single-event probabilities p_i and pairwise intersection
/// probabilities p_{i,j} for all unordered pairs. Indices are 0-based in
/// memory and 1-based in the JSON format.
struct Instance {
    int n = 0;
    std::vector<double> p1;  // size n
    std::vector<double> p2;  // size C(n,2), colex pair order

    double single(int i) const { return p1[static_cast<std::size_t>(i)]; }
    double pair(int i, int j) const { return p2[static_cast<std::size_t>(pair_index(i, j))]; }

    double sum_singles() const;
    double sum_pairs() const;
};

struct Violation {
    std::string rule;     // "p_range", "pair_range", "pair_exceeds_marginal", "pair_union_gt_one"
    std::string witness;  // e.g. "p[2]" or "p[1,3]" (1-based)
    double amount = 0.0;  // by how much the inequality fails
};

struct Diagnostics {
    bool consistent = true;
    std::vector<Violation> violations;
};

/// Necessary-condition screen. consistent=true means the instance passed the
/// screen, not that a probability space exists.
Diagnostics validate_instance(const Instance& inst);

/// Seeded random instance that admits a probability space by construction:
/// nonnegative atom weights on a dyadic grid (a fraction forced to zero) are
/// normalized together with an empty-atom weight, and the p-values are the
/// implied exact sums. Rejects n < 2 and n > 24.
Instance generate_instance(int n, std::uint64_t seed, double zero_atom_fraction);

/// JSON schema: {"n": int, "p1": [float; n], "p2": [{"i","j","p"}; C(n,2)]},
/// 1-based indices with i < j. Throws std::runtime_error on malformed input.
Instance read_instance_json(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance_json(std::ostream& out, const Instance& inst);

}  // namespace unionbound
