#pragma once

#include <iosfwd>
#include <string>

namespace unionbound {

enum class BoundStatus { ok, prob_infeasible };

/// Why a model reported prob_infeasible: the equality system itself has no
/// nonnegative solution, or it does but only with total mass above one.
enum class InfeasCause { none, lp_infeasible, min_exceeds_one };

struct BoundResult {
    BoundStatus status = BoundStatus::ok;
    double lb = 0.0;
    double ub = 0.0;
    std::string model;
    int cuts_added = 0;
    InfeasCause cause = InfeasCause::none;
};

std::string bound_result_json(const BoundResult& r);
std::ostream& operator<<(std::ostream& out, const BoundResult& r);

}  // namespace unionbound
