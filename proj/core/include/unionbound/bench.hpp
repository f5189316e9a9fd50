#pragma once

#include "unionbound/bounds.hpp"
#include "unionbound/instance.hpp"
#include "unionbound/lp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace unionbound {

enum class BoundSide { lb, ub };

/// Percentage-relative-error statistics of one (n, model, side) cell.
/// Errors are 100 |bound - opt| / opt against the sharp bounds; std is the
/// population formula (divide by count).
struct StatsRow {
    int n = 0;
    std::string model;
    BoundSide side = BoundSide::lb;
    double mean = 0.0;
    double std_dev = 0.0;
    double max = 0.0;
    int instances = 0;
};

struct BenchmarkConfig {
    std::vector<int> n_list;
    int count = 20;
    std::uint64_t seed = 1;
    double zero_fraction = 0.5;
    std::vector<std::string> models;  // relaxation tags; sharp bounds always run
    LpMode mode = LpMode::floating;
    int max_rounds = 200;
    int threads = 0;  // 0 = hardware concurrency
};

struct BenchmarkReport {
    std::vector<StatsRow> rows;
    struct Note {
        int n = 0;
        BoundSide side = BoundSide::lb;
        int skipped = 0;  // instances with a zero sharp bound on this side
    };
    std::vector<Note> notes;
    int infeasible_instances = 0;  // defensive; the generator never produces these
};

/// Per-instance seed for element t of the (seed, n) batch.
std::uint64_t instance_seed(std::uint64_t seed, int n, int t);

/// Seeded batch experiment. Instances are solved concurrently and joined in
/// seed order, so a fixed config yields a byte-identical report.
BenchmarkReport run_benchmark(const BenchmarkConfig& config);

enum class ReportFormat { csv, markdown };

/// Deterministic rendering, columns n | model | side | mean | std | max with
/// two decimals; skip counts appear as trailing '#' footnote lines.
std::string emit_report(const BenchmarkReport& report, ReportFormat format);

/// Known model tags: hailperin, bm, pg, ipg, yat, qpbm.
bool is_known_model(const std::string& tag);

/// Dispatch a single-instance bound computation by tag.
BoundResult compute_bounds(const std::string& tag, const Instance& inst, LpMode mode,
                           int max_rounds = 200);

}  // namespace unionbound
