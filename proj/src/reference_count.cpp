#include <algorithm>
#include <chrono>

#include "glpcount/projective_plane.hpp"
#include "glpcount/twisted_enumeration.hpp"

namespace glp {

namespace {

/// Straight-line restatement of the counting scheme on the generic
/// arithmetic: seeds are filtered with orbit_size, every extension re-runs
/// check_partial on the whole tuple, and no table or cross-product cache is
/// involved. Slow, single-threaded, and deliberately independent of the
/// table-driven kernels.
std::uint64_t recurse(const std::vector<std::vector<ProjectivePoint>>& seed_lists,
                      const std::vector<int>& cycles, const GeneralityCondition& condition,
                      std::vector<ProjectivePoint>& tuple, size_t cycle_idx) {
    if (cycle_idx == cycles.size())
        return check_full(condition, tuple) ? 1 : 0;
    std::uint64_t count = 0;
    int c = cycles[cycle_idx];
    size_t base = tuple.size();
    for (const auto& seed : seed_lists[cycle_idx]) {
        ProjectivePoint cur = seed;
        for (int j = 0; j < c; ++j) {
            tuple.push_back(cur);
            if (j + 1 < c) cur = frobenius_point(cur);
        }
        if (check_partial(condition, tuple))
            count += recurse(seed_lists, cycles, condition, tuple, cycle_idx + 1);
        tuple.resize(base);
    }
    return count;
}

}  // namespace

CountRecord count_twisted_reference(int m, const CycleType& cycle_type, std::int64_t p,
                                    const GeneralityCondition& condition,
                                    const CountOptions& options) {
    if (cycle_type.sum() != m) throw std::invalid_argument("cycle type must sum to m");
    if (m < 4) throw std::invalid_argument("m must be at least 4");
    BigInt est = feasibility_estimate(m, cycle_type, p, false);
    if (est > options.budget) throw InfeasibleError(est, options.budget);

    auto start = std::chrono::steady_clock::now();
    int L = cycle_type.lcm_parts();
    auto field = construct_field(p, L);

    std::vector<int> cycles = cycle_type.parts;
    if (options.layout == CountOptions::Layout::Ascending)
        std::reverse(cycles.begin(), cycles.end());

    std::vector<std::vector<ProjectivePoint>> seed_lists(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) {
        enumerate_points(*field, cycles[i], [&](const ProjectivePoint& pt) {
            if (orbit_size(pt) == cycles[i]) seed_lists[i].push_back(pt);
        });
    }

    std::vector<ProjectivePoint> tuple;
    tuple.reserve(m);
    std::uint64_t total = recurse(seed_lists, cycles, condition, tuple, 0);
    auto stop = std::chrono::steady_clock::now();

    CountRecord record;
    record.m = m;
    record.cycle_type = cycle_type;
    record.p = p;
    record.condition = condition.name();
    record.engine = "reference";
    record.wall_seconds = std::chrono::duration<double>(stop - start).count();
    record.raw_fixed_count = total;
    BigInt order = pgl_order(p);
    if (record.raw_fixed_count % order != 0)
        throw std::logic_error("raw fixed count not divisible by |PGL(3,F_p)|");
    record.quotient_count = record.raw_fixed_count / order;
    return record;
}

}  // namespace glp
