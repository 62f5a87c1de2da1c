#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "glpcount/finite_field.hpp"
#include "glpcount/generality.hpp"
#include "glpcount/partition.hpp"

namespace glp {

/// Exact count of m-tuples fixed by Frobenius composed with a permutation of
/// the given cycle type, before and after the quotient by PGL(3, F_p).
struct CountRecord {
    int m = 0;
    CycleType cycle_type;
    std::int64_t p = 0;
    std::string condition;
    BigInt raw_fixed_count;
    BigInt quotient_count;
    std::string engine;  // "twisted" | "frame" | "reference"
    double wall_seconds = 0.0;
};

struct CountOptions {
    /// 0 = GLPCOUNT_THREADS environment variable, else the OpenMP default.
    int threads = 0;
    /// Refuse jobs whose feasibility estimate exceeds this many iterations.
    std::uint64_t budget = 10'000'000'000ULL;
    /// Report progress to stderr every 10^7 seed iterations.
    bool progress = false;
    /// Cycle processing order; the count is independent of it.
    enum class Layout { Descending, Ascending };
    Layout layout = Layout::Descending;
};

class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(BigInt estimate, std::uint64_t budget);
    BigInt estimate;
    std::uint64_t budget;
};

/// Iterations the enumeration will visit before pruning: the product over
/// enumerated cycles of |P^2(F_{p^c})|. With frame_path, the four pinned
/// rational positions drop out of the product.
BigInt feasibility_estimate(int m, const CycleType& cycle_type, std::int64_t p, bool frame_path);

bool frame_eligible(const CycleType& cycle_type);

/// Full enumeration over all cycles. raw_fixed_count is counted directly;
/// quotient_count = raw / |PGL(3,F_p)| (the action is free, and exact
/// divisibility is asserted).
CountRecord count_twisted(int m, const CycleType& cycle_type, std::int64_t p,
                          const GeneralityCondition& condition, const CountOptions& options = {});

/// Fast path for cycle types with at least four fixed points: pins four
/// rational positions to the standard frame (1:0:0), (0:1:0), (0:0:1),
/// (1:1:1) and counts completions, which equals quotient_count directly.
CountRecord count_frame_normalized(int m, const CycleType& cycle_type, std::int64_t p,
                                   const GeneralityCondition& condition,
                                   const CountOptions& options = {});

/// Frame path when eligible, otherwise full enumeration.
CountRecord count_auto(int m, const CycleType& cycle_type, std::int64_t p,
                       const GeneralityCondition& condition, const CountOptions& options = {});

/// Serial reference engine on the generic field arithmetic and the public
/// predicates; no tables, no incremental checks. Kept for validating the
/// table-driven kernels.
CountRecord count_twisted_reference(int m, const CycleType& cycle_type, std::int64_t p,
                                    const GeneralityCondition& condition,
                                    const CountOptions& options = {});

}  // namespace glp
