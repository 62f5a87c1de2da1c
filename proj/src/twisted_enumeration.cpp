#include "glpcount/twisted_enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "glpcount/packed_geometry.hpp"
#include "glpcount/projective_plane.hpp"
#include "glpcount/zech_field.hpp"

namespace glp {

InfeasibleError::InfeasibleError(BigInt estimate_, std::uint64_t budget_)
    : std::runtime_error("feasibility estimate " + estimate_.str() + " exceeds budget " +
                         std::to_string(budget_)),
      estimate(std::move(estimate_)),
      budget(budget_) {}

namespace {

int resolve_threads(const CountOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("GLPCOUNT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

void validate_job(int m, const CycleType& cycle_type, std::int64_t p,
                  const GeneralityCondition& condition) {
    if (cycle_type.sum() != m) throw std::invalid_argument("cycle type must sum to m");
    if (m < 4 || m > 12)
        throw std::invalid_argument("m must be in [4,12] (PGL(3) acts freely from four points on)");
    if (condition.m != m) throw std::invalid_argument("condition is for a different m");
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

BigInt plane_size(std::int64_t p, int c) {
    BigInt s = 1;
    for (int i = 0; i < c; ++i) s *= p;
    return s * s + s + 1;
}

/// Seed candidates for one cycle: the points of P^2 with coordinates in the
/// subfield of size p^c, addressed by a flat ordinal so the loop can be
/// split across threads without materializing anything.
struct SeedSpace {
    const ZechField* F = nullptr;
    int c = 0;
    std::uint64_t s = 0;         // p^c
    std::uint64_t n_points = 0;  // s^2 + s + 1
    std::uint64_t stride = 0;    // exponent stride of the subfield
    int check_divisors[8];       // c / r for primes r | c
    int n_check = 0;

    void init(const ZechField& field, int cycle_len) {
        F = &field;
        c = cycle_len;
        s = 1;
        for (int i = 0; i < c; ++i) s *= static_cast<std::uint64_t>(field.p);
        n_points = s * s + s + 1;
        stride = field.subfield_stride(c);
        n_check = 0;
        int rest = c;
        for (int r = 2; r * r <= rest; ++r) {
            if (rest % r == 0) {
                check_divisors[n_check++] = c / r;
                while (rest % r == 0) rest /= r;
            }
        }
        if (rest > 1) check_divisors[n_check++] = c / rest;
    }

    ZechField::Elem elem(std::uint64_t i) const {
        return i == 0 ? F->zero() : static_cast<ZechField::Elem>((i - 1) * stride);
    }

    PackedPoint point(std::uint64_t t) const {
        if (t < s * s) return PackedPoint{F->one(), elem(t / s), elem(t % s)};
        t -= s * s;
        if (t < s) return PackedPoint{F->zero(), F->one(), elem(t)};
        return PackedPoint{F->zero(), F->zero(), F->one()};
    }

    // Orbit length is exactly c iff no maximal proper divisor fixes the point.
    bool orbit_exact(PackedPoint pt) const {
        for (int k = 0; k < n_check; ++k)
            if (frobenius_point_pow(*F, pt, check_divisors[k]) == pt) return false;
        return true;
    }
};

struct ProgressMeter {
    static constexpr std::uint64_t interval = 10'000'000;
    std::atomic<std::uint64_t> done{0};
    bool enabled = false;
    BigInt total;

    void tick(std::uint64_t n) {
        if (!enabled) return;
        std::uint64_t prev = done.fetch_add(n, std::memory_order_relaxed);
        if (prev / interval != (prev + n) / interval) {
            std::fprintf(stderr, "progress: %llu / %s seed iterations\n",
                         static_cast<unsigned long long>(prev + n), total.str().c_str());
        }
    }
};

struct EngineSetup {
    std::shared_ptr<const ZechField> field;
    std::vector<PackedPoint> prefix;   // frame points, if any
    std::vector<SeedSpace> spaces;     // enumerated cycles, processing order
    ConditionKind kind;
    int m = 0;
};

std::vector<int> layout_cycles(const CycleType& cycle_type, CountOptions::Layout layout) {
    std::vector<int> cycles = cycle_type.parts;  // canonical form is descending
    if (layout == CountOptions::Layout::Ascending)
        std::reverse(cycles.begin(), cycles.end());
    return cycles;
}

EngineSetup prepare(int m, const CycleType& cycle_type, std::int64_t p,
                    const GeneralityCondition& condition, const CountOptions& options,
                    bool frame_path) {
    EngineSetup setup;
    setup.kind = condition.kind;
    setup.m = m;
    int L = cycle_type.lcm_parts();
    setup.field = zech_field(p, L);
    const ZechField& F = *setup.field;

    std::vector<int> cycles = layout_cycles(cycle_type, options.layout);
    if (frame_path) {
        int ones_to_skip = 4;
        std::vector<int> free_cycles;
        for (int c : cycles) {
            if (c == 1 && ones_to_skip > 0) {
                --ones_to_skip;
                continue;
            }
            free_cycles.push_back(c);
        }
        if (ones_to_skip > 0) throw std::invalid_argument("frame path needs at least four 1-parts");
        const auto zr = F.zero();
        const auto on = F.one();
        setup.prefix = {PackedPoint{on, zr, zr}, PackedPoint{zr, on, zr}, PackedPoint{zr, zr, on},
                        PackedPoint{on, on, on}};
        cycles = std::move(free_cycles);
    }
    setup.spaces.resize(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) setup.spaces[i].init(F, cycles[i]);
    return setup;
}

BigInt estimate_from_setup(const EngineSetup& setup) {
    BigInt est = 1;
    for (const auto& space : setup.spaces) est *= space.n_points;
    return est;
}

/// Places one cycle's Frobenius orbit starting from the seed; prunes as each
/// point lands. Returns the number of admissible completions of the
/// remaining cycles.
std::uint64_t enumerate_cycle(const EngineSetup& setup, TupleChecker& checker, size_t cycle_idx,
                              ProgressMeter& meter);

std::uint64_t place_orbit_and_recurse(const EngineSetup& setup, TupleChecker& checker,
                                      size_t cycle_idx, PackedPoint seed, ProgressMeter& meter) {
    const SeedSpace& space = setup.spaces[cycle_idx];
    const ZechField& F = *setup.field;
    int base = checker.size();
    PackedPoint cur = seed;
    for (int j = 0; j < space.c; ++j) {
        if (!checker.try_push(cur)) {
            checker.pop_to(base);
            return 0;
        }
        if (j + 1 < space.c) cur = frobenius_point(F, cur);
    }
    std::uint64_t count;
    if (cycle_idx + 1 == setup.spaces.size())
        count = checker.full_check() ? 1 : 0;
    else
        count = enumerate_cycle(setup, checker, cycle_idx + 1, meter);
    checker.pop_to(base);
    return count;
}

std::uint64_t enumerate_cycle(const EngineSetup& setup, TupleChecker& checker, size_t cycle_idx,
                              ProgressMeter& meter) {
    const SeedSpace& space = setup.spaces[cycle_idx];
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < space.n_points; ++t) {
        PackedPoint seed = space.point(t);
        if (!space.orbit_exact(seed)) continue;
        count += place_orbit_and_recurse(setup, checker, cycle_idx, seed, meter);
    }
    meter.tick(space.n_points);
    return count;
}

std::uint64_t run_enumeration(const EngineSetup& setup, const CountOptions& options) {
    ProgressMeter meter;
    meter.enabled = options.progress;
    meter.total = estimate_from_setup(setup);

    if (setup.spaces.empty()) {
        TupleChecker checker(*setup.field, setup.kind);
        for (const auto& pt : setup.prefix)
            if (!checker.try_push(pt)) return 0;
        return checker.full_check() ? 1 : 0;
    }

    const SeedSpace& outer = setup.spaces[0];
    int threads = resolve_threads(options);
    long long n_outer = static_cast<long long>(outer.n_points);
    long long chunk = std::max(1LL, n_outer / (static_cast<long long>(threads) * 256));
    std::uint64_t total = 0;

#pragma omp parallel num_threads(threads) reduction(+ : total)
    {
        TupleChecker checker(*setup.field, setup.kind);
        bool prefix_ok = true;
        for (const auto& pt : setup.prefix)
            if (!checker.try_push(pt)) prefix_ok = false;
        if (prefix_ok) {
            std::uint64_t local_ticks = 0;
#pragma omp for schedule(dynamic, chunk) nowait
            for (long long t = 0; t < n_outer; ++t) {
                PackedPoint seed = outer.point(static_cast<std::uint64_t>(t));
                if (outer.orbit_exact(seed))
                    total += place_orbit_and_recurse(setup, checker, 0, seed, meter);
                if (++local_ticks == 65536) {
                    meter.tick(local_ticks);
                    local_ticks = 0;
                }
            }
            meter.tick(local_ticks);
        }
    }
    return total;
}

}  // namespace

BigInt feasibility_estimate(int m, const CycleType& cycle_type, std::int64_t p, bool frame_path) {
    if (cycle_type.sum() != m) throw std::invalid_argument("cycle type must sum to m");
    BigInt est = 1;
    int ones_to_skip = frame_path ? 4 : 0;
    if (frame_path && !frame_eligible(cycle_type))
        throw std::invalid_argument("frame path needs at least four 1-parts");
    for (int c : cycle_type.parts) {
        if (c == 1 && ones_to_skip > 0) {
            --ones_to_skip;
            continue;
        }
        est *= plane_size(p, c);
    }
    return est;
}

bool frame_eligible(const CycleType& cycle_type) { return cycle_type.count_part(1) >= 4; }

namespace {

CountRecord run_counted(int m, const CycleType& cycle_type, std::int64_t p,
                        const GeneralityCondition& condition, const CountOptions& options,
                        bool frame_path) {
    validate_job(m, cycle_type, p, condition);
    BigInt est = feasibility_estimate(m, cycle_type, p, frame_path);
    if (est > options.budget) throw InfeasibleError(est, options.budget);

    auto start = std::chrono::steady_clock::now();
    EngineSetup setup = prepare(m, cycle_type, p, condition, options, frame_path);
    std::uint64_t total = run_enumeration(setup, options);
    auto stop = std::chrono::steady_clock::now();

    CountRecord record;
    record.m = m;
    record.cycle_type = cycle_type;
    record.p = p;
    record.condition = condition.name();
    record.wall_seconds = std::chrono::duration<double>(stop - start).count();
    BigInt order = pgl_order(p);
    if (frame_path) {
        record.engine = "frame";
        record.quotient_count = total;
        record.raw_fixed_count = record.quotient_count * order;
    } else {
        record.engine = "twisted";
        record.raw_fixed_count = total;
        if (record.raw_fixed_count % order != 0)
            throw std::logic_error("raw fixed count not divisible by |PGL(3,F_p)|");
        record.quotient_count = record.raw_fixed_count / order;
    }
    return record;
}

}  // namespace

CountRecord count_twisted(int m, const CycleType& cycle_type, std::int64_t p,
                          const GeneralityCondition& condition, const CountOptions& options) {
    return run_counted(m, cycle_type, p, condition, options, false);
}

CountRecord count_frame_normalized(int m, const CycleType& cycle_type, std::int64_t p,
                                   const GeneralityCondition& condition,
                                   const CountOptions& options) {
    return run_counted(m, cycle_type, p, condition, options, true);
}

CountRecord count_auto(int m, const CycleType& cycle_type, std::int64_t p,
                       const GeneralityCondition& condition, const CountOptions& options) {
    if (frame_eligible(cycle_type))
        return count_frame_normalized(m, cycle_type, p, condition, options);
    return count_twisted(m, cycle_type, p, condition, options);
}

}  // namespace glp
