#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glp {

/// A partition of m: weakly decreasing positive parts. Doubles as the cycle
/// type of a conjugacy class of the symmetric group S_m.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    int size() const { return static_cast<int>(parts.size()); }
    int count_part(int k) const;
    int lcm_parts() const;

    bool operator==(const Partition&) const = default;
    // Canonical order: reverse lexicographic, (m) first, (1^m) last.
    bool operator<(const Partition& other) const { return parts > other.parts; }
};

using CycleType = Partition;

/// All partitions of m in canonical order.
std::vector<Partition> partitions_of(int m);

/// Order of the conjugacy class with this cycle type in S_m.
std::uint64_t class_size(const CycleType& lambda);

std::uint64_t factorial(int m);

/// "2.2.1.1.1" (dotted) and "1x8"-style shorthand; parts may be mixed,
/// e.g. "2.1x5". Parts are sorted into canonical form.
Partition parse_cycle_type(const std::string& text);

/// Dotted form, e.g. "2.2.1.1.1".
std::string format_dotted(const Partition& p);

/// Compact exponent form matching the usual tables, e.g. "2^21^3", "7".
std::string format_exponent(const Partition& p);

}  // namespace glp
