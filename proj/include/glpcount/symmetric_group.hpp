#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glpcount/finite_field.hpp"
#include "glpcount/partition.hpp"

namespace glp {

/// Character table of S_m: rows are irreducibles (indexed by partitions),
/// columns are conjugacy classes (indexed by cycle types), both in canonical
/// order. Immutable once built.
struct CharacterTable {
    int m = 0;
    std::vector<Partition> partitions;       // row/column labels
    std::vector<std::vector<std::int64_t>> values;  // values[row][col]
    std::vector<std::uint64_t> class_sizes;

    int index_of(const Partition& p) const;
    std::string to_csv() const;
};

/// Irreducible character value chi^mu(lambda), by the Murnaghan-Nakayama
/// border-strip recursion (memoized internally).
std::int64_t character(const Partition& mu, const CycleType& lambda);

CharacterTable build_character_table(int m);

/// Dimension of the irreducible indexed by mu, by the hook length formula.
std::uint64_t hook_dimension(const Partition& mu);

/// Multiplicities of a class function in the irreducible basis, as exact
/// rationals: mult(mu) = (1/m!) sum_lambda |class| chi^mu(lambda) f(lambda).
/// Genuine characters give nonnegative integers; anything else is reported
/// through the flags, never rounded.
struct Decomposition {
    std::vector<Partition> partitions;
    std::vector<BigRat> multiplicities;

    bool integral() const;
    bool nonnegative() const;
    std::vector<BigInt> integer_multiplicities() const;  // throws if not integral
};

Decomposition decompose(const CharacterTable& table, const std::vector<BigInt>& class_values);

}  // namespace glp
