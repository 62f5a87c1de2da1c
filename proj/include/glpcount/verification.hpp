#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "glpcount/symmetric_group.hpp"

namespace glp::verify {

enum class Tier { Fast, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The expected 7 x 15 cohomology multiplicity table for m = 7 under general
/// linear position, columns in canonical partition order.
const std::array<std::array<int, 15>, 7>& reference_table2();

/// Runs one verification criterion (1..9). Thread count 0 picks the default.
CriterionResult run_criterion(int id, Tier tier, int threads);

/// Runs all criteria of the tier in order, streaming one line per criterion
/// to `out`. Returns the results.
std::vector<CriterionResult> run_acceptance(Tier tier, int threads, std::ostream& out);

/// Independent character table for small m, built from permutation-module
/// fixed-point counts and Gram-Schmidt over explicit permutations. Used to
/// cross-check the border-strip recursion; m <= 5.
CharacterTable brute_force_character_table(int m);

}  // namespace glp::verify
