#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glpcount/polynomials.hpp"
#include "glpcount/symmetric_group.hpp"

namespace glp {

/// Multiplicity of each irreducible of S_m in each cohomology degree,
/// 0 <= k <= d.
struct CohomologyTable {
    int m = 0;
    int d = 0;  // top degree, equal to the dimension of the space
    std::vector<Partition> partitions;
    std::vector<std::vector<BigInt>> mult;  // mult[k][partition index]

    std::string to_csv() const;
    std::string to_json() const;
};

struct PurityDiagnostic {
    int degree = 0;
    Partition partition;
    std::string value;  // exact rational, as text
    std::string reason; // "non-integral" | "negative"
};

struct CohomologyResult {
    std::optional<CohomologyTable> table;
    std::vector<PurityDiagnostic> problems;
    bool ok() const { return table.has_value() && problems.empty(); }
};

/// chi_k(lambda) = (-1)^k * (coefficient of q^{d-k} in the class-lambda
/// polynomial).
std::vector<BigInt> extract_character(const std::map<CycleType, CountPolynomial>& polys, int k,
                                      int d);

/// Decomposes every degree's character into irreducibles. A non-integral or
/// negative multiplicity means the input polynomials are not the point
/// counts of a minimally pure space (or are simply wrong); each offender is
/// reported in the diagnostics and no table is produced.
CohomologyResult cohomology_table(const std::map<CycleType, CountPolynomial>& polys, int m, int d);

/// Rebuilds the count polynomials from a cohomology table; exact inverse of
/// cohomology_table on valid input.
std::map<CycleType, CountPolynomial> round_trip(const CohomologyTable& table);

/// Dimension of the invariant part per degree: the multiplicity of the
/// trivial representation, i.e. the Poincare numbers of the unordered space.
std::vector<BigInt> unordered_poincare(const CohomologyTable& table);

}  // namespace glp
