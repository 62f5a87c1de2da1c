#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glpcount/finite_field.hpp"
#include "glpcount/partition.hpp"

namespace glp {

/// Integer-coefficient polynomial in q; coeffs[k] is the coefficient of q^k.
struct CountPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const;
    BigInt coefficient(int k) const;  // 0 outside the stored range
    bool operator==(const CountPolynomial&) const = default;
};

BigInt evaluate(const CountPolynomial& poly, const BigInt& q);

class InterpolationError : public std::runtime_error {
public:
    explicit InterpolationError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact Lagrange interpolation through (prime, count) samples in rational
/// arithmetic. Needs at least degree_bound+1 samples at distinct points;
/// extra samples must be consistent. Throws InterpolationError if any
/// coefficient comes out non-integral, which signals a counting bug or a
/// wrong degree bound.
CountPolynomial interpolate(const std::vector<std::pair<std::int64_t, BigInt>>& samples,
                            int degree_bound);

/// The fifteen count polynomials for m = 7 under general linear position,
/// one per conjugacy class, embedded as ground-truth data.
const std::map<CycleType, CountPolynomial>& builtin_table1();

/// Human-readable form, e.g. "q^6 - q^5 - q^4 + q^3".
std::string format_polynomial(const CountPolynomial& poly);

}  // namespace glp
