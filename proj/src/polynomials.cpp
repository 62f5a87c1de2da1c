#include "glpcount/polynomials.hpp"

#include <algorithm>
#include <set>

namespace glp {

int CountPolynomial::degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
        if (coeffs[k] != 0) return k;
    return -1;
}

BigInt CountPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[k];
}

BigInt evaluate(const CountPolynomial& poly, const BigInt& q) {
    BigInt acc = 0;
    for (int k = static_cast<int>(poly.coeffs.size()) - 1; k >= 0; --k)
        acc = acc * q + poly.coeffs[k];
    return acc;
}

CountPolynomial interpolate(const std::vector<std::pair<std::int64_t, BigInt>>& samples,
                            int degree_bound) {
    if (degree_bound < 0) throw InterpolationError("degree bound must be nonnegative");
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (samples.size() < need)
        throw InterpolationError("need at least " + std::to_string(need) + " samples, got " +
                                 std::to_string(samples.size()));
    std::set<std::int64_t> xs;
    for (const auto& [x, y] : samples)
        if (!xs.insert(x).second) throw InterpolationError("duplicate sample point");

    // Lagrange on the first degree_bound+1 samples, exact rationals.
    std::vector<BigRat> acc(need, BigRat(0));
    for (size_t i = 0; i < need; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<BigRat> basis{BigRat(1)};
        BigRat denom(1);
        for (size_t j = 0; j < need; ++j) {
            if (j == i) continue;
            std::vector<BigRat> next(basis.size() + 1, BigRat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * samples[j].first;
            }
            basis = std::move(next);
            denom *= BigRat(samples[i].first - samples[j].first);
        }
        BigRat scale = BigRat(samples[i].second) / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }

    CountPolynomial poly;
    poly.coeffs.resize(need);
    for (size_t k = 0; k < need; ++k) {
        if (boost::multiprecision::denominator(acc[k]) != 1)
            throw InterpolationError("non-integer coefficient of q^" + std::to_string(k) + ": " +
                                     acc[k].str() + " (counting bug or wrong degree bound)");
        poly.coeffs[k] = boost::multiprecision::numerator(acc[k]);
    }
    // remaining samples must agree with the interpolant
    for (size_t i = need; i < samples.size(); ++i) {
        if (evaluate(poly, BigInt(samples[i].first)) != samples[i].second)
            throw InterpolationError("sample at " + std::to_string(samples[i].first) +
                                     " inconsistent with degree bound " +
                                     std::to_string(degree_bound));
    }
    return poly;
}

namespace {

// coefficient lists constant-term first
std::map<CycleType, CountPolynomial> build_table1() {
    auto poly = [](std::vector<std::int64_t> ascending) {
        CountPolynomial p;
        p.coeffs.assign(ascending.begin(), ascending.end());
        return p;
    };
    std::map<CycleType, CountPolynomial> t;
    t[parse_cycle_type("7")] = poly({1, 0, 1, 1, 1, 0, 1});
    t[parse_cycle_type("6.1")] = poly({0, 0, -1, 0, 1, 1, 1});
    t[parse_cycle_type("5.2")] = poly({0, -1, 0, -1, 1, 0, 1});
    t[parse_cycle_type("5.1.1")] = poly({0, 1, 2, 3, 3, 2, 1});
    t[parse_cycle_type("4.3")] = poly({0, 0, 0, 1, -1, -1, 1});
    t[parse_cycle_type("4.2.1")] = poly({2, 0, 0, 0, -3, 0, 1});
    t[parse_cycle_type("4.1.1.1")] = poly({0, 0, 0, -2, -1, 2, 1});
    t[parse_cycle_type("3.3.1")] = poly({18, 6, 9, -8, -1, -1, 1});
    t[parse_cycle_type("3.2.2")] = poly({0, 0, 0, 1, -1, -1, 1});
    t[parse_cycle_type("3.2.1.1")] = poly({0, 0, 0, 1, -1, -1, 1});
    t[parse_cycle_type("3.1x4")] = poly({0, 0, 0, 1, -1, -1, 1});
    t[parse_cycle_type("2.2.2.1")] = poly({-48, -36, 38, 18, -11, -2, 1});
    t[parse_cycle_type("2.2.1.1.1")] = poly({6, -12, -6, 16, -1, -4, 1});
    t[parse_cycle_type("2.1x5")] = poly({0, -36, 90, -86, 41, -10, 1});
    t[parse_cycle_type("1x7")] = poly({7470, -11004, 6462, -1952, 323, -28, 1});
    return t;
}

}  // namespace

const std::map<CycleType, CountPolynomial>& builtin_table1() {
    static const std::map<CycleType, CountPolynomial> table = build_table1();
    return table;
}

std::string format_polynomial(const CountPolynomial& poly) {
    int d = poly.degree();
    if (d < 0) return "0";
    std::string s;
    for (int k = d; k >= 0; --k) {
        BigInt c = poly.coefficient(k);
        if (c == 0) continue;
        bool negative = c < 0;
        BigInt a = negative ? BigInt(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        bool coeff_one = (a == 1);
        if (!coeff_one || k == 0) s += a.str();
        if (k > 0) {
            s += "q";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace glp
