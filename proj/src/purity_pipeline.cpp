#include "glpcount/purity_pipeline.hpp"

#include <sstream>
#include <stdexcept>

namespace glp {

std::vector<BigInt> extract_character(const std::map<CycleType, CountPolynomial>& polys, int k,
                                      int d) {
    if (k < 0 || k > d) throw std::invalid_argument("degree out of range");
    std::vector<BigInt> values;
    values.reserve(polys.size());
    for (const auto& [cycle_type, poly] : polys) {
        BigInt c = poly.coefficient(d - k);
        values.push_back(k % 2 == 0 ? c : -c);
    }
    return values;
}

CohomologyResult cohomology_table(const std::map<CycleType, CountPolynomial>& polys, int m,
                                  int d) {
    auto expected = partitions_of(m);
    if (polys.size() != expected.size())
        throw std::invalid_argument("need one polynomial per conjugacy class");
    for (const auto& p : expected)
        if (!polys.count(p)) throw std::invalid_argument("missing class " + format_dotted(p));

    CharacterTable chars = build_character_table(m);
    CohomologyResult result;
    CohomologyTable table;
    table.m = m;
    table.d = d;
    table.partitions = chars.partitions;
    table.mult.assign(d + 1, {});

    for (int k = 0; k <= d; ++k) {
        // std::map iterates classes in canonical order, matching the table columns
        std::vector<BigInt> values = extract_character(polys, k, d);
        Decomposition dec = decompose(chars, values);
        for (size_t i = 0; i < dec.multiplicities.size(); ++i) {
            const BigRat& r = dec.multiplicities[i];
            if (boost::multiprecision::denominator(r) != 1)
                result.problems.push_back({k, dec.partitions[i], r.str(), "non-integral"});
            else if (r < 0)
                result.problems.push_back({k, dec.partitions[i], r.str(), "negative"});
        }
        if (result.problems.empty()) {
            table.mult[k] = dec.integer_multiplicities();
        }
    }
    if (result.problems.empty()) result.table = std::move(table);
    return result;
}

std::map<CycleType, CountPolynomial> round_trip(const CohomologyTable& table) {
    CharacterTable chars = build_character_table(table.m);
    std::map<CycleType, CountPolynomial> polys;
    for (size_t col = 0; col < chars.partitions.size(); ++col) {
        CountPolynomial poly;
        poly.coeffs.assign(table.d + 1, 0);
        for (int k = 0; k <= table.d; ++k) {
            BigInt chi_k = 0;
            for (size_t row = 0; row < chars.partitions.size(); ++row)
                chi_k += table.mult[k][row] * chars.values[row][col];
            poly.coeffs[table.d - k] = (k % 2 == 0) ? chi_k : -chi_k;
        }
        polys[chars.partitions[col]] = std::move(poly);
    }
    return polys;
}

std::vector<BigInt> unordered_poincare(const CohomologyTable& table) {
    Partition trivial;
    trivial.parts = {table.m};
    size_t idx = 0;
    for (; idx < table.partitions.size(); ++idx)
        if (table.partitions[idx] == trivial) break;
    std::vector<BigInt> out;
    out.reserve(table.d + 1);
    for (int k = 0; k <= table.d; ++k) out.push_back(table.mult[k][idx]);
    return out;
}

std::string CohomologyTable::to_csv() const {
    std::ostringstream out;
    out << "degree";
    for (const auto& p : partitions) out << "," << format_exponent(p);
    out << "\n";
    for (int k = 0; k <= d; ++k) {
        out << "H^" << k;
        for (const auto& v : mult[k]) out << "," << v.str();
        out << "\n";
    }
    return out.str();
}

std::string CohomologyTable::to_json() const {
    std::ostringstream out;
    out << "{\n  \"m\": " << m << ",\n  \"dimension\": " << d << ",\n  \"partitions\": [";
    for (size_t i = 0; i < partitions.size(); ++i) {
        if (i) out << ", ";
        out << "\"" << format_dotted(partitions[i]) << "\"";
    }
    out << "],\n  \"multiplicities\": {\n";
    for (int k = 0; k <= d; ++k) {
        out << "    \"H^" << k << "\": [";
        for (size_t i = 0; i < mult[k].size(); ++i) {
            if (i) out << ", ";
            out << mult[k][i].str();
        }
        out << "]" << (k < d ? "," : "") << "\n";
    }
    out << "  }\n}\n";
    return out.str();
}

}  // namespace glp
