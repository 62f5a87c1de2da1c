#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// F_{p^c} in polynomial-basis representation, p an odd prime. The modulus is
/// the lexicographically smallest monic irreducible of degree c over F_p
/// (coefficients compared from the constant term upward), so repeated
/// construction is reproducible. Immutable after construction.
class ExtensionField {
public:
    std::int64_t p;
    int degree;
    std::vector<std::int64_t> modulus;  // size degree+1, monic, modulus[i] = coeff of x^i

    BigInt size() const;  // p^degree

    ExtensionField(std::int64_t p, int degree, std::vector<std::int64_t> modulus);
};

/// Element of an ExtensionField: coefficient vector of length equal to the
/// field degree, entries in [0, p).
struct FieldElement {
    std::vector<std::int64_t> coeffs;
    const ExtensionField* field = nullptr;

    bool is_zero() const;
    bool operator==(const FieldElement&) const = default;
};

/// Returns the field F_{p^c} with the canonical modulus. Results are cached;
/// the returned pointer stays valid for the life of the process.
std::shared_ptr<const ExtensionField> construct_field(std::int64_t p, int c);

FieldElement make_element(const ExtensionField& field, std::vector<std::int64_t> coeffs);
FieldElement zero(const ExtensionField& field);
FieldElement one(const ExtensionField& field);
/// Embedding of the prime-field residue r.
FieldElement from_residue(const ExtensionField& field, std::int64_t r);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, const BigInt& e);

/// Geometric Frobenius x -> x^p.
FieldElement frobenius(const FieldElement& a);

/// The image of the unique subfield of size p^d (d must divide the field
/// degree), as a deterministically ordered list of p^d elements.
std::vector<FieldElement> subfield_elements(const ExtensionField& field, int d);

/// True iff a lies in the subfield of size p^d, i.e. a^{p^d} = a.
bool in_subfield(const FieldElement& a, int d);

/// Deterministic irreducibility test over F_p: f is irreducible iff
/// x^{p^c} = x (mod f) and gcd(x^{p^{c/r}} - x, f) = 1 for every prime r | c.
bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p);

bool is_prime(std::int64_t n);

std::string to_string(const FieldElement& a);

}  // namespace glp
