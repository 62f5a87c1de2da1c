#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace glp {

/// Table-driven arithmetic for F_{p^n}, used by the enumeration kernels.
///
/// Elements are stored as discrete logarithms with respect to a fixed
/// generator: value k in [0, q-2] means generator^k, and the sentinel q-1
/// means zero. Multiplication is exponent addition, addition goes through the
/// Zech logarithm table log(1 + generator^d), and Frobenius is exponent
/// multiplication by p. The modulus behind the table is the lexicographically
/// smallest monic primitive polynomial, which may differ from the canonical
/// ExtensionField modulus; all counting results are independent of the basis.
class ZechField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint64_t max_table_size = std::uint64_t(1) << 24;

    ZechField(std::int64_t p, int degree);

    std::int64_t p;
    int degree;
    std::uint64_t q;        // p^degree
    std::uint32_t q1;       // q - 1, also the zero sentinel
    std::vector<std::int64_t> modulus;  // primitive modulus used for the tables

    Elem zero() const { return q1; }
    Elem one() const { return 0; }
    bool is_zero(Elem a) const { return a == q1; }

    Elem mul(Elem a, Elem b) const {
        if (a == q1 || b == q1) return q1;
        std::uint32_t s = a + b;
        if (s >= q1) s -= q1;
        return s;
    }

    Elem add(Elem a, Elem b) const {
        if (a == q1) return b;
        if (b == q1) return a;
        std::uint32_t d = b >= a ? b - a : b + q1 - a;
        std::uint32_t z = zech_[d];
        if (z == q1) return q1;
        std::uint32_t s = a + z;
        if (s >= q1) s -= q1;
        return s;
    }

    Elem neg(Elem a) const {
        if (a == q1) return a;
        std::uint32_t s = a + minus_one_;
        if (s >= q1) s -= q1;
        return s;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem inv(Elem a) const;

    /// x -> x^p on exponents.
    Elem frob(Elem a) const {
        if (a == q1) return a;
        return static_cast<Elem>((std::uint64_t(a) * std::uint64_t(p)) % q1);
    }

    /// x -> x^{p^d}.
    Elem frob_pow(Elem a, int d) const {
        if (a == q1) return a;
        return static_cast<Elem>((std::uint64_t(a) * frob_multiplier(d)) % q1);
    }

    std::uint64_t frob_multiplier(int d) const { return frob_mult_[d]; }

    /// Embedding of the prime-field residue r (0 <= r < p).
    Elem from_residue(std::int64_t r) const { return prime_log_[static_cast<size_t>(r)]; }

    /// Exponent stride of the multiplicative group of the subfield of size
    /// p^d: its nonzero elements are exactly the exponents k*stride.
    std::uint64_t subfield_stride(int d) const;

    /// Polynomial-basis packing of generator^k (small fields only, for tests).
    bool has_conversion() const { return !exp_packed_.empty(); }
    std::uint32_t packed_of(Elem a) const;   // digits base p, constant term least significant
    Elem elem_of_packed(std::uint32_t v) const;

private:
    std::vector<std::uint32_t> zech_;
    std::vector<Elem> prime_log_;
    std::vector<std::uint64_t> frob_mult_;  // p^d mod q1, d in [0, degree]
    std::uint32_t minus_one_;
    std::vector<std::uint32_t> exp_packed_;  // kept when q is small
    std::vector<Elem> log_packed_;
};

/// Cached shared instance per (p, degree).
std::shared_ptr<const ZechField> zech_field(std::int64_t p, int degree);

}  // namespace glp
