#include <doctest.h>

#include <vector>

#include "glpcount/finite_field.hpp"
#include "glpcount/zech_field.hpp"

using namespace glp;

namespace {

// Field isomorphism from the canonical-modulus representation into the
// table representation: find a root of the canonical modulus among the table
// elements and extend linearly. Exists and is unique up to Galois; any root
// works for comparing field-theoretic predicates.
struct Embedding {
    const ExtensionField& generic;
    const ZechField& table;
    ZechField::Elem root;

    static Embedding find(const ExtensionField& generic, const ZechField& table) {
        for (std::uint64_t cand = 0; cand <= table.q1; ++cand) {
            ZechField::Elem x = (cand == table.q1) ? table.zero() : static_cast<ZechField::Elem>(cand);
            ZechField::Elem acc = table.zero();
            ZechField::Elem power = table.one();
            for (size_t i = 0; i < generic.modulus.size(); ++i) {
                ZechField::Elem term = table.mul(table.from_residue(generic.modulus[i]), power);
                acc = table.add(acc, term);
                power = table.mul(power, x);
            }
            if (table.is_zero(acc)) return Embedding{generic, table, x};
        }
        throw std::logic_error("no root of the canonical modulus found");
    }

    ZechField::Elem operator()(const FieldElement& a) const {
        ZechField::Elem acc = table.zero();
        ZechField::Elem power = table.one();
        for (auto c : a.coeffs) {
            acc = table.add(acc, table.mul(table.from_residue(c), power));
            power = table.mul(power, root);
        }
        return acc;
    }
};

}  // namespace

TEST_CASE("zech tables give a field isomorphic to the canonical one") {
    for (auto [p, c] : {std::pair<int, int>{3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
        auto generic = construct_field(p, c);
        auto table = zech_field(p, c);
        Embedding phi = Embedding::find(*generic, *table);
        auto elems = subfield_elements(*generic, c);
        // injectivity
        std::vector<bool> seen(table->q, false);
        for (const auto& a : elems) {
            auto img = phi(a);
            std::uint32_t slot = table->is_zero(img) ? table->q1 : img;
            CHECK(!seen[slot]);
            seen[slot] = true;
        }
        // homomorphism, exhaustively
        for (const auto& a : elems)
            for (const auto& b : elems) {
                CHECK(phi(add(a, b)) == table->add(phi(a), phi(b)));
                CHECK(phi(mul(a, b)) == table->mul(phi(a), phi(b)));
            }
        for (const auto& a : elems) {
            CHECK(phi(neg(a)) == table->neg(phi(a)));
            CHECK(phi(frobenius(a)) == table->frob(phi(a)));
            if (!a.is_zero()) CHECK(phi(inv(a)) == table->inv(phi(a)));
        }
    }
}

TEST_CASE("zech subfield stride picks out the subfield") {
    auto table = zech_field(3, 6);
    std::uint64_t stride = table->subfield_stride(2);
    CHECK(stride == (table->q1) / 8);
    // the 8 nonzero strided elements plus zero are closed under frob^2
    for (std::uint64_t k = 0; k < 8; ++k) {
        ZechField::Elem e = static_cast<ZechField::Elem>(k * stride);
        CHECK(table->frob_pow(e, 2) == e);
    }
    // and nothing else is fixed by frob^2
    int fixed = 0;
    for (std::uint32_t e = 0; e < table->q1; ++e)
        if (table->frob_pow(e, 2) == e) ++fixed;
    CHECK(fixed == 8);
}

TEST_CASE("zech field rejects oversized tables") {
    CHECK_THROWS_AS(ZechField(3, 16), std::invalid_argument);
}

TEST_CASE("prime-field table arithmetic matches integer arithmetic") {
    auto table = zech_field(7, 1);
    for (std::int64_t a = 0; a < 7; ++a)
        for (std::int64_t b = 0; b < 7; ++b) {
            auto ea = table->from_residue(a), eb = table->from_residue(b);
            CHECK(table->add(ea, eb) == table->from_residue((a + b) % 7));
            CHECK(table->mul(ea, eb) == table->from_residue((a * b) % 7));
            CHECK(table->sub(ea, eb) == table->from_residue(((a - b) % 7 + 7) % 7));
        }
}
