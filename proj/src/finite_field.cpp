#include "glpcount/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace glp {

namespace {

using Poly = std::vector<std::int64_t>;  // poly[i] = coeff of x^i, entries in [0,p)

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

// Remainder of a modulo monic f.
Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
    trim(a);
    int df = deg(f);
    while (deg(a) >= df) {
        std::int64_t lead = a.back();
        int shift = deg(a) - df;
        if (lead != 0) {
            for (int i = 0; i <= df; ++i) {
                std::int64_t& c = a[i + shift];
                c = (c - lead * f[i]) % p;
                if (c < 0) c += p;
            }
        }
        trim(a);
    }
    return a;
}

Poly poly_powmod_x(const BigInt& e, const Poly& f, std::int64_t p) {
    // x^e mod f by square-and-multiply over the bits of e.
    Poly result{1};
    Poly base{0, 1};
    base = poly_mod(base, f, p);
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) result = poly_mod(poly_mul(result, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        k >>= 1;
    }
    return result;
}

Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] = (r[i] - b[i]) % p;
        if (r[i] < 0) r[i] += p;
    }
    trim(r);
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        std::int64_t lead = b.back();
        if (lead != 1) {
            // invert lead mod p
            std::int64_t inv_lead = 1, base = lead, e = p - 2;
            while (e > 0) {
                if (e & 1) inv_lead = (inv_lead * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            for (auto& c : b) c = (c * inv_lead) % p;
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

BigInt ipow(std::int64_t base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field != b.field)
        throw std::invalid_argument("field mismatch between operands");
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p) {
    Poly f = poly;
    trim(f);
    int c = deg(f);
    if (c < 1) return false;
    if (f.back() != 1) throw std::invalid_argument("is_irreducible expects a monic polynomial");
    if (c == 1) return true;
    // x^{p^c} == x mod f
    Poly xpc = poly_powmod_x(ipow(p, c), f, p);
    Poly x{0, 1};
    if (poly_mod(x, f, p) != xpc) return false;
    for (std::int64_t r : prime_factors(c)) {
        Poly g = poly_powmod_x(ipow(p, c / static_cast<int>(r)), f, p);
        // g - x
        Poly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] - 1) % p;
        if (diff[1] < 0) diff[1] += p;
        trim(diff);
        Poly d = poly_gcd(f, diff, p);
        if (deg(d) != 0) return false;
    }
    return true;
}

ExtensionField::ExtensionField(std::int64_t p_, int degree_, std::vector<std::int64_t> modulus_)
    : p(p_), degree(degree_), modulus(std::move(modulus_)) {}

BigInt ExtensionField::size() const { return ipow(p, degree); }

std::shared_ptr<const ExtensionField> construct_field(std::int64_t p, int c) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("characteristic must be an odd prime");
    if (c < 1 || c > 16) throw std::invalid_argument("extension degree must be in [1,16]");

    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const ExtensionField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, c);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // Scan monic candidates x^c + a_{c-1} x^{c-1} + ... + a_0 in lexicographic
    // order of (a_0, ..., a_{c-1}); the first irreducible one is canonical.
    std::vector<std::int64_t> a(c, 0);
    for (;;) {
        Poly f(a.begin(), a.end());
        f.push_back(1);
        if (is_irreducible(f, p)) {
            auto field = std::make_shared<const ExtensionField>(p, c, std::move(f));
            cache.emplace(key, field);
            return field;
        }
        // next tuple in lex order: a_{c-1} varies fastest
        int i = c - 1;
        while (i >= 0 && a[i] == p - 1) a[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++a[i];
    }
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

FieldElement make_element(const ExtensionField& field, std::vector<std::int64_t> coeffs) {
    if (static_cast<int>(coeffs.size()) > field.degree)
        throw std::invalid_argument("coefficient vector longer than field degree");
    coeffs.resize(field.degree, 0);
    for (auto& c : coeffs) {
        c %= field.p;
        if (c < 0) c += field.p;
    }
    return FieldElement{std::move(coeffs), &field};
}

FieldElement zero(const ExtensionField& field) {
    return FieldElement{std::vector<std::int64_t>(field.degree, 0), &field};
}

FieldElement one(const ExtensionField& field) { return from_residue(field, 1); }

FieldElement from_residue(const ExtensionField& field, std::int64_t r) {
    std::vector<std::int64_t> c(field.degree, 0);
    r %= field.p;
    if (r < 0) r += field.p;
    c[0] = r;
    return FieldElement{std::move(c), &field};
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] += b.coeffs[i];
        if (r.coeffs[i] >= a.field->p) r.coeffs[i] -= a.field->p;
    }
    return r;
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] -= b.coeffs[i];
        if (r.coeffs[i] < 0) r.coeffs[i] += a.field->p;
    }
    return r;
}

FieldElement neg(const FieldElement& a) {
    FieldElement r = a;
    for (auto& c : r.coeffs)
        if (c != 0) c = a.field->p - c;
    return r;
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const auto& field = *a.field;
    Poly prod = poly_mul(a.coeffs, b.coeffs, field.p);
    Poly red = poly_mod(std::move(prod), field.modulus, field.p);
    red.resize(field.degree, 0);
    return FieldElement{std::move(red), &field};
}

FieldElement inv(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("inversion of zero");
    const auto& field = *a.field;
    // extended Euclid on (modulus, a)
    Poly r0 = field.modulus, r1 = a.coeffs;
    trim(r1);
    Poly t0{}, t1{1};
    std::int64_t p = field.p;
    auto mod_inv = [p](std::int64_t x) {
        std::int64_t r = 1, b = x, e = p - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    while (!r1.empty() && deg(r1) >= 0) {
        if (deg(r1) == 0) break;
        // divide r0 by r1
        Poly q(deg(r0) - deg(r1) + 1, 0);
        Poly rem = r0;
        std::int64_t lead_inv = mod_inv(r1.back());
        while (deg(rem) >= deg(r1)) {
            std::int64_t coef = (rem.back() * lead_inv) % p;
            int shift = deg(rem) - deg(r1);
            q[shift] = coef;
            for (int i = 0; i <= deg(r1); ++i) {
                std::int64_t& c = rem[i + shift];
                c = (c - coef * r1[i]) % p;
                if (c < 0) c += p;
            }
            trim(rem);
        }
        Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw std::domain_error("element not invertible");
    // r1 is a nonzero constant: scale t1 by its inverse
    std::int64_t scale = mod_inv(r1[0]);
    for (auto& c : t1) c = (c * scale) % p;
    Poly res = poly_mod(std::move(t1), field.modulus, p);
    res.resize(field.degree, 0);
    return FieldElement{std::move(res), &field};
}

FieldElement pow(const FieldElement& a, const BigInt& e) {
    if (e < 0) return pow(inv(a), -e);
    FieldElement result = one(*a.field);
    FieldElement base = a;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

FieldElement frobenius(const FieldElement& a) { return pow(a, BigInt(a.field->p)); }

bool in_subfield(const FieldElement& a, int d) {
    BigInt e = 1;
    for (int i = 0; i < d; ++i) e *= a.field->p;
    return pow(a, e) == a;
}

std::vector<FieldElement> subfield_elements(const ExtensionField& field, int d) {
    if (d < 1 || field.degree % d != 0)
        throw std::invalid_argument("subfield degree must divide the field degree");
    BigInt count = ipow(field.p, d);
    if (count > (1 << 22))
        throw std::invalid_argument("subfield too large to enumerate");

    // The subfield is the kernel of frobenius^d - id, an F_p-linear map.
    int c = field.degree;
    std::int64_t p = field.p;
    std::vector<std::vector<std::int64_t>> m(c, std::vector<std::int64_t>(c, 0));
    for (int j = 0; j < c; ++j) {
        std::vector<std::int64_t> basis(c, 0);
        basis[j] = 1;
        FieldElement e = make_element(field, basis);
        FieldElement img = e;
        for (int t = 0; t < d; ++t) img = frobenius(img);
        for (int i = 0; i < c; ++i) {
            m[i][j] = (img.coeffs[i] - (i == j ? 1 : 0)) % p;
            if (m[i][j] < 0) m[i][j] += p;
        }
    }
    // nullspace via Gaussian elimination mod p
    auto mod_inv = [p](std::int64_t x) {
        std::int64_t r = 1, b = x, e = p - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < c && row < c; ++col) {
        int sel = -1;
        for (int i = row; i < c; ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        std::int64_t piv_inv = mod_inv(m[row][col]);
        for (int j = 0; j < c; ++j) m[row][j] = (m[row][j] * piv_inv) % p;
        for (int i = 0; i < c; ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::int64_t f = m[i][col];
            for (int j = 0; j < c; ++j) {
                m[i][j] = (m[i][j] - f * m[row][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(c, false);
    for (int pc : pivot_col) is_pivot[pc] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (int col = 0; col < c; ++col) {
        if (is_pivot[col]) continue;
        std::vector<std::int64_t> v(c, 0);
        v[col] = 1;
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2)
            v[pivot_col[r2]] = (p - m[r2][col]) % p;
        basis.push_back(std::move(v));
    }
    if (static_cast<int>(basis.size()) != d)
        throw std::logic_error("subfield kernel has unexpected dimension");

    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(1) << d);  // grows as needed
    std::vector<std::int64_t> digits(d, 0);
    for (;;) {
        std::vector<std::int64_t> v(c, 0);
        for (int i = 0; i < d; ++i) {
            if (digits[i] == 0) continue;
            for (int j = 0; j < c; ++j)
                v[j] = (v[j] + digits[i] * basis[i][j]) % p;
        }
        out.push_back(make_element(field, std::move(v)));
        int i = d - 1;
        while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
    }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.coeffs < b.coeffs; });
    return out;
}

std::string to_string(const FieldElement& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coeffs[i]);
    }
    return s + "]";
}

}  // namespace glp
