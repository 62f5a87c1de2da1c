#include "glpcount/zech_field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "glpcount/finite_field.hpp"

namespace glp {

namespace {

std::vector<std::int64_t> prime_factors(std::uint64_t n) {
    std::vector<std::int64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(static_cast<std::int64_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(static_cast<std::int64_t>(n));
    return fs;
}

// Dense polynomial arithmetic mod a monic f over F_p, digit vectors.
using Digits = std::vector<std::int64_t>;

Digits polymulmod(const Digits& a, const Digits& b, const Digits& f, std::int64_t p) {
    int df = static_cast<int>(f.size()) - 1;
    Digits c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    for (int i = static_cast<int>(c.size()) - 1; i >= df; --i) {
        std::int64_t lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (int j = 0; j < df; ++j) {
            std::int64_t& x = c[i - df + j];
            x = (x - lead * f[j]) % p;
            if (x < 0) x += p;
        }
    }
    c.resize(df);
    return c;
}

bool is_one(const Digits& d) {
    if (d.empty() || d[0] != 1) return false;
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] != 0) return false;
    return true;
}

// Order of x in (F_p[x]/f)^* equals q-1, given f irreducible.
bool x_is_primitive(const Digits& f, std::int64_t p, std::uint64_t q1) {
    for (std::int64_t r : prime_factors(q1)) {
        std::uint64_t e = q1 / static_cast<std::uint64_t>(r);
        Digits result{1};
        Digits base{0, 1};
        if (f.size() == 2) {  // degree 1: reduce x once
            base = polymulmod(Digits{1}, Digits{0, 1}, f, p);
        }
        std::uint64_t k = e;
        while (k > 0) {
            if (k & 1) result = polymulmod(result, base, f, p);
            base = polymulmod(base, base, f, p);
            k >>= 1;
        }
        if (is_one(result)) return false;
    }
    return true;
}

}  // namespace

ZechField::ZechField(std::int64_t p_, int degree_) : p(p_), degree(degree_) {
    if (!is_prime(p) || p % 2 == 0) throw std::invalid_argument("characteristic must be an odd prime");
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    std::uint64_t size = 1;
    for (int i = 0; i < degree; ++i) {
        size *= static_cast<std::uint64_t>(p);
        if (size > max_table_size) throw std::invalid_argument("field too large for table arithmetic");
    }
    q = size;
    q1 = static_cast<std::uint32_t>(q - 1);

    // Lex-least monic primitive polynomial (compared from the constant term
    // up). A zero constant term would make x non-invertible, so skip it.
    std::vector<std::int64_t> a(degree, 0);
    bool found = false;
    while (!found) {
        Digits f(a.begin(), a.end());
        f.push_back(1);
        if (f[0] != 0 && is_irreducible(f, p) && x_is_primitive(f, p, q1)) {
            modulus = std::move(f);
            found = true;
            break;
        }
        int i = degree - 1;
        while (i >= 0 && a[i] == p - 1) a[i--] = 0;
        if (i < 0) throw std::logic_error("no primitive polynomial found");
        ++a[i];
    }

    // exp table in packed digit form: packed(sum d_i x^i) = sum d_i p^i
    std::vector<std::uint32_t> exp_packed(q1);
    std::vector<Elem> log_packed(q, q1);
    {
        Digits cur{1};
        cur.resize(degree, 0);
        std::uint64_t top = 1;
        for (int i = 0; i < degree - 1; ++i) top *= static_cast<std::uint64_t>(p);
        for (std::uint32_t k = 0; k < q1; ++k) {
            std::uint32_t packed = 0;
            std::uint64_t mult = 1;
            for (int i = 0; i < degree; ++i) {
                packed += static_cast<std::uint32_t>(cur[i] * static_cast<std::int64_t>(mult));
                mult *= static_cast<std::uint64_t>(p);
            }
            exp_packed[k] = packed;
            log_packed[packed] = k;
            // multiply by x and reduce
            std::int64_t lead = cur[degree - 1];
            for (int i = degree - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (lead != 0) {
                for (int i = 0; i < degree; ++i) {
                    cur[i] = (cur[i] - lead * modulus[i]) % p;
                    if (cur[i] < 0) cur[i] += p;
                }
            }
        }
    }

    zech_.assign(q, q1);
    for (std::uint32_t k = 0; k < q1; ++k) {
        std::uint32_t packed = exp_packed[k];
        // add one to the constant digit mod p
        std::uint32_t d0 = packed % static_cast<std::uint32_t>(p);
        std::uint32_t bumped = (d0 == static_cast<std::uint32_t>(p - 1))
                                   ? packed - static_cast<std::uint32_t>(p - 1)
                                   : packed + 1;
        zech_[k] = (bumped == 0) ? q1 : log_packed[bumped];
    }
    zech_.resize(q1 + 1);  // index domain [0, q1); keep one slot of slack
    zech_[q1] = q1;

    prime_log_.assign(static_cast<size_t>(p), q1);
    for (std::int64_t r = 1; r < p; ++r) prime_log_[static_cast<size_t>(r)] = log_packed[static_cast<size_t>(r)];

    minus_one_ = q1 / 2;  // -1 = generator^((q-1)/2) in odd characteristic

    frob_mult_.resize(degree + 1);
    frob_mult_[0] = 1;
    for (int d = 1; d <= degree; ++d)
        frob_mult_[d] = (frob_mult_[d - 1] * static_cast<std::uint64_t>(p)) % q1;

    if (q <= (std::uint64_t(1) << 16)) {
        exp_packed_ = std::move(exp_packed);
        log_packed_ = std::move(log_packed);
    }
}

ZechField::Elem ZechField::inv(Elem a) const {
    if (a == q1) throw std::domain_error("inversion of zero");
    return a == 0 ? 0 : q1 - a;
}

std::uint64_t ZechField::subfield_stride(int d) const {
    if (d < 1 || degree % d != 0) throw std::invalid_argument("subfield degree must divide field degree");
    std::uint64_t sub = 1;
    for (int i = 0; i < d; ++i) sub *= static_cast<std::uint64_t>(p);
    return q1 / (sub - 1);
}

std::uint32_t ZechField::packed_of(Elem a) const {
    if (!has_conversion()) throw std::logic_error("conversion tables not kept for this field size");
    if (a == q1) return 0;
    return exp_packed_[a];
}

ZechField::Elem ZechField::elem_of_packed(std::uint32_t v) const {
    if (!has_conversion()) throw std::logic_error("conversion tables not kept for this field size");
    if (v == 0) return q1;
    return log_packed_[v];
}

std::shared_ptr<const ZechField> zech_field(std::int64_t p, int degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const ZechField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, degree);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto field = std::make_shared<const ZechField>(p, degree);
    cache.emplace(key, field);
    return field;
}

}  // namespace glp
