#include "glpcount/verification.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "glpcount/polynomials.hpp"
#include "glpcount/projective_plane.hpp"
#include "glpcount/purity_pipeline.hpp"
#include "glpcount/twisted_enumeration.hpp"

namespace glp::verify {

namespace {

constexpr std::int64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19};
const char* kInterpolatedRows[] = {"1x7", "2.1x5", "3.1x4"};

// Counts shared between criteria within one process. Thread count is part of
// the key only through `distinct`, which the determinism criterion uses to
// force fresh runs.
struct CountMemo {
    std::mutex mutex;
    std::map<std::string, CountRecord> records;
};

CountMemo& memo() {
    static CountMemo m;
    return m;
}

CountRecord counted(int m, const CycleType& lambda, std::int64_t p,
                    const GeneralityCondition& cond, bool frame, int threads,
                    bool bypass_memo = false) {
    std::string key = std::to_string(m) + "|" + format_dotted(lambda) + "|" + std::to_string(p) +
                      "|" + cond.name() + "|" + (frame ? "frame" : "twisted");
    if (!bypass_memo) {
        std::lock_guard<std::mutex> lock(memo().mutex);
        if (auto it = memo().records.find(key); it != memo().records.end()) return it->second;
    }
    CountOptions options;
    options.threads = threads;
    CountRecord record = frame ? count_frame_normalized(m, lambda, p, cond, options)
                               : count_twisted(m, lambda, p, cond, options);
    if (!bypass_memo) {
        std::lock_guard<std::mutex> lock(memo().mutex);
        memo().records.emplace(std::move(key), record);
    }
    return record;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& message) {
        if (!condition) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << message;
        }
    }
};

CriterionResult finish(int id, const std::string& name, Check& check,
                       const std::string& pass_note = "") {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.passed = check.ok;
    r.detail = check.ok ? pass_note : check.detail.str();
    return r;
}

// ---- criterion bodies -----------------------------------------------------

CriterionResult criterion_twisted_counts_q3(int threads) {
    Check check;
    auto glp7 = GeneralityCondition::glp(7);
    for (const auto& [lambda, poly] : builtin_table1()) {
        BigInt expected = evaluate(poly, 3);
        CountRecord record = counted(7, lambda, 3, glp7, false, threads);
        check.expect(record.quotient_count == expected,
                     "class " + format_dotted(lambda) + ": got " + record.quotient_count.str() +
                         ", expected " + expected.str());
    }
    return finish(1, "twisted counts at q=3, all 15 classes", check,
                  "all 15 quotient counts match the count polynomials at q=3");
}

CriterionResult criterion_frame_interpolation(int threads) {
    Check check;
    auto glp7 = GeneralityCondition::glp(7);
    for (const char* row : kInterpolatedRows) {
        CycleType lambda = parse_cycle_type(row);
        std::vector<std::pair<std::int64_t, BigInt>> samples;
        for (std::int64_t p : kPrimes) {
            CountRecord record = counted(7, lambda, p, glp7, true, threads);
            samples.emplace_back(p, record.quotient_count);
        }
        try {
            CountPolynomial fit = interpolate(samples, 6);
            const CountPolynomial& expected = builtin_table1().at(lambda);
            check.expect(fit == expected, "row " + format_dotted(lambda) + ": interpolated " +
                                              format_polynomial(fit) + ", expected " +
                                              format_polynomial(expected));
        } catch (const InterpolationError& e) {
            check.expect(false, "row " + format_dotted(lambda) + ": " + e.what());
        }
    }
    return finish(2, "frame-normalized interpolation at primes 3..19", check,
                  "rows 1^7, 21^5, 31^4 reproduced coefficient-for-coefficient");
}

CriterionResult criterion_lemma_reproduction(int threads) {
    Check check;
    auto glp7 = GeneralityCondition::glp(7);
    CountRecord record = counted(7, parse_cycle_type("7"), 3, glp7, false, threads);
    check.expect(pgl_order(3) == 5616, "pgl_order(3) != 5616");
    check.expect(record.raw_fixed_count == 4756752,
                 "raw count " + record.raw_fixed_count.str() + " != 4756752");
    check.expect(record.raw_fixed_count % pgl_order(3) == 0, "raw count not divisible by 5616");
    check.expect(record.quotient_count == 847,
                 "quotient " + record.quotient_count.str() + " != 847");
    return finish(3, "class [7] at q=3: raw 4756752 = 847 x 5616", check,
                  "raw fixed count 4756752 = 847 x 5616 exactly");
}

CriterionResult criterion_table2(int) {
    Check check;
    CohomologyResult result = cohomology_table(builtin_table1(), 7, 6);
    check.expect(result.ok(), "decomposition failed");
    if (result.ok()) {
        const CohomologyTable& table = *result.table;
        const auto& expected = reference_table2();
        for (int k = 0; k <= 6; ++k)
            for (int i = 0; i < 15; ++i)
                check.expect(table.mult[k][i] == expected[k][i],
                             "H^" + std::to_string(k) + ", column " +
                                 format_exponent(table.partitions[i]) + ": got " +
                                 table.mult[k][i].str() + ", expected " +
                                 std::to_string(expected[k][i]));
        // H^0 is the trivial representation
        for (int i = 0; i < 15; ++i)
            check.expect(table.mult[0][i] == (table.partitions[i].parts == std::vector<int>{7} ? 1 : 0),
                         "H^0 is not the trivial representation");
        // H^1 = (5,2) + (4,3)
        for (int i = 0; i < 15; ++i) {
            bool expected_one = table.partitions[i].parts == std::vector<int>{5, 2} ||
                                table.partitions[i].parts == std::vector<int>{4, 3};
            check.expect(table.mult[1][i] == (expected_one ? 1 : 0), "H^1 != (5,2) + (4,3)");
        }
        // per-degree dimension identities against the identity-class polynomial
        const CountPolynomial& identity_row = builtin_table1().at(parse_cycle_type("1x7"));
        for (int k = 0; k <= 6; ++k) {
            BigInt dim = 0;
            for (int i = 0; i < 15; ++i)
                dim += table.mult[k][i] * BigInt(hook_dimension(table.partitions[i]));
            BigInt coeff = identity_row.coefficient(6 - k);
            BigInt expected_dim = (k % 2 == 0) ? coeff : -coeff;
            check.expect(dim == expected_dim, "dim H^" + std::to_string(k) + " = " + dim.str() +
                                                  " != " + expected_dim.str());
        }
    }
    return finish(4, "cohomology table reproduction (105 multiplicities)", check,
                  "all 105 multiplicities, H^0/H^1 structure, and 7 dimension identities hold");
}

CriterionResult criterion_round_trip(int) {
    Check check;
    CohomologyResult result = cohomology_table(builtin_table1(), 7, 6);
    check.expect(result.ok(), "decomposition failed");
    if (result.ok()) {
        auto rebuilt = round_trip(*result.table);
        for (const auto& [lambda, poly] : builtin_table1()) {
            auto it = rebuilt.find(lambda);
            check.expect(it != rebuilt.end() && it->second == poly,
                         "round trip differs on class " + format_dotted(lambda));
        }
        // Euler characteristic at the identity
        BigInt euler = 0;
        for (int k = 0; k <= 6; ++k) {
            BigInt dim = 0;
            for (int i = 0; i < 15; ++i)
                dim += result.table->mult[k][i] * BigInt(hook_dimension(result.table->partitions[i]));
            euler += (k % 2 == 0) ? dim : -dim;
        }
        check.expect(euler == 1272, "alternating dimension sum " + euler.str() + " != 1272");
    }
    return finish(5, "round trip: cohomology table back to count polynomials", check,
                  "all 15 polynomials rebuilt exactly; Euler characteristic 1272");
}

CriterionResult criterion_character_table(int) {
    Check check;
    CharacterTable table = build_character_table(7);
    size_t n = table.partitions.size();
    check.expect(n == 15, "expected 15 classes");
    std::uint64_t size_sum = std::accumulate(table.class_sizes.begin(), table.class_sizes.end(),
                                             std::uint64_t{0});
    check.expect(size_sum == 5040, "class sizes sum to " + std::to_string(size_sum));
    // row orthogonality
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            BigInt acc = 0;
            for (size_t c = 0; c < n; ++c)
                acc += BigInt(table.class_sizes[c]) * table.values[a][c] * table.values[b][c];
            BigInt expected = (a == b) ? BigInt(5040) : BigInt(0);
            check.expect(acc == expected, "row orthogonality fails at (" +
                                              format_exponent(table.partitions[a]) + "," +
                                              format_exponent(table.partitions[b]) + ")");
        }
    // column orthogonality
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            BigInt acc = 0;
            for (size_t r = 0; r < n; ++r) acc += BigInt(table.values[r][a]) * table.values[r][b];
            BigInt expected = (a == b) ? BigInt(5040 / table.class_sizes[a]) : BigInt(0);
            check.expect(acc == expected, "column orthogonality fails at (" +
                                              format_exponent(table.partitions[a]) + "," +
                                              format_exponent(table.partitions[b]) + ")");
        }
    // identity column = hook length dimensions
    int id_col = table.index_of(Partition(std::vector<int>(7, 1)));
    for (size_t r = 0; r < n; ++r)
        check.expect(table.values[r][id_col] ==
                         static_cast<std::int64_t>(hook_dimension(table.partitions[r])),
                     "identity column differs from hook dimension at " +
                         format_exponent(table.partitions[r]));
    // brute-force oracle for small m
    for (int m = 2; m <= 4; ++m) {
        CharacterTable mn = build_character_table(m);
        CharacterTable oracle = brute_force_character_table(m);
        check.expect(mn.values == oracle.values,
                     "m=" + std::to_string(m) + " table differs from the brute-force oracle");
    }
    return finish(6, "character table integrity", check,
                  "orthogonality, hook dimensions, class sizes, and m<=4 oracle all agree");
}

CriterionResult criterion_burnside(int threads) {
    Check check;
    // q=7 from the embedded polynomials
    {
        BigInt weighted = 0;
        for (const auto& [lambda, poly] : builtin_table1())
            weighted += BigInt(class_size(lambda)) * evaluate(poly, 7);
        check.expect(weighted % 5040 == 0, "weighted sum at q=7 not divisible by 7!");
        BigInt unordered = weighted / 5040;
        check.expect(unordered == 117777,
                     "unordered count at q=7 is " + unordered.str() + ", expected 117777");
    }
    // q=3 from the engine
    {
        auto glp7 = GeneralityCondition::glp(7);
        BigInt weighted = 0;
        for (const auto& lambda : partitions_of(7)) {
            CountRecord record = counted(7, lambda, 3, glp7, false, threads);
            weighted += BigInt(class_size(lambda)) * record.quotient_count;
        }
        check.expect(weighted % 5040 == 0, "weighted engine sum at q=3 not divisible by 7!");
        BigInt unordered = weighted / 5040;
        check.expect(unordered == 749,
                     "unordered count at q=3 is " + unordered.str() + ", expected 749");
        check.expect(weighted >= 0, "negative unordered count");
    }
    return finish(7, "Burnside integrality of the class-averaged counts", check,
                  "unordered configuration counts: 749 at q=3 (engine), 117777 at q=7 (table)");
}

// Exhaustive oracle: is there a nonzero cubic over F_3 through the 8 points
// with a singular point at index i? Scans all 3^10 coefficient vectors.
bool cubic_oracle_f3(const std::vector<ProjectivePoint>& points, int i);

CriterionResult criterion_eight_points(int threads) {
    Check check;
    auto gp8 = GeneralityCondition::gp8();
    auto glp8 = GeneralityCondition::glp(8);

    // Vanishing at q=3: five rational points always contain a collinear
    // triple, so any class pinning five or more rational points counts zero.
    for (const char* cls : {"1x8", "2.1x6", "3.1x5"}) {
        CountRecord record = counted(8, parse_cycle_type(cls), 3, gp8, true, threads);
        check.expect(record.quotient_count == 0,
                     "gp8 class " + std::string(cls) + " at q=3: got " +
                         record.quotient_count.str() + ", expected 0");
        check.expect(record.raw_fixed_count % pgl_order(3) == 0, "divisibility fails");
    }
    // Every 8-arc of PG(2,7) lies on a conic, so gp8 vanishes at q=7 while
    // glp does not: the 16758 smooth conics carry 8!/|stabilizer| tuples each.
    {
        CountRecord gp = counted(8, parse_cycle_type("1x8"), 7, gp8, true, threads);
        check.expect(gp.quotient_count == 0,
                     "gp8 1^8 at q=7: got " + gp.quotient_count.str() + ", expected 0");
        CountRecord lp = counted(8, parse_cycle_type("1x8"), 7, glp8, true, threads);
        check.expect(lp.quotient_count == 120,
                     "glp 1^8 at q=7: got " + lp.quotient_count.str() + ", expected 120");
        check.expect(lp.raw_fixed_count == BigInt(120) * pgl_order(7), "divisibility fails at q=7");
    }
    // Singular-cubic predicate against the exhaustive 3^10-candidate oracle.
    {
        auto field = construct_field(3, 1);
        auto pts = collect_points(*field, 1);
        std::mt19937 rng(20240811);
        int disagreements = 0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> idx(pts.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<ProjectivePoint> octuple;
            for (int t = 0; t < 8; ++t) octuple.push_back(pts[idx[t]]);
            for (int i = 0; i < 8; ++i)
                if (singular_cubic_through(octuple, i) != cubic_oracle_f3(octuple, i))
                    ++disagreements;
        }
        check.expect(disagreements == 0,
                     std::to_string(disagreements) + " disagreements with the cubic oracle");
    }
    return finish(8, "eight-point engine sanity", check,
                  "gp8 zeros at q=3 and q=7, glp 1^8 at q=7 = 120, cubic predicate matches "
                  "the exhaustive oracle on 100 octuples");
}

CriterionResult criterion_determinism(int threads) {
    Check check;
    int many = threads > 0 ? threads : 2;
    if (many < 2) many = 2;
    auto glp7 = GeneralityCondition::glp(7);
    // criteria 1 and 3 inputs: all 15 classes at q=3, full enumeration
    for (const auto& lambda : partitions_of(7)) {
        CountRecord serial = counted(7, lambda, 3, glp7, false, 1, /*bypass_memo=*/true);
        CountRecord parallel = counted(7, lambda, 3, glp7, false, many, /*bypass_memo=*/true);
        check.expect(serial.raw_fixed_count == parallel.raw_fixed_count &&
                         serial.quotient_count == parallel.quotient_count,
                     "class " + format_dotted(lambda) + " at q=3 differs between 1 and " +
                         std::to_string(many) + " workers");
    }
    // criterion 2 inputs: the frame-normalized samples
    for (const char* row : kInterpolatedRows) {
        CycleType lambda = parse_cycle_type(row);
        for (std::int64_t p : kPrimes) {
            CountRecord serial = counted(7, lambda, p, glp7, true, 1, /*bypass_memo=*/true);
            CountRecord parallel = counted(7, lambda, p, glp7, true, many, /*bypass_memo=*/true);
            check.expect(serial.quotient_count == parallel.quotient_count,
                         "frame class " + format_dotted(lambda) + " at p=" + std::to_string(p) +
                             " differs between 1 and " + std::to_string(many) + " workers");
        }
    }
    return finish(9, "determinism across worker counts", check,
                  "criteria 1-3 counts identical with 1 and " + std::to_string(many) + " workers");
}

CriterionResult criterion_full_q5(int threads) {
    Check check;
    auto glp7 = GeneralityCondition::glp(7);
    for (const auto& [lambda, poly] : builtin_table1()) {
        BigInt expected = evaluate(poly, 5);
        bool frame = frame_eligible(lambda);
        BigInt est = feasibility_estimate(7, lambda, 5, frame);
        if (est > 10'000'000'000ULL) continue;  // outside the default budget
        CountRecord record = counted(7, lambda, 5, glp7, frame, threads);
        check.expect(record.quotient_count == expected,
                     "class " + format_dotted(lambda) + " at q=5: got " +
                         record.quotient_count.str() + ", expected " + expected.str());
    }
    return finish(10, "q=5 verification of every budget-feasible class", check,
                  "all budget-feasible classes match the count polynomials at q=5");
}

bool cubic_oracle_f3(const std::vector<ProjectivePoint>& points, int i) {
    // Columns: the 10 cubic monomial values at the 8 points plus the three
    // partial-derivative rows at point i, all reduced mod 3.
    int rows = 0;
    std::array<std::array<int, 10>, 11> m{};
    auto cubic_row = [](const ProjectivePoint& p) {
        auto v = [&](int idx) { return p.coords[idx].coeffs[0] % 3; };
        std::int64_t x = v(0), y = v(1), z = v(2);
        return std::array<int, 10>{static_cast<int>(x * x % 3 * x % 3), static_cast<int>(y * y % 3 * y % 3),
                                   static_cast<int>(z * z % 3 * z % 3), static_cast<int>(x * x % 3 * y % 3),
                                   static_cast<int>(x * x % 3 * z % 3), static_cast<int>(x * y % 3 * y % 3),
                                   static_cast<int>(y * y % 3 * z % 3), static_cast<int>(x * z % 3 * z % 3),
                                   static_cast<int>(y * z % 3 * z % 3), static_cast<int>(x * y % 3 * z % 3)};
    };
    for (int j = 0; j < 8; ++j)
        if (j != i) m[rows++] = cubic_row(points[j]);
    {
        auto v = [&](int idx) { return points[i].coords[idx].coeffs[0] % 3; };
        std::int64_t x = v(0), y = v(1), z = v(2);
        auto r = [&](std::initializer_list<std::int64_t> vals) {
            std::array<int, 10> row{};
            int k = 0;
            for (auto val : vals) row[k++] = static_cast<int>(((val % 3) + 3) % 3);
            return row;
        };
        // partials in the fixed monomial order (3 == 0 in characteristic 3)
        m[rows++] = r({0, 0, 0, 2 * x * y, 2 * x * z, y * y, 0, z * z, 0, y * z});
        m[rows++] = r({0, 0, 0, x * x, 0, 2 * x * y, 2 * y * z, 0, z * z, x * z});
        m[rows++] = r({0, 0, 0, 0, x * x, 0, y * y, 2 * x * z, 2 * y * z, x * y});
        m[rows++] = cubic_row(points[i]);
    }
    // Exhaustively scan the 3^10 coefficient vectors with partial dot sums.
    std::array<std::array<int, 11>, 11> partial{};  // partial[level][row]
    std::array<int, 10> digits{};
    int level = 0;
    for (;;) {
        if (level == 10) {
            bool nonzero = std::any_of(digits.begin(), digits.end(), [](int d) { return d != 0; });
            if (nonzero) {
                bool vanishes = true;
                for (int r = 0; r < rows; ++r)
                    if (partial[10][r] % 3 != 0) { vanishes = false; break; }
                if (vanishes) return true;
            }
            // backtrack
            --level;
            while (level >= 0 && digits[level] == 2) digits[level--] = 0;
            if (level < 0) return false;
            ++digits[level];
            continue;
        }
        for (int r = 0; r < rows; ++r)
            partial[level + 1][r] = partial[level][r] + digits[level] * m[r][level];
        ++level;
    }
}

}  // namespace

const std::array<std::array<int, 15>, 7>& reference_table2() {
    static const std::array<std::array<int, 15>, 7> table = {{
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 3, 1, 3, 1, 3, 1, 1, 0, 0, 0, 0, 0},
        {0, 3, 6, 9, 7, 15, 10, 9, 6, 12, 3, 5, 3, 0, 0},
        {3, 9, 21, 19, 20, 47, 27, 25, 29, 42, 20, 17, 13, 6, 1},
        {3, 14, 34, 31, 31, 78, 42, 44, 48, 75, 34, 30, 29, 13, 1},
        {2, 9, 18, 25, 23, 50, 31, 34, 28, 52, 19, 23, 22, 9, 4},
    }};
    return table;
}

CharacterTable brute_force_character_table(int m) {
    if (m < 1 || m > 5) throw std::invalid_argument("brute-force oracle supports m <= 5");
    auto parts = partitions_of(m);
    size_t n = parts.size();

    // all permutations with their class index
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto cycle_type_of = [&](const std::vector<int>& sigma) {
        std::vector<bool> seen(m, false);
        std::vector<int> lens;
        for (int s = 0; s < m; ++s) {
            if (seen[s]) continue;
            int len = 0, cur = s;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = sigma[cur];
                ++len;
            }
            lens.push_back(len);
        }
        Partition p(lens);
        for (size_t i = 0; i < n; ++i)
            if (parts[i] == p) return static_cast<int>(i);
        throw std::logic_error("class not found");
    };
    std::vector<int> class_of(perms.size());
    for (size_t s = 0; s < perms.size(); ++s) class_of[s] = cycle_type_of(perms[s]);

    // permutation-module characters: fixed ordered set partitions of type mu
    auto psi = [&](const Partition& mu, const std::vector<int>& sigma) {
        std::vector<int> assignment(m, -1);
        std::vector<int> remaining(mu.parts.begin(), mu.parts.end());
        std::int64_t count = 0;
        auto rec = [&](auto&& self, int elem) -> void {
            if (elem == m) {
                // check blocks fixed setwise
                for (int e = 0; e < m; ++e)
                    if (assignment[sigma[e]] != assignment[e]) return;
                ++count;
                return;
            }
            for (size_t b = 0; b < remaining.size(); ++b) {
                if (remaining[b] == 0) continue;
                --remaining[b];
                assignment[elem] = static_cast<int>(b);
                self(self, elem + 1);
                ++remaining[b];
            }
            assignment[elem] = -1;
        };
        rec(rec, 0);
        return count;
    };

    // class function per partition, then Gram-Schmidt down the canonical
    // order (any constituent of psi^mu other than chi^mu is lexicographically
    // larger than mu, hence already extracted)
    std::vector<std::vector<std::int64_t>> psis(n, std::vector<std::int64_t>(n, 0));
    for (size_t r = 0; r < n; ++r) {
        std::vector<std::int64_t> per_class(n, -1);
        for (size_t s = 0; s < perms.size(); ++s) {
            if (per_class[class_of[s]] < 0) per_class[class_of[s]] = psi(parts[r], perms[s]);
        }
        psis[r] = std::move(per_class);
    }
    std::uint64_t order = factorial(m);
    std::vector<std::uint64_t> sizes(n);
    for (size_t c = 0; c < n; ++c) sizes[c] = class_size(parts[c]);

    CharacterTable t;
    t.m = m;
    t.partitions = parts;
    t.class_sizes = sizes;
    t.values.assign(n, std::vector<std::int64_t>(n, 0));
    for (size_t r = 0; r < n; ++r) {
        std::vector<std::int64_t> chi = psis[r];
        for (size_t prev = 0; prev < r; ++prev) {
            std::int64_t inner = 0;
            for (size_t c = 0; c < n; ++c)
                inner += static_cast<std::int64_t>(sizes[c]) * chi[c] * t.values[prev][c];
            if (inner % static_cast<std::int64_t>(order) != 0)
                throw std::logic_error("non-integral inner product in oracle");
            std::int64_t mult = inner / static_cast<std::int64_t>(order);
            for (size_t c = 0; c < n; ++c) chi[c] -= mult * t.values[prev][c];
        }
        t.values[r] = std::move(chi);
    }
    return t;
}

CriterionResult run_criterion(int id, Tier tier, int threads) {
    switch (id) {
        case 1: return criterion_twisted_counts_q3(threads);
        case 2: return criterion_frame_interpolation(threads);
        case 3: return criterion_lemma_reproduction(threads);
        case 4: return criterion_table2(threads);
        case 5: return criterion_round_trip(threads);
        case 6: return criterion_character_table(threads);
        case 7: return criterion_burnside(threads);
        case 8: return criterion_eight_points(threads);
        case 9: return criterion_determinism(threads);
        case 10:
            if (tier != Tier::Full) throw std::invalid_argument("criterion 10 is full-tier only");
            return criterion_full_q5(threads);
        default: throw std::invalid_argument("unknown criterion id");
    }
}

std::vector<CriterionResult> run_acceptance(Tier tier, int threads, std::ostream& out) {
    std::vector<CriterionResult> results;
    int last = tier == Tier::Full ? 10 : 9;
    for (int id = 1; id <= last; ++id) {
        CriterionResult r = run_criterion(id, tier, threads);
        out << "criterion " << r.id << " [" << r.name << "]: " << (r.passed ? "PASS" : "FAIL");
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace glp::verify
