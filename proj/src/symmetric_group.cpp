#include "glpcount/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace glp {

namespace {

/// Murnaghan-Nakayama on beta-numbers: with beta_i = mu_i + (r - 1 - i) all
/// distinct, removing a border strip of length l is moving some beta_i down
/// to beta_i - l (which must be vacant), with sign (-1)^(number of occupied
/// slots jumped over).
std::int64_t mn_recurse(std::vector<int> shape, const std::vector<int>& cycles, size_t cycle_idx,
                        std::map<std::pair<std::vector<int>, size_t>, std::int64_t>& memo) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (cycle_idx == cycles.size()) return shape.empty() ? 1 : 0;
    if (shape.empty()) return 0;

    auto key = std::make_pair(shape, cycle_idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int l = cycles[cycle_idx];
    int r = static_cast<int>(shape.size());
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = shape[i] + (r - 1 - i);  // strictly decreasing

    std::int64_t total = 0;
    for (int i = 0; i < r; ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] < beta[i] && beta[j] > target) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> next(r);
        for (int j = 0; j < r; ++j) next[j] = nb[j] - (r - 1 - j);
        std::int64_t sign = (jumped % 2 == 0) ? 1 : -1;
        total += sign * mn_recurse(std::move(next), cycles, cycle_idx + 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t character(const Partition& mu, const CycleType& lambda) {
    if (mu.sum() != lambda.sum()) throw std::invalid_argument("partition sizes differ");
    std::map<std::pair<std::vector<int>, size_t>, std::int64_t> memo;
    return mn_recurse(mu.parts, lambda.parts, 0, memo);
}

CharacterTable build_character_table(int m) {
    CharacterTable t;
    t.m = m;
    t.partitions = partitions_of(m);
    size_t n = t.partitions.size();
    t.values.assign(n, std::vector<std::int64_t>(n, 0));
    t.class_sizes.resize(n);
    for (size_t col = 0; col < n; ++col) t.class_sizes[col] = class_size(t.partitions[col]);
    for (size_t row = 0; row < n; ++row) {
        for (size_t col = 0; col < n; ++col) {
            std::map<std::pair<std::vector<int>, size_t>, std::int64_t> memo;
            t.values[row][col] = mn_recurse(t.partitions[row].parts, t.partitions[col].parts, 0, memo);
        }
    }
    return t;
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::find(partitions.begin(), partitions.end(), p);
    if (it == partitions.end()) throw std::invalid_argument("partition not of this m");
    return static_cast<int>(it - partitions.begin());
}

std::string CharacterTable::to_csv() const {
    std::ostringstream out;
    out << "irrep";
    for (const auto& p : partitions) out << "," << format_exponent(p);
    out << "\n";
    out << "class_size";
    for (auto s : class_sizes) out << "," << s;
    out << "\n";
    for (size_t row = 0; row < partitions.size(); ++row) {
        out << format_exponent(partitions[row]);
        for (size_t col = 0; col < partitions.size(); ++col) out << "," << values[row][col];
        out << "\n";
    }
    return out.str();
}

std::uint64_t hook_dimension(const Partition& mu) {
    const auto& parts = mu.parts;
    int r = static_cast<int>(parts.size());
    // column lengths: conjugate partition
    std::vector<int> conj;
    if (r > 0) {
        conj.resize(parts[0], 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < parts[i]; ++j) conj[j]++;
    }
    BigInt num = 1;
    for (int i = 2; i <= mu.sum(); ++i) num *= i;
    BigInt denom = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int hook = (parts[i] - j - 1) + (conj[j] - i - 1) + 1;
            denom *= hook;
        }
    BigInt dim = num / denom;
    return dim.convert_to<std::uint64_t>();
}

bool Decomposition::integral() const {
    for (const auto& r : multiplicities)
        if (boost::multiprecision::denominator(r) != 1) return false;
    return true;
}

bool Decomposition::nonnegative() const {
    for (const auto& r : multiplicities)
        if (r < 0) return false;
    return true;
}

std::vector<BigInt> Decomposition::integer_multiplicities() const {
    if (!integral()) throw std::logic_error("multiplicities are not integral");
    std::vector<BigInt> out;
    out.reserve(multiplicities.size());
    for (const auto& r : multiplicities) out.push_back(boost::multiprecision::numerator(r));
    return out;
}

Decomposition decompose(const CharacterTable& table, const std::vector<BigInt>& class_values) {
    size_t n = table.partitions.size();
    if (class_values.size() != n)
        throw std::invalid_argument("need one value per conjugacy class");
    BigInt group_order = factorial(table.m);
    Decomposition d;
    d.partitions = table.partitions;
    d.multiplicities.resize(n);
    for (size_t row = 0; row < n; ++row) {
        BigInt acc = 0;
        for (size_t col = 0; col < n; ++col)
            acc += BigInt(table.class_sizes[col]) * table.values[row][col] * class_values[col];
        d.multiplicities[row] = BigRat(acc, group_order);
    }
    return d;
}

}  // namespace glp
