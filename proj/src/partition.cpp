#include "glpcount/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glp {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    for (int x : parts) {
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    }
}

int Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::count_part(int k) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

int Partition::lcm_parts() const {
    int l = 1;
    for (int x : parts) l = std::lcm(l, x);
    return l;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.parts = current;
        out.push_back(std::move(p));
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        current.push_back(k);
        generate(remaining - k, k, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
    if (m < 1 || m > 12) throw std::invalid_argument("partitions_of: m out of range [1,12]");
    std::vector<Partition> out;
    std::vector<int> current;
    generate(m, m, current, out);
    return out;  // descending-first recursion yields canonical order directly
}

std::uint64_t factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t class_size(const CycleType& lambda) {
    // m! / z_lambda with z_lambda = prod_i i^{n_i} n_i!
    int m = lambda.sum();
    if (m < 1 || m > 20) throw std::invalid_argument("class_size: m out of range");
    std::uint64_t z = 1;
    int i = 0;
    const auto& ps = lambda.parts;
    while (i < static_cast<int>(ps.size())) {
        int j = i;
        while (j < static_cast<int>(ps.size()) && ps[j] == ps[i]) ++j;
        int mult = j - i;
        for (int t = 0; t < mult; ++t) z *= static_cast<std::uint64_t>(ps[i]);
        z *= factorial(mult);
        i = j;
    }
    return factorial(m) / z;
}

Partition parse_cycle_type(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t dot = text.find('.', pos);
        std::string token = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (token.empty()) throw std::invalid_argument("empty token in cycle type: " + text);
        size_t x = token.find('x');
        try {
            if (x == std::string::npos) {
                parts.push_back(std::stoi(token));
            } else {
                int part = std::stoi(token.substr(0, x));
                int repeat = std::stoi(token.substr(x + 1));
                if (repeat < 1) throw std::invalid_argument("bad repeat");
                for (int r = 0; r < repeat; ++r) parts.push_back(part);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse cycle type token: " + token);
        }
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    if (parts.empty()) throw std::invalid_argument("empty cycle type");
    return Partition(std::move(parts));
}

std::string format_dotted(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p.parts[i]);
    }
    return s;
}

std::string format_exponent(const Partition& p) {
    std::string s;
    size_t i = 0;
    while (i < p.parts.size()) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        s += std::to_string(p.parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

}  // namespace glp
