#include "glpcount/cache.hpp"

#include <fstream>
#include <sstream>

namespace glp {

namespace {

constexpr const char* kHeader =
    "m,cycle_type,p,condition,raw_fixed_count,quotient_count,engine,wall_seconds";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path directory) : dir_(std::move(directory)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::file_for(int m, const std::string& condition) const {
    return dir_ / ("counts-m" + std::to_string(m) + "-" + condition + ".csv");
}

std::vector<CountRecord> ResultCache::load(int m, const std::string& condition) const {
    std::vector<CountRecord> records;
    std::ifstream in(file_for(m, condition));
    if (!in) return records;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == kHeader) continue;
        }
        auto fields = split_csv(line);
        if (fields.size() != 8) throw std::runtime_error("malformed cache row: " + line);
        CountRecord r;
        r.m = std::stoi(fields[0]);
        r.cycle_type = parse_cycle_type(fields[1]);
        r.p = std::stoll(fields[2]);
        r.condition = fields[3];
        r.raw_fixed_count = BigInt(fields[4]);
        r.quotient_count = BigInt(fields[5]);
        r.engine = fields[6];
        r.wall_seconds = std::stod(fields[7]);
        records.push_back(std::move(r));
    }
    return records;
}

std::optional<CountRecord> ResultCache::lookup(int m, const CycleType& cycle_type, std::int64_t p,
                                               const std::string& condition) const {
    for (auto& r : load(m, condition))
        if (r.cycle_type == cycle_type && r.p == p) return r;
    return std::nullopt;
}

bool ResultCache::store(const CountRecord& record, std::string* mismatch) {
    auto existing = lookup(record.m, record.cycle_type, record.p, record.condition);
    if (existing) {
        if (existing->raw_fixed_count != record.raw_fixed_count ||
            existing->quotient_count != record.quotient_count) {
            if (mismatch) {
                *mismatch = "cache mismatch for m=" + std::to_string(record.m) + " class=" +
                            format_dotted(record.cycle_type) + " p=" + std::to_string(record.p) +
                            ": cached quotient " + existing->quotient_count.str() +
                            ", recomputed " + record.quotient_count.str();
            }
            return false;
        }
        return true;  // verified, no duplicate row
    }
    auto path = file_for(record.m, record.condition);
    bool fresh = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path.string());
    if (fresh) out << kHeader << "\n";
    out << record.m << "," << format_dotted(record.cycle_type) << "," << record.p << ","
        << record.condition << "," << record.raw_fixed_count.str() << ","
        << record.quotient_count.str() << "," << record.engine << "," << record.wall_seconds
        << "\n";
    return true;
}

}  // namespace glp
