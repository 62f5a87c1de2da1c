#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "glpcount/twisted_enumeration.hpp"

namespace glp {

/// Append-only CSV cache of count records, one file per (m, condition),
/// keyed by (m, cycle_type, p, condition). Re-running a cached job verifies
/// the stored counts instead of appending a duplicate row.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path directory);

    std::optional<CountRecord> lookup(int m, const CycleType& cycle_type, std::int64_t p,
                                      const std::string& condition) const;

    /// Stores a new record, or verifies it against the existing row.
    /// Returns false (with a message in *mismatch) if a cached row disagrees.
    bool store(const CountRecord& record, std::string* mismatch = nullptr);

    std::vector<CountRecord> load(int m, const std::string& condition) const;

    std::filesystem::path file_for(int m, const std::string& condition) const;

private:
    std::filesystem::path dir_;
};

}  // namespace glp
