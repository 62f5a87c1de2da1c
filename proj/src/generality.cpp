#include "glpcount/generality.hpp"

#include <stdexcept>

namespace glp {

GeneralityCondition GeneralityCondition::glp(int m) {
    if (m < 3) throw std::invalid_argument("glp requires m >= 3");
    return GeneralityCondition{ConditionKind::GeneralLinearPosition, m};
}

GeneralityCondition GeneralityCondition::gp8() {
    return GeneralityCondition{ConditionKind::GeneralPosition8, 8};
}

std::string GeneralityCondition::name() const {
    return kind == ConditionKind::GeneralLinearPosition ? "glp" : "gp8";
}

GeneralityCondition parse_condition(const std::string& name, int m) {
    if (name == "glp") return GeneralityCondition::glp(m);
    if (name == "gp8") {
        if (m != 8) throw std::invalid_argument("gp8 requires m = 8");
        return GeneralityCondition::gp8();
    }
    throw std::invalid_argument("unknown condition: " + name);
}

bool check_partial(const GeneralityCondition& cond, const std::vector<ProjectivePoint>& points) {
    int n = static_cast<int>(points.size());
    if (n > cond.m) throw std::invalid_argument("tuple longer than m");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j]) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (collinear(points[i], points[j], points[k])) return false;
    if (cond.kind == ConditionKind::GeneralPosition8 && n >= 6) {
        std::vector<int> idx(6);
        // all 6-subsets
        for (idx[0] = 0; idx[0] < n; ++idx[0])
            for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
                for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
                    for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
                        for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4])
                            for (idx[5] = idx[4] + 1; idx[5] < n; ++idx[5]) {
                                std::vector<ProjectivePoint> six;
                                six.reserve(6);
                                for (int t = 0; t < 6; ++t) six.push_back(points[idx[t]]);
                                if (six_on_conic(six)) return false;
                            }
    }
    return true;
}

bool check_full(const GeneralityCondition& cond, const std::vector<ProjectivePoint>& points) {
    if (static_cast<int>(points.size()) != cond.m)
        throw std::invalid_argument("check_full expects a complete m-tuple");
    if (!check_partial(cond, points)) return false;
    if (cond.kind == ConditionKind::GeneralPosition8) {
        for (int i = 0; i < 8; ++i)
            if (singular_cubic_through(points, i)) return false;
    }
    return true;
}

}  // namespace glp
