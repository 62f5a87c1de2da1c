#pragma once

#include <string>
#include <vector>

#include "glpcount/projective_plane.hpp"

namespace glp {

enum class ConditionKind {
    GeneralLinearPosition,  // no three of the m points on a line
    GeneralPosition8,       // GLP + no six on a conic + no singular cubic condition, m = 8
};

struct GeneralityCondition {
    ConditionKind kind;
    int m;

    static GeneralityCondition glp(int m);
    static GeneralityCondition gp8();

    std::string name() const;  // "glp" or "gp8"
};

GeneralityCondition parse_condition(const std::string& name, int m);

/// Monotone part of the condition on a partial tuple: distinctness, no three
/// collinear, and for gp8 no six of the chosen points on a conic. If a
/// partial tuple fails, every extension fails, which is what makes pruning
/// during enumeration sound.
bool check_partial(const GeneralityCondition& cond, const std::vector<ProjectivePoint>& points);

/// Full condition on a complete m-tuple. For gp8 this adds the non-monotone
/// singular-cubic test at every index.
bool check_full(const GeneralityCondition& cond, const std::vector<ProjectivePoint>& points);

}  // namespace glp
