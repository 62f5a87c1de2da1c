#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "glpcount/finite_field.hpp"

namespace glp {

/// Point of P^2 with homogeneous coordinates in one ExtensionField,
/// normalized so the first nonzero coordinate is 1.
struct ProjectivePoint {
    std::array<FieldElement, 3> coords;

    bool operator==(const ProjectivePoint&) const = default;
};

/// Normalizes a coordinate triple (not all zero).
ProjectivePoint make_point(const FieldElement& x, const FieldElement& y, const FieldElement& z);

/// Calls visit for each of the p^{2d} + p^d + 1 points of P^2 with
/// coordinates in the subfield of size p^d; d must divide the field degree.
void enumerate_points(const ExtensionField& field, int d,
                      const std::function<void(const ProjectivePoint&)>& visit);

/// Convenience: materialized list (small fields).
std::vector<ProjectivePoint> collect_points(const ExtensionField& field, int d);

ProjectivePoint frobenius_point(const ProjectivePoint& point);

/// Smallest d >= 1 with frobenius^d(P) = P; divides the field degree.
int orbit_size(const ProjectivePoint& point);

bool collinear(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c);

/// True iff some nonzero conic passes through all six points.
bool six_on_conic(const std::vector<ProjectivePoint>& points);

/// True iff some nonzero cubic vanishes at all eight points with all three
/// partial derivatives vanishing at points[i]. The rank test carries an
/// explicit vanishing row at points[i], which keeps the predicate right in
/// characteristic 3 where the Euler relation degenerates. i is 0-based.
bool singular_cubic_through(const std::vector<ProjectivePoint>& points, int i);

/// |PGL(3, F_p)| = (p^2+p+1)(p^3-p)(p^3-p^2).
std::uint64_t pgl_order(std::int64_t p);

}  // namespace glp
