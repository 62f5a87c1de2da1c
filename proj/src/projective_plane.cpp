#include "glpcount/projective_plane.hpp"

#include <stdexcept>

namespace glp {

ProjectivePoint make_point(const FieldElement& x, const FieldElement& y, const FieldElement& z) {
    if (x.field != y.field || y.field != z.field)
        throw std::invalid_argument("point coordinates must share a field");
    std::array<FieldElement, 3> c{x, y, z};
    for (auto& coord : c) {
        if (!coord.is_zero()) {
            FieldElement scale = inv(coord);
            return ProjectivePoint{{mul(c[0], scale), mul(c[1], scale), mul(c[2], scale)}};
        }
    }
    throw std::invalid_argument("projective point cannot be (0:0:0)");
}

void enumerate_points(const ExtensionField& field, int d,
                      const std::function<void(const ProjectivePoint&)>& visit) {
    auto elems = subfield_elements(field, d);
    FieldElement zero_el = zero(field);
    FieldElement one_el = one(field);
    for (const auto& y : elems)
        for (const auto& z : elems)
            visit(ProjectivePoint{{one_el, y, z}});
    for (const auto& z : elems) visit(ProjectivePoint{{zero_el, one_el, z}});
    visit(ProjectivePoint{{zero_el, zero_el, one_el}});
}

std::vector<ProjectivePoint> collect_points(const ExtensionField& field, int d) {
    std::vector<ProjectivePoint> out;
    enumerate_points(field, d, [&](const ProjectivePoint& p) { out.push_back(p); });
    return out;
}

ProjectivePoint frobenius_point(const ProjectivePoint& point) {
    FieldElement x = frobenius(point.coords[0]);
    FieldElement y = frobenius(point.coords[1]);
    FieldElement z = frobenius(point.coords[2]);
    return make_point(x, y, z);
}

int orbit_size(const ProjectivePoint& point) {
    int L = point.coords[0].field->degree;
    ProjectivePoint q = point;
    for (int d = 1; d <= L; ++d) {
        q = frobenius_point(q);
        if (q == point) return d;
    }
    throw std::logic_error("frobenius orbit did not close");
}

namespace {

FieldElement det3(const std::array<std::array<FieldElement, 3>, 3>& m) {
    auto minor = [&](int r1, int r2, int c1, int c2) {
        return sub(mul(m[r1][c1], m[r2][c2]), mul(m[r1][c2], m[r2][c1]));
    };
    FieldElement t0 = mul(m[0][0], minor(1, 2, 1, 2));
    FieldElement t1 = mul(m[0][1], minor(1, 2, 0, 2));
    FieldElement t2 = mul(m[0][2], minor(1, 2, 0, 1));
    return add(sub(t0, t1), t2);
}

/// Rank of a matrix over the field, by elimination with full pivoting.
int matrix_rank(std::vector<std::vector<FieldElement>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int top = 0; top < rows && rank < cols; ++top) {
        int pr = -1, pc = -1;
        for (int i = top; i < rows && pr < 0; ++i)
            for (int j = 0; j < cols; ++j)
                if (!m[i][j].is_zero()) { pr = i; pc = j; break; }
        if (pr < 0) break;
        std::swap(m[top], m[pr]);
        FieldElement piv_inv = inv(m[top][pc]);
        for (int j = 0; j < cols; ++j) m[top][j] = mul(m[top][j], piv_inv);
        for (int i = 0; i < rows; ++i) {
            if (i == top || m[i][pc].is_zero()) continue;
            FieldElement f = m[i][pc];
            for (int j = 0; j < cols; ++j)
                m[i][j] = sub(m[i][j], mul(f, m[top][j]));
        }
        ++rank;
    }
    return rank;
}

std::vector<FieldElement> conic_row(const ProjectivePoint& p) {
    const auto& x = p.coords[0];
    const auto& y = p.coords[1];
    const auto& z = p.coords[2];
    return {mul(x, x), mul(y, y), mul(z, z), mul(x, y), mul(x, z), mul(y, z)};
}

// Cubic monomials in the fixed order x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz.
std::vector<FieldElement> cubic_row(const ProjectivePoint& p) {
    const auto& x = p.coords[0];
    const auto& y = p.coords[1];
    const auto& z = p.coords[2];
    FieldElement x2 = mul(x, x), y2 = mul(y, y), z2 = mul(z, z);
    return {mul(x2, x), mul(y2, y), mul(z2, z), mul(x2, y), mul(x2, z),
            mul(x, y2), mul(y2, z), mul(x, z2), mul(y, z2), mul(mul(x, y), z)};
}

// Rows of partial derivatives of the cubic monomial vector at p.
std::array<std::vector<FieldElement>, 3> cubic_partial_rows(const ProjectivePoint& p) {
    const auto& field = *p.coords[0].field;
    const auto& x = p.coords[0];
    const auto& y = p.coords[1];
    const auto& z = p.coords[2];
    FieldElement x2 = mul(x, x), y2 = mul(y, y), z2 = mul(z, z);
    FieldElement zero_el = zero(field);
    FieldElement two = from_residue(field, 2);
    FieldElement three = from_residue(field, 3);
    auto t = [&](const FieldElement& c, const FieldElement& m) { return mul(c, m); };
    std::vector<FieldElement> dx = {t(three, x2), zero_el, zero_el, t(two, mul(x, y)), t(two, mul(x, z)),
                                    y2, zero_el, z2, zero_el, mul(y, z)};
    std::vector<FieldElement> dy = {zero_el, t(three, y2), zero_el, x2, zero_el,
                                    t(two, mul(x, y)), t(two, mul(y, z)), zero_el, z2, mul(x, z)};
    std::vector<FieldElement> dz = {zero_el, zero_el, t(three, z2), zero_el, x2,
                                    zero_el, y2, t(two, mul(x, z)), t(two, mul(y, z)), mul(x, y)};
    return {std::move(dx), std::move(dy), std::move(dz)};
}

}  // namespace

bool collinear(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c) {
    return det3({a.coords, b.coords, c.coords}).is_zero();
}

bool six_on_conic(const std::vector<ProjectivePoint>& points) {
    if (points.size() != 6) throw std::invalid_argument("six_on_conic expects 6 points");
    std::vector<std::vector<FieldElement>> m;
    m.reserve(6);
    for (const auto& p : points) m.push_back(conic_row(p));
    return matrix_rank(std::move(m)) < 6;
}

bool singular_cubic_through(const std::vector<ProjectivePoint>& points, int i) {
    if (points.size() != 8) throw std::invalid_argument("singular_cubic_through expects 8 points");
    if (i < 0 || i >= 8) throw std::invalid_argument("index out of range");
    std::vector<std::vector<FieldElement>> m;
    m.reserve(11);
    for (int j = 0; j < 8; ++j)
        if (j != i) m.push_back(cubic_row(points[j]));
    auto partials = cubic_partial_rows(points[i]);
    for (auto& row : partials) m.push_back(std::move(row));
    m.push_back(cubic_row(points[i]));
    return matrix_rank(std::move(m)) < 10;
}

std::uint64_t pgl_order(std::int64_t p) {
    if (p < 3 || p > 251 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("pgl_order expects an odd prime below 252");
    std::uint64_t q = static_cast<std::uint64_t>(p);
    return (q * q + q + 1) * (q * q * q - q) * (q * q * q - q * q);
}

}  // namespace glp
