#pragma once

#include <array>
#include <cstdint>

#include "glpcount/generality.hpp"
#include "glpcount/zech_field.hpp"

namespace glp {

/// Normalized point of P^2 in table-arithmetic form: three exponent-coded
/// coordinates, first nonzero coordinate equal to one. Frobenius preserves
/// this normal form, so orbits never need renormalization.
struct PackedPoint {
    ZechField::Elem x, y, z;
    bool operator==(const PackedPoint&) const = default;
};

inline PackedPoint frobenius_point(const ZechField& f, PackedPoint p) {
    return {f.frob(p.x), f.frob(p.y), f.frob(p.z)};
}

inline PackedPoint frobenius_point_pow(const ZechField& f, PackedPoint p, int d) {
    return {f.frob_pow(p.x, d), f.frob_pow(p.y, d), f.frob_pow(p.z, d)};
}

namespace packed {

using Vec3 = std::array<ZechField::Elem, 3>;

inline Vec3 cross(const ZechField& f, PackedPoint a, PackedPoint b) {
    return {f.sub(f.mul(a.y, b.z), f.mul(a.z, b.y)),
            f.sub(f.mul(a.z, b.x), f.mul(a.x, b.z)),
            f.sub(f.mul(a.x, b.y), f.mul(a.y, b.x))};
}

inline bool dot_is_zero(const ZechField& f, const Vec3& v, PackedPoint p) {
    return f.is_zero(f.add(f.add(f.mul(v[0], p.x), f.mul(v[1], p.y)), f.mul(v[2], p.z)));
}

bool six_on_conic(const ZechField& f, const PackedPoint* pts, const int* idx);
bool singular_cubic_through(const ZechField& f, const PackedPoint* pts, int n, int i);

}  // namespace packed

/// Incrementally built point tuple with the monotone generality checks.
/// Collinearity tests reuse cached cross products of earlier pairs, so adding
/// one point costs one dot product per existing pair.
class TupleChecker {
public:
    static constexpr int max_points = 16;

    TupleChecker(const ZechField& field, ConditionKind kind) : field_(field), kind_(kind) {}

    int size() const { return n_; }
    const PackedPoint* points() const { return pts_.data(); }

    /// Appends p if the tuple stays admissible; returns false (and does not
    /// append) if distinctness, a collinearity check, or a gp8 conic check
    /// fails.
    bool try_push(PackedPoint p) {
        for (int i = 0; i < n_; ++i)
            if (pts_[i] == p) return false;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (packed::dot_is_zero(field_, cross_[i][j], p)) return false;
        if (kind_ == ConditionKind::GeneralPosition8 && n_ >= 5) {
            if (!conic_subsets_ok(p)) return false;
        }
        for (int i = 0; i < n_; ++i) cross_[i][n_] = packed::cross(field_, pts_[i], p);
        pts_[n_++] = p;
        return true;
    }

    void pop_to(int k) { n_ = k; }

    /// Non-monotone part of the full condition (gp8 singular cubics).
    bool full_check() const {
        if (kind_ != ConditionKind::GeneralPosition8) return true;
        for (int i = 0; i < n_; ++i)
            if (packed::singular_cubic_through(field_, pts_.data(), n_, i)) return false;
        return true;
    }

private:
    bool conic_subsets_ok(PackedPoint candidate) const;

    const ZechField& field_;
    ConditionKind kind_;
    int n_ = 0;
    std::array<PackedPoint, max_points> pts_{};
    std::array<std::array<packed::Vec3, max_points>, max_points> cross_{};
};

}  // namespace glp
