#include "glpcount/packed_geometry.hpp"

#include <stdexcept>

namespace glp {

namespace packed {

namespace {

using Elem = ZechField::Elem;

/// Rank of an r x c matrix over the table field, elimination with full pivoting.
template <int MaxRows, int MaxCols>
int matrix_rank(const ZechField& f, std::array<std::array<Elem, MaxCols>, MaxRows>& m, int rows, int cols) {
    int rank = 0;
    for (int top = 0; top < rows && rank < cols; ++top) {
        int pr = -1, pc = -1;
        for (int i = top; i < rows && pr < 0; ++i)
            for (int j = 0; j < cols; ++j)
                if (!f.is_zero(m[i][j])) { pr = i; pc = j; break; }
        if (pr < 0) break;
        std::swap(m[top], m[pr]);
        Elem piv_inv = f.inv(m[top][pc]);
        for (int j = 0; j < cols; ++j) m[top][j] = f.mul(m[top][j], piv_inv);
        for (int i = 0; i < rows; ++i) {
            if (i == top || f.is_zero(m[i][pc])) continue;
            Elem factor = m[i][pc];
            for (int j = 0; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[top][j]));
        }
        ++rank;
    }
    return rank;
}

void conic_row(const ZechField& f, PackedPoint p, std::array<Elem, 6>& row) {
    row = {f.mul(p.x, p.x), f.mul(p.y, p.y), f.mul(p.z, p.z),
           f.mul(p.x, p.y), f.mul(p.x, p.z), f.mul(p.y, p.z)};
}

// Monomial order x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz.
void cubic_row(const ZechField& f, PackedPoint p, std::array<Elem, 10>& row) {
    Elem x2 = f.mul(p.x, p.x), y2 = f.mul(p.y, p.y), z2 = f.mul(p.z, p.z);
    row = {f.mul(x2, p.x), f.mul(y2, p.y), f.mul(z2, p.z), f.mul(x2, p.y), f.mul(x2, p.z),
           f.mul(p.x, y2), f.mul(y2, p.z), f.mul(p.x, z2), f.mul(p.y, z2), f.mul(f.mul(p.x, p.y), p.z)};
}

}  // namespace

bool six_on_conic(const ZechField& f, const PackedPoint* pts, const int* idx) {
    std::array<std::array<Elem, 6>, 6> m;
    for (int r = 0; r < 6; ++r) conic_row(f, pts[idx[r]], m[r]);
    return matrix_rank<6, 6>(f, m, 6, 6) < 6;
}

bool singular_cubic_through(const ZechField& f, const PackedPoint* pts, int n, int i) {
    if (n != 8) throw std::invalid_argument("singular cubic test expects 8 points");
    std::array<std::array<Elem, 10>, 11> m;
    int r = 0;
    for (int j = 0; j < n; ++j)
        if (j != i) cubic_row(f, pts[j], m[r++]);
    PackedPoint p = pts[i];
    Elem x2 = f.mul(p.x, p.x), y2 = f.mul(p.y, p.y), z2 = f.mul(p.z, p.z);
    Elem two = f.from_residue(2 % f.p);
    Elem three = f.from_residue(3 % f.p);
    Elem zr = f.zero();
    m[r++] = {f.mul(three, x2), zr, zr, f.mul(two, f.mul(p.x, p.y)), f.mul(two, f.mul(p.x, p.z)),
              y2, zr, z2, zr, f.mul(p.y, p.z)};
    m[r++] = {zr, f.mul(three, y2), zr, x2, zr,
              f.mul(two, f.mul(p.x, p.y)), f.mul(two, f.mul(p.y, p.z)), zr, z2, f.mul(p.x, p.z)};
    m[r++] = {zr, zr, f.mul(three, z2), zr, x2,
              zr, y2, f.mul(two, f.mul(p.x, p.z)), f.mul(two, f.mul(p.y, p.z)), f.mul(p.x, p.y)};
    cubic_row(f, p, m[r++]);
    return matrix_rank<11, 10>(f, m, r, 10) < 10;
}

}  // namespace packed

bool TupleChecker::conic_subsets_ok(PackedPoint candidate) const {
    // 6-subsets of pts_[0..n_) + candidate that contain the candidate
    std::array<PackedPoint, max_points + 1> all;
    for (int i = 0; i < n_; ++i) all[i] = pts_[i];
    all[n_] = candidate;
    int idx[6];
    idx[5] = n_;
    for (idx[0] = 0; idx[0] < n_; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < n_; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < n_; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < n_; ++idx[3])
                    for (idx[4] = idx[3] + 1; idx[4] < n_; ++idx[4])
                        if (packed::six_on_conic(field_, all.data(), idx)) return false;
    return true;
}

}  // namespace glp
