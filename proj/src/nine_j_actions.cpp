#include "w15j/nine_j_actions.hpp"

#include <algorithm>
#include <cmath>

namespace w15j {

namespace {

struct TetPhases {
    double phi;   // sum of length * external dihedral over the six edges
    double psiX;  // external dihedral at the X edge
    double vol;
};

// Raw embedding + dihedrals without caustic thresholds; nullopt when the six
// lengths admit no tetrahedron.
std::optional<std::array<Vec3, 4>> try_embed(double d01, double d02, double d03,
                                             double d12, double d13, double d23) {
    if (!(d01 > 0)) return std::nullopt;
    const double x2 = (d01 * d01 + d02 * d02 - d12 * d12) / (2 * d01);
    const double y2s = d02 * d02 - x2 * x2;
    if (y2s <= 0) return std::nullopt;
    const double y2 = std::sqrt(y2s);
    const double x3 = (d01 * d01 + d03 * d03 - d13 * d13) / (2 * d01);
    const double y3 = (d02 * d02 + d03 * d03 - d23 * d23 - 2 * x2 * x3) / (2 * y2);
    const double z3s = d03 * d03 - x3 * x3 - y3 * y3;
    if (z3s <= 0) return std::nullopt;
    return std::array<Vec3, 4>{Vec3(0, 0, 0), Vec3(d01, 0, 0), Vec3(x2, y2, 0),
                               Vec3(x3, y3, std::sqrt(z3s))};
}

std::optional<TetPhases> tet_phases(const std::array<double, 6>& len,
                                    std::size_t x_edge_index) {
    auto P = try_embed(len[0], len[1], len[2], len[3], len[4], len[5]);
    if (!P) return std::nullopt;
    const auto& v = *P;
    const double vol =
        std::abs((v[1] - v[0]).cross(v[2] - v[0]).dot(v[3] - v[0])) / 6.0;
    if (!(vol > 0)) return std::nullopt;
    TetPhases out{0, 0, vol};
    for (std::size_t k = 0; k < kTetEdges.size(); ++k) {
        const auto [i, j] = kTetEdges[k];
        int a = -1, b = -1;
        for (int w = 0; w < 4; ++w) {
            if (w == i || w == j) continue;
            (a < 0 ? a : b) = w;
        }
        const Vec3 u = v[j] - v[i];
        const Vec3 n1 = (v[a] - v[i]).cross(u);
        const Vec3 n2 = (v[b] - v[i]).cross(u);
        const double nn = n1.norm() * n2.norm();
        if (!(nn > 0)) return std::nullopt;
        const double internal = std::acos(std::clamp(n1.dot(n2) / nn, -1.0, 1.0));
        const double psi = M_PI - internal;
        out.phi += len[k] * psi;
        if (k == x_edge_index) out.psiX = psi;
    }
    return out;
}

struct ComplexAtX {
    TetPhases A, B, C;
};

// T_A edges (J1, J12, J7, J2, X, J34); X edge index 4 ((1,3)).
// T_B edges (J2, J24, X, J4, J34, J3); X edge index 2 ((0,3)).
// T_C edges (J1, J13, J7, J3, X, J24); X edge index 4.
std::optional<ComplexAtX> complex_at(const NineJLengths& L, double X) {
    auto A = tet_phases({L.J1, L.J12, L.J7, L.J2, X, L.J34}, 4);
    if (!A) return std::nullopt;
    auto B = tet_phases({L.J2, L.J24, X, L.J4, L.J34, L.J3}, 2);
    if (!B) return std::nullopt;
    auto C = tet_phases({L.J1, L.J13, L.J7, L.J3, X, L.J24}, 4);
    if (!C) return std::nullopt;
    return ComplexAtX{*A, *B, *C};
}

double gfun(const ComplexAtX& r, int s2, int s3, int m) {
    return r.A.psiX + s2 * r.B.psiX + s3 * r.C.psiX - 2 * M_PI * m;
}

// Apex of a tetrahedron over base (p0,p1,p2) at the given distances, on the
// chosen side of the base plane (sign of ((apex-p0) . n), n = (p1-p0)x(p2-p0)).
std::optional<Vec3> place_apex(const Vec3& p0, const Vec3& p1, const Vec3& p2,
                               double d0, double d1, double d2, int side) {
    Vec3 ex = p1 - p0;
    const double Lx = ex.norm();
    if (!(Lx > 0)) return std::nullopt;
    ex /= Lx;
    Vec3 cy = p2 - p0;
    const double x2 = cy.dot(ex);
    Vec3 yv = cy - x2 * ex;
    const double Ly = yv.norm();
    if (!(Ly > 0)) return std::nullopt;
    const Vec3 ey = yv / Ly;
    const Vec3 ez = ex.cross(ey);
    const double x = (d0 * d0 - d1 * d1 + Lx * Lx) / (2 * Lx);
    const double y = (d0 * d0 - d2 * d2 + x2 * x2 + Ly * Ly - 2 * x * x2) / (2 * Ly);
    const double z2 = d0 * d0 - x * x - y * y;
    if (z2 <= 0) return std::nullopt;
    return p0 + x * ex + y * ey + side * std::sqrt(z2) * ez;
}

struct BranchAngles {
    double theta, phi12, phi13;
};

// Glue T_B and T_C onto T_A's embedding; sigma = +1 tiles (opposite side of
// the shared face), -1 folds back. Yields the branch vector geometry.
std::optional<BranchAngles> glued_angles(const NineJLengths& L, double X,
                                         int s2, int s3) {
    auto P = try_embed(L.J1, L.J12, L.J7, L.J2, X, L.J34);
    if (!P) return std::nullopt;
    const Vec3 O = (*P)[0], P1 = (*P)[1], P2 = (*P)[2], P3 = (*P)[3];

    const Vec3 nB = (P2 - P1).cross(P3 - P1);
    const int sideO_B = (O - P1).dot(nB) > 0 ? 1 : -1;
    const int wantB = (s2 == 1) ? -sideO_B : sideO_B;
    std::optional<Vec3> P4;
    for (int side : {1, -1}) {
        auto cand = place_apex(P1, P2, P3, L.J24, L.J4, L.J3, side);
        if (cand && (((*cand - P1).dot(nB) > 0 ? 1 : -1) == wantB)) P4 = cand;
    }
    const Vec3 nC = (P1 - O).cross(P3 - O);
    const int sideP2_C = (P2 - O).dot(nC) > 0 ? 1 : -1;
    const int wantC = (s3 == 1) ? -sideP2_C : sideP2_C;
    std::optional<Vec3> P5;
    for (int side : {1, -1}) {
        auto cand = place_apex(O, P1, P3, L.J13, L.J3, L.J24, side);
        if (cand && (((*cand - O).dot(nC) > 0 ? 1 : -1) == wantC)) P5 = cand;
    }
    if (!P4 || !P5) return std::nullopt;

    const Vec3 J12v = P2 - O;
    const Vec3 J13v = *P5 - O;
    const Vec3 J7v = O - P3;
    auto plane_angle = [](const Vec3& axis, const Vec3& a, const Vec3& b)
        -> std::optional<double> {
        const Vec3 n1 = axis.cross(a), n2 = axis.cross(b);
        const double nn = n1.norm() * n2.norm();
        if (!(nn > 0)) return std::nullopt;
        return M_PI - std::acos(std::clamp(n1.dot(n2) / nn, -1.0, 1.0));
    };
    auto a12 = plane_angle(J12v, J13v, J7v);
    auto a13 = plane_angle(J13v, J12v, J7v);
    if (!a12 || !a13) return std::nullopt;
    BranchAngles out;
    out.theta = std::acos(std::clamp(J12v.dot(J13v) / (L.J12 * L.J13), -1.0, 1.0));
    out.phi12 = *a12;
    out.phi13 = *a13;
    return out;
}

} // namespace

std::vector<NineJStationaryTerm> nine_j_stationary_terms(const NineJLengths& L) {
    std::vector<NineJStationaryTerm> out;
    const double Xhi = L.J1 + L.J7;
    constexpr int kGrid = 1400;
    std::vector<std::optional<ComplexAtX>> cache(kGrid);
    std::vector<double> grid(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        grid[i] = Xhi * (i + 0.5) / kGrid;
        cache[i] = complex_at(L, grid[i]);
    }
    const double Xcfg_scale = std::max({L.J1, L.J7, L.J12, L.J13});
    constexpr std::array<std::array<int, 3>, 4> classes = {
        std::array<int, 3>{1, 1, 1}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}};
    for (const auto& cls : classes) {
        const int s2 = cls[0], s3 = cls[1], m = cls[2];
        for (int i = 0; i + 1 < kGrid; ++i) {
            if (!cache[i] || !cache[i + 1]) continue;
            const double g0 = gfun(*cache[i], s2, s3, m);
            const double g1 = gfun(*cache[i + 1], s2, s3, m);
            if (!(g0 == 0 || g0 * g1 < 0)) continue;
            double lo = grid[i], hi = grid[i + 1], flo = g0;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                auto rm = complex_at(L, mid);
                if (!rm) break;
                const double gm = gfun(*rm, s2, s3, m);
                if (flo * gm <= 0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = gm;
                }
            }
            const double Xs = 0.5 * (lo + hi);
            auto rr = complex_at(L, Xs);
            const double h = 1e-6 * std::max(1.0, Xs);
            auto rp = complex_at(L, Xs + h);
            auto rn = complex_at(L, Xs - h);
            if (!rr || !rp || !rn) continue;
            const double gp = (gfun(*rp, s2, s3, 0) - gfun(*rn, s2, s3, 0)) / (2 * h);
            if (!(std::abs(gp) > 0)) continue;
            auto ang = glued_angles(L, Xs, s2, s3);
            if (!ang) continue;
            NineJStationaryTerm t;
            t.sigma2 = s2;
            t.sigma3 = s3;
            t.m = m;
            t.X = Xs;
            t.gprime = gp;
            t.action = rr->A.phi + s2 * rr->B.phi + s3 * rr->C.phi - 2 * M_PI * m * Xs;
            t.amplitude = 0.25 * 2 * Xs * std::sqrt(2 * M_PI / std::abs(gp)) /
                          std::sqrt(std::pow(12 * M_PI, 3) * rr->A.vol * rr->B.vol *
                                    rr->C.vol);
            t.maslov = (1 + s2 + s3) * M_PI / 4 + (gp > 0 ? 1 : -1) * M_PI / 4;
            t.theta = ang->theta;
            t.phi12 = ang->phi12;
            t.phi13 = ang->phi13;
            t.physical = (s2 == 1 && s3 == 1 && m == 1);
            out.push_back(t);
        }
    }
    (void)Xcfg_scale;
    // physical root first, then by X
    std::stable_sort(out.begin(), out.end(),
                     [](const NineJStationaryTerm& a, const NineJStationaryTerm& b) {
                         if (a.physical != b.physical) return a.physical;
                         return a.X < b.X;
                     });
    return out;
}

NineJLengths lengths_of(const NineJConfig& c) {
    return NineJLengths{c.J1.norm(), c.J2.norm(), c.J3.norm(), c.J4.norm(),
                        c.J12.norm(), c.J34.norm(), c.J13.norm(), c.J24.norm(),
                        c.J7.norm()};
}

double nine_j_action_S1(const NineJConfig& c) {
    const double Xcfg = (c.J1 + c.J7).norm();
    for (const auto& t : nine_j_stationary_terms(lengths_of(c))) {
        if (t.physical && std::abs(t.X - Xcfg) < 1e-6 * std::max(1.0, Xcfg))
            return t.action;
    }
    throw CausticDegenerate("primary nine-j stationary point not found");
}

double nine_j_action_S2(const NineJConfig& c) {
    for (const auto& t : nine_j_stationary_terms(lengths_of(c))) {
        if (!t.physical) return t.action;
    }
    throw CausticDegenerate("secondary nine-j stationary point not found");
}

} // namespace w15j
