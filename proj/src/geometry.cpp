#include "w15j/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace w15j {

namespace {

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

constexpr double kSinFloor = 1e-8;  // caustic threshold on any needed sine

} // namespace

double EmbeddedTetrahedron::volume() const {
    return std::abs((vertex[1] - vertex[0])
                        .cross(vertex[2] - vertex[0])
                        .dot(vertex[3] - vertex[0])) / 6.0;
}

double cm_volume(const std::array<double, 6>& e) {
    for (double d : e)
        if (!(d > 0)) throw std::invalid_argument("cm_volume: nonpositive edge length");
    const long double d01 = e[0], d02 = e[1], d03 = e[2], d12 = e[3], d13 = e[4],
                      d23 = e[5];
    Eigen::Matrix<long double, 5, 5> M;
    auto sq = [](long double x) { return x * x; };
    M << 0, 1, 1, 1, 1,
         1, 0, sq(d01), sq(d02), sq(d03),
         1, sq(d01), 0, sq(d12), sq(d13),
         1, sq(d02), sq(d12), 0, sq(d23),
         1, sq(d03), sq(d13), sq(d23), 0;
    const double cm = static_cast<double>(M.determinant());
    const double scale6 = std::pow(*std::max_element(e.begin(), e.end()), 6);
    if (cm < -1e-12 * scale6)
        throw ClassicallyForbidden("no Euclidean tetrahedron for these edge lengths");
    return std::sqrt(std::max(cm, 0.0) / 288.0);
}

EmbeddedTetrahedron embed_tetrahedron(const std::array<double, 6>& e) {
    cm_volume(e);  // validates (throws ClassicallyForbidden)
    const long double d01 = e[0], d02 = e[1], d03 = e[2], d12 = e[3], d13 = e[4],
                      d23 = e[5];
    EmbeddedTetrahedron t;
    t.vertex[0] = Vec3::Zero();
    t.vertex[1] = Vec3(e[0], 0, 0);
    const long double x2 = (d01 * d01 + d02 * d02 - d12 * d12) / (2 * d01);
    const long double y2s = d02 * d02 - x2 * x2;
    if (y2s <= 0) throw ClassicallyForbidden("degenerate base triangle");
    const long double y2 = std::sqrt(y2s);
    t.vertex[2] = Vec3(static_cast<double>(x2), static_cast<double>(y2), 0);
    const long double x3 = (d01 * d01 + d03 * d03 - d13 * d13) / (2 * d01);
    const long double y3 = (d02 * d02 + d03 * d03 - d23 * d23 - 2 * x2 * x3) / (2 * y2);
    const long double z3s = d03 * d03 - x3 * x3 - y3 * y3;
    if (z3s < 0) throw ClassicallyForbidden("apex not realizable");
    t.vertex[3] = Vec3(static_cast<double>(x3), static_cast<double>(y3),
                       static_cast<double>(std::sqrt(std::max(z3s, 0.0L))));
    for (std::size_t k = 0; k < kTetEdges.size(); ++k) t.length[kTetEdges[k]] = e[k];
    return t;
}

std::map<TetEdge, DihedralPair> dihedral_angles(const EmbeddedTetrahedron& t) {
    const double scale = std::max({t.length.at({0, 1}), t.length.at({0, 2}),
                                   t.length.at({0, 3})});
    if (t.volume() < 1e-10 * scale * scale * scale)
        throw CausticDegenerate("vanishing tetrahedron volume");
    std::map<TetEdge, DihedralPair> out;
    for (const TetEdge& e : kTetEdges) {
        int k = -1, l = -1;
        for (int v = 0; v < 4; ++v) {
            if (v == e.first || v == e.second) continue;
            (k < 0 ? k : l) = v;
        }
        const Vec3 u = t.vertex[e.second] - t.vertex[e.first];
        const Vec3 n1 = (t.vertex[k] - t.vertex[e.first]).cross(u);
        const Vec3 n2 = (t.vertex[l] - t.vertex[e.first]).cross(u);
        const double nn = n1.norm() * n2.norm();
        if (nn < kSinFloor * scale * scale * scale * scale)
            throw CausticDegenerate("degenerate face at a tetrahedron edge");
        // angle between the outward-opening face normals is the internal dihedral
        const double phi = std::acos(clamp1(n1.dot(n2) / nn));
        out[e] = DihedralPair{phi, M_PI - phi};
    }
    return out;
}

namespace {

struct TrianglePlacement {
    // apex direction making triangle (A, B, C): side a from origin with length
    // La, closing side Lb to the point P = (0,0,Lc). cos of the angle at origin.
    double cos_at_origin;
    double sin_at_origin;
};

TrianglePlacement place_side(double La, double Lb, double Lc) {
    const double c = (La * La + Lc * Lc - Lb * Lb) / (2 * La * Lc);
    if (c < -1 || c > 1) throw ClassicallyForbidden("triangle inequality violated");
    return {c, std::sqrt(std::max(0.0, 1 - c * c))};
}

} // namespace

std::pair<NineJConfig, NineJConfig> solve_nine_j_config(const NineJLengths& L) {
    for (double v : {L.J1, L.J2, L.J3, L.J4, L.J12, L.J34, L.J13, L.J24, L.J7})
        if (!(v > 0)) throw std::invalid_argument("nine-j lengths must be positive");
    // coarse feasibility of the two J7 triangles
    auto tri_real = [](double a, double b, double c) {
        return a + b >= c && std::abs(a - b) <= c;
    };
    if (!tri_real(L.J12, L.J34, L.J7) || !tri_real(L.J13, L.J24, L.J7))
        throw ClassicallyForbidden("(J12,J34,J7) or (J13,J24,J7) triangle violated");

    const Vec3 P3(0, 0, L.J7);  // tip of -J7
    const auto t12 = place_side(L.J12, L.J34, L.J7);
    const Vec3 v12(L.J12 * t12.sin_at_origin, 0, L.J12 * t12.cos_at_origin);
    const auto t13 = place_side(L.J13, L.J24, L.J7);

    auto v13_of = [&](double chi) {
        return Vec3(L.J13 * t13.sin_at_origin * std::cos(chi),
                    L.J13 * t13.sin_at_origin * std::sin(chi),
                    L.J13 * t13.cos_at_origin);
    };
    auto residuals = [&](const Eigen::Vector4d& u) {
        const Vec3 j1 = u.tail<3>();
        const Vec3 v13 = v13_of(u[0]);
        const Vec3 j2 = v12 - j1;
        const Vec3 j3 = v13 - j1;
        const Vec3 j4 = (P3 - v12) - j3;
        return Eigen::Vector4d(j1.squaredNorm() - L.J1 * L.J1,
                               j2.squaredNorm() - L.J2 * L.J2,
                               j3.squaredNorm() - L.J3 * L.J3,
                               j4.squaredNorm() - L.J4 * L.J4);
    };

    const double scale2 = std::max({L.J1, L.J2, L.J3, L.J4}) *
                          std::max({L.J1, L.J2, L.J3, L.J4});
    const double tol = 1e-10 * std::max(1.0, scale2);
    Eigen::Vector4d best;
    double best_res = std::numeric_limits<double>::infinity();
    bool found = false;
    for (int seed = 0; seed < 8 && !found; ++seed) {
        Eigen::Vector4d u;
        u[0] = 2 * M_PI * (seed + 0.5) / 8.0;
        const Vec3 j1_0 = v12.normalized() * L.J1 +
                          0.1 * L.J1 * Vec3(std::cos(u[0]), std::sin(u[0]), 0.3);
        u.tail<3>() = j1_0;
        for (int it = 0; it < 200; ++it) {
            const Eigen::Vector4d f = residuals(u);
            const double r = f.cwiseAbs().maxCoeff();
            if (r < best_res) { best_res = r; best = u; }
            if (r < tol) { found = true; break; }
            Eigen::Matrix4d Jm;
            for (int i = 0; i < 4; ++i) {
                Eigen::Vector4d du = Eigen::Vector4d::Zero();
                du[i] = 1e-7 * std::max(1.0, std::abs(u[i]));
                Jm.col(i) = (residuals(u + du) - residuals(u - du)) / (2 * du[i]);
            }
            const Eigen::Vector4d step = Jm.fullPivLu().solve(-f);
            if (!step.allFinite()) break;
            double lam = 1.0;
            Eigen::Vector4d next = u + step;
            for (int back = 0; back < 30; ++back) {
                if (residuals(next).cwiseAbs().maxCoeff() < r) break;
                lam *= 0.5;
                next = u + lam * step;
            }
            u = next;
        }
    }
    if (!found) {
        // distinguish an inconsistent constraint set from solver stagnation:
        // a clean quadratic obstruction shows up as a large stable residual
        if (best_res > 1e-4 * std::max(1.0, scale2))
            throw ClassicallyForbidden("no real nine-j vector configuration");
        throw ConvergenceFailure("nine-j configuration solve stagnated", best_res);
    }

    // canonical branch 1: twist angle in (0, pi), i.e. J13 has y >= 0
    Eigen::Vector4d u = best;
    double chi = std::fmod(u[0], 2 * M_PI);
    if (chi < 0) chi += 2 * M_PI;
    if (std::sin(chi) < 0) {
        chi = 2 * M_PI - chi;
        u[0] = chi;
        u[2] = -u[2];  // mirror J1 in y
    }
    auto build = [&](const Eigen::Vector4d& w, int branch) {
        NineJConfig c;
        c.J1 = w.tail<3>();
        c.J13 = v13_of(w[0]);
        c.J12 = v12;
        c.J2 = c.J12 - c.J1;
        c.J3 = c.J13 - c.J1;
        c.J34 = P3 - v12;
        c.J4 = c.J34 - c.J3;
        c.J7 = -P3;
        c.J24 = P3 - c.J13;
        c.J2p3 = c.J3 - c.J2;
        c.branch = branch;
        c.residual = residuals(w).cwiseAbs().maxCoeff();
        return c;
    };
    NineJConfig b1 = build(u, 1);
    NineJConfig b2 = b1;
    b2.branch = 2;
    for (Vec3* v : {&b2.J1, &b2.J2, &b2.J3, &b2.J4, &b2.J7, &b2.J12, &b2.J34,
                    &b2.J13, &b2.J24, &b2.J2p3})
        v->y() = -v->y();
    return {b1, b2};
}

TwoSmallAngles two_small_angles(const NineJConfig& c) {
    const double J12 = c.J12.norm(), J13 = c.J13.norm();
    auto plane_angle = [](const Vec3& axis, const Vec3& a, const Vec3& b) {
        const Vec3 n1 = axis.cross(a), n2 = axis.cross(b);
        const double nn = n1.norm() * n2.norm();
        if (nn < kSinFloor * axis.squaredNorm() * std::max(a.norm(), b.norm()))
            throw CausticDegenerate("parallel vectors in dihedral angle");
        return M_PI - std::acos(clamp1(n1.dot(n2) / nn));
    };
    TwoSmallAngles out;
    out.phi12 = plane_angle(c.J12, c.J13, c.J7);
    out.phi13 = plane_angle(c.J13, c.J12, c.J7);
    out.theta = std::acos(clamp1(c.J12.dot(c.J13) / (J12 * J13)));
    return out;
}

ThreeSmallAngles three_small_angles(const EmbeddedTetrahedron& t) {
    const auto dih = dihedral_angles(t);
    // edges: (0,1)=J1 (0,2)=J12 (0,3)=J7 (1,2)=J2 (1,3)=J24 (2,3)=J4
    const Vec3 J1 = t.edge_vector({0, 1});
    const Vec3 J12 = t.edge_vector({0, 2});
    const Vec3 J2 = t.vertex[2] - t.vertex[1];
    const Vec3 J4 = t.vertex[3] - t.vertex[2];
    const Vec3 J7 = t.vertex[0] - t.vertex[3];
    auto plane_angle = [&](const Vec3& axis, const Vec3& a, const Vec3& b) {
        const Vec3 n1 = axis.cross(a), n2 = axis.cross(b);
        const double nn = n1.norm() * n2.norm();
        if (nn < kSinFloor) throw CausticDegenerate("parallel vectors in plane angle");
        return M_PI - std::acos(clamp1(n1.dot(n2) / nn));
    };
    ThreeSmallAngles out;
    out.phi1 = dih.at({0, 1}).internal;
    out.phi12 = dih.at({0, 2}).internal;
    out.phi1p = plane_angle(J1, J4, J7);
    out.phi4p = plane_angle(J4, J1, J7);
    out.theta1 = std::acos(clamp1(J1.dot(J4) / (J1.norm() * J4.norm())));
    out.theta2 = std::acos(clamp1(J1.dot(J12) / (J1.norm() * J12.norm())));
    return out;
}

double triangle_exterior_angle(double J2, double J3, double J7) {
    if (!(J2 > 0) || !(J3 > 0) || !(J7 > 0))
        throw std::invalid_argument("triangle sides must be positive");
    const double c = (J2 * J2 + J3 * J3 - J7 * J7) / (2 * J2 * J3);
    if (c < -1 || c > 1) throw ClassicallyForbidden("triangle inequality violated");
    return M_PI - std::acos(c);
}

} // namespace w15j
