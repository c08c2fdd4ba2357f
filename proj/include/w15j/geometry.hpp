#pragma once

#include "w15j/half_int.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <stdexcept>
#include <utility>

namespace w15j {

using Vec3 = Eigen::Vector3d;

// No Euclidean realization exists (negative Cayley-Menger / triangle failure).
struct ClassicallyForbidden : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Degenerate geometry at a caustic (vanishing volume / parallel vectors).
struct CausticDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Root finding stagnated; carries the best residual reached.
struct ConvergenceFailure : std::runtime_error {
    ConvergenceFailure(const std::string& what, double residual)
        : std::runtime_error(what), best_residual(residual) {}
    double best_residual;
};

// Edge between tetrahedron vertices i < j (vertices 0..3).
using TetEdge = std::pair<int, int>;

// Edge order used by all six-length interfaces:
// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
constexpr std::array<TetEdge, 6> kTetEdges = {
    TetEdge{0, 1}, TetEdge{0, 2}, TetEdge{0, 3},
    TetEdge{1, 2}, TetEdge{1, 3}, TetEdge{2, 3}};

struct EmbeddedTetrahedron {
    std::array<Vec3, 4> vertex;
    std::map<TetEdge, double> length;

    Vec3 edge_vector(const TetEdge& e) const { return vertex[e.second] - vertex[e.first]; }
    double volume() const;
};

struct DihedralPair {
    double internal;  // phi in [0, pi]
    double external;  // psi = pi - phi
};

// V = sqrt(CM/288) >= 0; throws ClassicallyForbidden when CM < 0.
double cm_volume(const std::array<double, 6>& edge_lengths);

// Vertex 0 at origin, 1 on +x, 2 in the xy plane (y >= 0), 3 at z >= 0.
EmbeddedTetrahedron embed_tetrahedron(const std::array<double, 6>& edge_lengths);

// Internal/external dihedral at each of the six edges. Throws CausticDegenerate
// on (near-)zero volume.
std::map<TetEdge, DihedralPair> dihedral_angles(const EmbeddedTetrahedron& t);

// Vector realization of the 9j constraint set: |Ji| fixed, |J1+J2|=J12,
// |J3+J4|=J34, |J1+J3|=J13, |J2+J4|=J24, J1+J2+J3+J4+J7 = 0.
struct NineJConfig {
    Vec3 J1, J2, J3, J4, J7;
    Vec3 J12, J34, J13, J24;  // derived sums
    Vec3 J2p3;                // J3 - J2
    int branch = 1;           // 2 is the mirror image (y -> -y)
    double residual = 0.0;

    double triple(const Vec3& a, const Vec3& b, const Vec3& c) const {
        return a.dot(b.cross(c));
    }
};

struct NineJLengths {
    double J1, J2, J3, J4, J12, J34, J13, J24, J7;
};

// Gauge: J7 along -z, the (J12,J34) triangle in the xz half-plane (x >= 0).
// Damped Newton over (twist of the (J13,J24) triangle, J1), deterministic
// multi-start. Branch 2 mirrors branch 1 in y.
std::pair<NineJConfig, NineJConfig> solve_nine_j_config(const NineJLengths& L);

struct TwoSmallAngles {
    double phi12, phi13, theta;
};
TwoSmallAngles two_small_angles(const NineJConfig& c);

struct ThreeSmallAngles {
    double phi1, phi12, phi1p, phi4p, theta1, theta2;
};
// Tetrahedron vertex assignment: O, A=O+J1, B with OB=J12/AB=J2,
// C with OC=J7/BC=J4/AC=J24. Edge vectors are read off the embedding.
ThreeSmallAngles three_small_angles(const EmbeddedTetrahedron& t);

// Exterior angle between J2 and J3 when J2+J3+J7 = 0.
double triangle_exterior_angle(double J2, double J3, double J7);

} // namespace w15j
