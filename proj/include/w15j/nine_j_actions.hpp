#pragma once

#include "w15j/geometry.hpp"

#include <optional>
#include <vector>

namespace w15j {

// One stationary contribution to the 9j-type WKB sum: the single sum over the
// internal (J1,J7)-channel label x splits into three 6j tetrahedra sharing the
// X-edge; stationary points solve psiA + s2 psiB + s3 psiC = 2 pi m over the
// common embeddable X-range.
struct NineJStationaryTerm {
    int sigma2 = 1, sigma3 = 1, m = 0;
    double X = 0;           // stationary chord length
    double action = 0;      // S = PhiA + s2 PhiB + s3 PhiC - 2 pi m X
    double amplitude = 0;   // (1/4) 2X sqrt(2pi/|g'|) / sqrt((12pi)^3 VA VB VC)
    double maslov = 0;      // (1+s2+s3) pi/4 + sgn(g') pi/4
    double gprime = 0;
    double theta = 0;       // angle(J12,J13) of the glued branch geometry
    double phi12 = 0;       // internal dihedral at J12 (tau tetrahedron)
    double phi13 = 0;
    bool physical = false;  // (+,+,1) root at the real configuration chord
};

// All stationary terms for the given constraint lengths, primary (+,+,1) term
// first when present. Empty when the X-window admits no real gluing.
std::vector<NineJStationaryTerm> nine_j_stationary_terms(const NineJLengths& L);

// Narrow action interface: S^(1) is the physical-configuration action, S^(2)
// the secondary gluing's. Throws CausticDegenerate when the branch is absent.
double nine_j_action_S1(const NineJConfig& c);
double nine_j_action_S2(const NineJConfig& c);

NineJLengths lengths_of(const NineJConfig& c);

} // namespace w15j
