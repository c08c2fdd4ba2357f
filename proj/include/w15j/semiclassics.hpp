#pragma once

#include "w15j/fifteenj.hpp"
#include "w15j/geometry.hpp"

#include <map>
#include <string>

namespace w15j {

enum class Regime { Allowed, Forbidden, Caustic };
const char* regime_name(Regime r);

struct AsymptoticResult {
    double value = 0;
    Regime regime = Regime::Allowed;
    std::map<std::string, double> diagnostics;
};

// Sum over the six edges of (j + 1/2) * external dihedral; the edge -> label
// map pairs each tetrahedron edge with its half-integer label.
double ponzano_regge_phase(const EmbeddedTetrahedron& t,
                           const std::map<TetEdge, HalfInt>& edge_j);

// Formula selection and the small-spin flags expected on the labels.
enum class Formula { TwoSmall, ThreeSmall, FourSmall };
const char* formula_name(Formula f);
Formula formula_from_name(const std::string& s);
// The label slots that must be flagged small for a formula.
std::array<Label15, 4> small_slots(Formula f);  // unused trailing slots = J7
// Throws std::invalid_argument when the flags do not match the formula.
void check_small_flags(const FifteenJLabels& l, Formula f);

AsymptoticResult asymp_four_small(const FifteenJLabels& l);
AsymptoticResult asymp_three_small(const FifteenJLabels& l);
AsymptoticResult asymp_two_small(const FifteenJLabels& l);

AsymptoticResult asymp_eval(const FifteenJLabels& l, Formula f);

} // namespace w15j
