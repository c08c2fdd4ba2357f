#include "w15j/semiclassics.hpp"

#include "w15j/nine_j_actions.hpp"
#include "w15j/wigner_d.hpp"

#include <cmath>

namespace w15j {

namespace {

using L = Label15;

double Jlen(HalfInt j) { return 0.5 * j.twice() + 0.5; }  // J = j + 1/2

// mu/nu index differences; the symbol vanishes identically when out of range.
struct SmallIdx {
    HalfInt mu, nu;
    bool in_range(HalfInt s) const {
        return mu.abs() <= s && nu.abs() <= s;
    }
};

SmallIdx idx5(const FifteenJLabels& l) {
    return {l[L::J125] - l[L::J12], l[L::J135] - l[L::J13]};
}
SmallIdx idx6(const FifteenJLabels& l) {
    return {l[L::J1256] - l[L::J125], l[L::J1356] - l[L::J135]};
}

double dim_product(const FifteenJLabels& l, std::initializer_list<L> which) {
    double p = 1;
    for (L k : which) p *= l[k].dim();
    return p;
}

} // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Allowed: return "allowed";
        case Regime::Forbidden: return "forbidden";
        case Regime::Caustic: return "caustic";
    }
    return "?";
}

const char* formula_name(Formula f) {
    switch (f) {
        case Formula::TwoSmall: return "two_small";
        case Formula::ThreeSmall: return "three_small";
        case Formula::FourSmall: return "four_small";
    }
    return "?";
}

Formula formula_from_name(const std::string& s) {
    if (s == "two_small") return Formula::TwoSmall;
    if (s == "three_small") return Formula::ThreeSmall;
    if (s == "four_small") return Formula::FourSmall;
    throw std::invalid_argument("unknown formula: " + s);
}

std::array<Label15, 4> small_slots(Formula f) {
    switch (f) {
        case Formula::TwoSmall: return {L::J5, L::J6, L::J7, L::J7};
        case Formula::ThreeSmall: return {L::J3, L::J5, L::J6, L::J7};
        case Formula::FourSmall: return {L::J1, L::J4, L::J5, L::J6};
    }
    return {};
}

void check_small_flags(const FifteenJLabels& l, Formula f) {
    std::array<bool, kNumLabels15> want{};
    auto slots = small_slots(f);
    const std::size_t n = (f == Formula::TwoSmall) ? 2 : (f == Formula::ThreeSmall ? 3 : 4);
    for (std::size_t i = 0; i < n; ++i) want[static_cast<int>(slots[i])] = true;
    if (want != l.small)
        throw std::invalid_argument(std::string("small-spin flags do not match formula ") +
                                    formula_name(f));
}

double ponzano_regge_phase(const EmbeddedTetrahedron& t,
                           const std::map<TetEdge, HalfInt>& edge_j) {
    const auto dih = dihedral_angles(t);
    double phase = 0;
    for (const auto& [e, j] : edge_j) phase += Jlen(j) * dih.at(e).external;
    return phase;
}

AsymptoticResult asymp_four_small(const FifteenJLabels& l) {
    check_small_flags(l, Formula::FourSmall);
    AsymptoticResult res;
    const SmallIdx i1{l[L::J12] - l[L::J2], l[L::J13] - l[L::J3]};
    const SmallIdx i4{l[L::J24] - l[L::J2], l[L::J34] - l[L::J3]};
    const SmallIdx i5 = idx5(l), i6 = idx6(l);
    if (!i1.in_range(l[L::J1]) || !i4.in_range(l[L::J4]) ||
        !i5.in_range(l[L::J5]) || !i6.in_range(l[L::J6])) {
        res.value = 0;  // d-matrix selection rule: exact zero
        return res;
    }
    double theta;
    try {
        theta = triangle_exterior_angle(Jlen(l[L::J2]), Jlen(l[L::J3]), Jlen(l[L::J7]));
    } catch (const ClassicallyForbidden&) {
        res.regime = Regime::Forbidden;
        return res;
    }
    const double dd = wigner_d(l[L::J1], i1.nu, i1.mu, theta) *
                      wigner_d(l[L::J4], i4.nu, i4.mu, theta) *
                      wigner_d(l[L::J5], i5.nu, i5.mu, theta) *
                      wigner_d(l[L::J6], i6.nu, i6.mu, theta);
    const long tph = l[L::J2].twice() + l[L::J3].twice() + l[L::J7].twice() +
                     i1.mu.twice() + i4.mu.twice() + i5.mu.twice() + i6.mu.twice();
    const int sgn = sign_from_twice(tph);
    const double denom = dim_product(l, {L::J12, L::J34, L::J13, L::J24, L::J125,
                                         L::J135, L::J1256, L::J1356});
    res.value = sgn * dd / std::sqrt(denom);
    res.diagnostics["theta"] = theta;
    return res;
}

AsymptoticResult asymp_three_small(const FifteenJLabels& l) {
    check_small_flags(l, Formula::ThreeSmall);
    AsymptoticResult res;
    const SmallIdx i3{l[L::J34] - l[L::J4], l[L::J13] - l[L::J1]};
    const SmallIdx i5 = idx5(l), i6 = idx6(l);
    if (!i3.in_range(l[L::J3]) || !i5.in_range(l[L::J5]) || !i6.in_range(l[L::J6])) {
        res.value = 0;
        return res;
    }
    // tetrahedron O,A,B,C: OA=J1 OB=J12 OC=J7 AB=J2 AC=J24 BC=J4
    const std::array<double, 6> edges = {Jlen(l[L::J1]), Jlen(l[L::J12]), Jlen(l[L::J7]),
                                         Jlen(l[L::J2]), Jlen(l[L::J24]), Jlen(l[L::J4])};
    EmbeddedTetrahedron tet;
    try {
        tet = embed_tetrahedron(edges);
    } catch (const ClassicallyForbidden&) {
        res.regime = Regime::Forbidden;
        return res;
    }
    ThreeSmallAngles ang;
    std::map<TetEdge, HalfInt> ej = {{{0, 1}, l[L::J1]},  {{0, 2}, l[L::J12]},
                                     {{0, 3}, l[L::J7]},  {{1, 2}, l[L::J2]},
                                     {{1, 3}, l[L::J24]}, {{2, 3}, l[L::J4]}};
    double pr, V;
    try {
        ang = three_small_angles(tet);
        pr = ponzano_regge_phase(tet, ej);
        V = tet.volume();
    } catch (const CausticDegenerate&) {
        res.regime = Regime::Caustic;
        return res;
    }
    const double s3 = 0.5 * l[L::J3].twice();
    const double dd = wigner_d(l[L::J3], i3.mu, i3.nu, ang.theta1) *
                      wigner_d(l[L::J5], i5.mu, i5.nu, ang.theta2) *
                      wigner_d(l[L::J6], i6.mu, i6.nu, ang.theta2);
    const long tph = l[L::J1].twice() + l[L::J2].twice() + l[L::J4].twice() +
                     l[L::J7].twice() + 2L * l[L::J3].twice() + i3.nu.twice() +
                     i5.mu.twice() + i6.mu.twice();
    const int sgn = sign_from_twice(tph);
    const double mu3 = 0.5 * i3.mu.twice(), nu3 = 0.5 * i3.nu.twice();
    const double mu56 = 0.5 * (i5.mu.twice() + i6.mu.twice());
    const double nu56 = 0.5 * (i5.nu.twice() + i6.nu.twice());
    const double arg = pr + M_PI / 4 - s3 * M_PI + mu3 * ang.phi4p + nu3 * ang.phi1p -
                       mu56 * ang.phi12 - nu56 * ang.phi1;
    const double denom = dim_product(l, {L::J34, L::J13, L::J135, L::J1356,
                                         L::J125, L::J1256});
    res.value = sgn * dd * std::cos(arg) / std::sqrt(denom * 12 * M_PI * V);
    res.diagnostics["pr_phase"] = pr;
    res.diagnostics["volume"] = V;
    res.diagnostics["theta1"] = ang.theta1;
    res.diagnostics["theta2"] = ang.theta2;
    return res;
}

AsymptoticResult asymp_two_small(const FifteenJLabels& l) {
    check_small_flags(l, Formula::TwoSmall);
    AsymptoticResult res;
    const SmallIdx i5 = idx5(l), i6 = idx6(l);
    if (!i5.in_range(l[L::J5]) || !i6.in_range(l[L::J6])) {
        res.value = 0;
        return res;
    }
    const NineJLengths len{Jlen(l[L::J1]),  Jlen(l[L::J2]),  Jlen(l[L::J3]),
                           Jlen(l[L::J4]),  Jlen(l[L::J12]), Jlen(l[L::J34]),
                           Jlen(l[L::J13]), Jlen(l[L::J24]), Jlen(l[L::J7])};
    // the configuration must exist; it also provides residual diagnostics
    try {
        auto [b1, b2] = solve_nine_j_config(len);
        res.diagnostics["config_residual"] = b1.residual;
        res.diagnostics["X1"] = (b1.J1 + b1.J7).norm();
    } catch (const ClassicallyForbidden&) {
        res.regime = Regime::Forbidden;
        return res;
    }
    const auto terms = nine_j_stationary_terms(len);
    bool have_physical = false;
    for (const auto& t : terms) have_physical |= t.physical;
    if (terms.empty() || !have_physical) {
        res.regime = Regime::Caustic;
        return res;
    }
    const double mu56 = 0.5 * (i5.mu.twice() + i6.mu.twice());
    const double nu56 = 0.5 * (i5.nu.twice() + i6.nu.twice());
    const double scale = std::max({len.J1, len.J7, len.J12, len.J13});
    double total = 0;
    int nterm = 0;
    for (const auto& t : terms) {
        // fold caustic: stationary curvature collapsing
        if (std::abs(t.gprime) * t.X < 2e-3) {
            res.regime = Regime::Caustic;
            return res;
        }
        const double dd = wigner_d(l[L::J5], i5.mu, i5.nu, t.theta) *
                          wigner_d(l[L::J6], i6.mu, i6.nu, t.theta);
        total += dd * t.amplitude *
                 std::cos(t.action + t.maslov - mu56 * t.phi12 - nu56 * t.phi13);
        res.diagnostics["S" + std::to_string(++nterm)] = t.action;
        res.diagnostics["amp" + std::to_string(nterm)] = t.amplitude;
        res.diagnostics["theta" + std::to_string(nterm)] = t.theta;
    }
    (void)scale;
    const int sigma0 = ((l[L::J1].twice() + l[L::J7].twice()) % 2) ? -1 : 1;
    const int sgn_mu = sign_from_twice(i5.mu.twice() + i6.mu.twice());
    const double denom = dim_product(l, {L::J125, L::J135, L::J1256, L::J1356});
    res.value = sigma0 * sgn_mu * total / std::sqrt(denom);
    return res;
}

AsymptoticResult asymp_eval(const FifteenJLabels& l, Formula f) {
    switch (f) {
        case Formula::TwoSmall: return asymp_two_small(l);
        case Formula::ThreeSmall: return asymp_three_small(l);
        case Formula::FourSmall: return asymp_four_small(l);
    }
    throw std::logic_error("bad formula");
}

} // namespace w15j
