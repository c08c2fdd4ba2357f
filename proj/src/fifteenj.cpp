#include "w15j/fifteenj.hpp"

#include "w15j/wigner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace w15j {

namespace {
constexpr const char* kNames[kNumLabels15] = {
    "j1", "j2", "j12", "j125", "j1256",
    "j3", "j4", "j34", "j135", "j1356",
    "j13", "j24", "s5", "s6", "j7",
};
}

const char* label15_name(Label15 l) { return kNames[static_cast<int>(l)]; }

Label15 label15_from_name(const std::string& name) {
    for (int i = 0; i < kNumLabels15; ++i) {
        if (name == kNames[i]) return static_cast<Label15>(i);
    }
    // accept j5/j6 as aliases for s5/s6
    if (name == "j5") return Label15::J5;
    if (name == "j6") return Label15::J6;
    throw std::invalid_argument("unknown 15j label: " + name);
}

std::array<std::array<Label15, 3>, 10> fifteenj_triads() {
    using L = Label15;
    return {{{L::J1, L::J2, L::J12},
             {L::J12, L::J5, L::J125},
             {L::J125, L::J6, L::J1256},
             {L::J3, L::J4, L::J34},
             {L::J1256, L::J34, L::J7},
             {L::J1, L::J3, L::J13},
             {L::J13, L::J5, L::J135},
             {L::J135, L::J6, L::J1356},
             {L::J2, L::J4, L::J24},
             {L::J1356, L::J24, L::J7}}};
}

bool admissible(const FifteenJLabels& l) {
    for (const auto& t : fifteenj_triads())
        if (!triangle_ok(l[t[0]], l[t[1]], l[t[2]])) return false;
    return true;
}

std::string first_triad_violation(const FifteenJLabels& l) {
    for (const auto& t : fifteenj_triads()) {
        if (!triangle_ok(l[t[0]], l[t[1]], l[t[2]])) {
            std::ostringstream os;
            os << '(' << label15_name(t[0]) << '=' << l[t[0]].str() << ", "
               << label15_name(t[1]) << '=' << l[t[1]].str() << ", "
               << label15_name(t[2]) << '=' << l[t[2]].str() << ')';
            return os.str();
        }
    }
    return {};
}

namespace {

// Memoized CG lookup for the oracle.
struct CgKey {
    int a, ma, b, mb, c, mc;
    bool operator<(const CgKey& o) const {
        return std::tie(a, ma, b, mb, c, mc) < std::tie(o.a, o.ma, o.b, o.mb, o.c, o.mc);
    }
};

class CgTable {
public:
    const AlgebraicNumber& get(HalfInt a, HalfInt ma, HalfInt b, HalfInt mb,
                               HalfInt c, HalfInt mc) {
        CgKey k{a.twice(), ma.twice(), b.twice(), mb.twice(), c.twice(), mc.twice()};
        auto it = map_.find(k);
        if (it == map_.end())
            it = map_.emplace(k, clebsch_gordan(a, ma, b, mb, c, mc)).first;
        return it->second;
    }

private:
    std::map<CgKey, AlgebraicNumber> map_;
};

} // namespace

AlgebraicNumber contract_moebius_oracle(const FifteenJLabels& l) {
    using L = Label15;
    for (int i = 0; i < kNumLabels15; ++i) {
        if (l.j[i].twice() > 6)
            throw OracleSizeError("oracle cost guard: label " +
                                  std::string(kNames[i]) + " exceeds 3");
        if (l.j[i].twice() < 0)
            throw std::invalid_argument("negative label");
    }
    if (!admissible(l)) return {};

    const HalfInt j1 = l[L::J1], j2 = l[L::J2], j3 = l[L::J3], j4 = l[L::J4];
    const HalfInt s5 = l[L::J5], s6 = l[L::J6], j7 = l[L::J7];
    const HalfInt j12 = l[L::J12], j125 = l[L::J125], j1256 = l[L::J1256];
    const HalfInt j34 = l[L::J34], j13 = l[L::J13], j135 = l[L::J135];
    const HalfInt j1356 = l[L::J1356], j24 = l[L::J24];

    // <b|a> at the stretched total (j7, M=j7); the singlet closure with the
    // spectator j7 makes the value M-independent.
    const int tM = j7.twice();
    CgTable cg;
    AlgebraicNumber acc;
    for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2) {
        const HalfInt m1 = HalfInt::from_twice(tm1);
        for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2) {
            const int tm12 = tm1 + tm2;
            if (std::abs(tm12) > j12.twice()) continue;
            const auto& c1 = cg.get(j1, m1, j2, HalfInt::from_twice(tm2), j12,
                                    HalfInt::from_twice(tm12));
            if (c1.is_zero()) continue;
            for (int tm5 = -s5.twice(); tm5 <= s5.twice(); tm5 += 2) {
                const int tm125 = tm12 + tm5;
                if (std::abs(tm125) > j125.twice()) continue;
                const auto& c2 = cg.get(j12, HalfInt::from_twice(tm12), s5,
                                        HalfInt::from_twice(tm5), j125,
                                        HalfInt::from_twice(tm125));
                if (c2.is_zero()) continue;
                for (int tm6 = -s6.twice(); tm6 <= s6.twice(); tm6 += 2) {
                    const int tm1256 = tm125 + tm6;
                    if (std::abs(tm1256) > j1256.twice()) continue;
                    const auto& c3 = cg.get(j125, HalfInt::from_twice(tm125), s6,
                                            HalfInt::from_twice(tm6), j1256,
                                            HalfInt::from_twice(tm1256));
                    if (c3.is_zero()) continue;
                    for (int tm3 = -j3.twice(); tm3 <= j3.twice(); tm3 += 2) {
                        const int tm13 = tm1 + tm3;
                        if (std::abs(tm13) > j13.twice()) continue;
                        const auto& b1 = cg.get(j1, m1, j3, HalfInt::from_twice(tm3),
                                                j13, HalfInt::from_twice(tm13));
                        if (b1.is_zero()) continue;
                        const int tm135 = tm13 + tm5;
                        if (std::abs(tm135) > j135.twice()) continue;
                        const auto& b2 = cg.get(j13, HalfInt::from_twice(tm13), s5,
                                                HalfInt::from_twice(tm5), j135,
                                                HalfInt::from_twice(tm135));
                        if (b2.is_zero()) continue;
                        const int tm1356 = tm135 + tm6;
                        if (std::abs(tm1356) > j1356.twice()) continue;
                        const auto& b3 = cg.get(j135, HalfInt::from_twice(tm135), s6,
                                                HalfInt::from_twice(tm6), j1356,
                                                HalfInt::from_twice(tm1356));
                        if (b3.is_zero()) continue;
                        const int tm4 = tM - tm1 - tm2 - tm3 - tm5 - tm6;
                        if (std::abs(tm4) > j4.twice()) continue;
                        const int tm34 = tm3 + tm4;
                        if (std::abs(tm34) > j34.twice()) continue;
                        const auto& c4 = cg.get(j3, HalfInt::from_twice(tm3), j4,
                                                HalfInt::from_twice(tm4), j34,
                                                HalfInt::from_twice(tm34));
                        if (c4.is_zero()) continue;
                        const auto& c5 = cg.get(j1256, HalfInt::from_twice(tm1256),
                                                j34, HalfInt::from_twice(tm34), j7,
                                                HalfInt::from_twice(tM));
                        if (c5.is_zero()) continue;
                        const int tm24 = tm2 + tm4;
                        if (std::abs(tm24) > j24.twice()) continue;
                        const auto& b4 = cg.get(j2, HalfInt::from_twice(tm2), j4,
                                                HalfInt::from_twice(tm4), j24,
                                                HalfInt::from_twice(tm24));
                        if (b4.is_zero()) continue;
                        const auto& b5 = cg.get(j1356, HalfInt::from_twice(tm1356),
                                                j24, HalfInt::from_twice(tm24), j7,
                                                HalfInt::from_twice(tM));
                        if (b5.is_zero()) continue;
                        AlgebraicNumber term = c1;
                        term *= c2; term *= c3; term *= c4; term *= c5;
                        term *= b1; term *= b2; term *= b3; term *= b4; term *= b5;
                        acc += term;
                    }
                }
            }
        }
    }
    if (acc.is_zero()) return acc;

    // divide by sqrt of the product of the eight intermediate dimensions
    mpz_class dims = 1;
    for (L k : {L::J12, L::J34, L::J13, L::J24, L::J125, L::J135, L::J1256, L::J1356})
        dims *= l[k].dim();
    // 1/sqrt(D): strip the square part of D exactly via its (small) prime factors
    mpz_class s = 1, r = 1, m = dims;
    for (long p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        for (int q = 0; q < e / 2; ++q) s *= p;
        if (e % 2) r *= p;
    }
    if (m > 1) r *= m;
    acc *= AlgebraicNumber::term(mpq_class(1, s * r), r);
    return acc;
}

AlgebraicNumber wigner_15j_first(const FifteenJLabels& l, SymbolCache& cache) {
    using L = Label15;
    if (!admissible(l)) return {};
    const int t1 = l[L::J1].twice(), t2 = l[L::J2].twice();
    const int t12 = l[L::J12].twice(), t125 = l[L::J125].twice();
    const int t1256 = l[L::J1256].twice();
    const int t3 = l[L::J3].twice(), t4 = l[L::J4].twice();
    const int t34 = l[L::J34].twice(), t135 = l[L::J135].twice();
    const int t1356 = l[L::J1356].twice();
    const int t13 = l[L::J13].twice(), t24 = l[L::J24].twice();
    const int t5 = l[L::J5].twice(), t6 = l[L::J6].twice(), t7 = l[L::J7].twice();

    // global sign pinned against the contraction oracle (see tests):
    // i^{-t1+t2+t125+2*t1256-t3+t4+t34+t135+t24+t5+t6+t7}
    const long n = -static_cast<long>(t1) + t2 + t125 + 2L * t1256 - t3 + t4 +
                   t34 + t135 + t24 + t5 + t6 + t7;
    const int sgn = sign_from_twice(n);

    const int lo = std::max({std::abs(t12 - t13), std::abs(t125 - t135),
                             std::abs(t1256 - t1356), std::abs(t34 - t24),
                             std::abs(t3 - t2)});
    const int hi = std::min({t12 + t13, t125 + t135, t1256 + t1356,
                             t34 + t24, t3 + t2});
    auto H = [](int t) { return HalfInt::from_twice(t); };
    AlgebraicNumber acc;
    for (int tx = lo; tx <= hi; tx += 2) {
        const HalfInt x = H(tx);
        AlgebraicNumber A = wigner_6j(x, H(t12), H(t13), H(t5), H(t135), H(t125), cache);
        if (A.is_zero()) continue;
        AlgebraicNumber B = wigner_6j(x, H(t125), H(t135), H(t6), H(t1356), H(t1256), cache);
        if (B.is_zero()) continue;
        AlgebraicNumber C = wigner_6j(x, H(t1256), H(t1356), H(t7), H(t24), H(t34), cache);
        if (C.is_zero()) continue;
        AlgebraicNumber D = wigner_6j(x, H(t34), H(t24), H(t4), H(t2), H(t3), cache);
        if (D.is_zero()) continue;
        AlgebraicNumber E = wigner_6j(x, H(t2), H(t3), H(t1), H(t13), H(t12), cache);
        if (E.is_zero()) continue;
        A *= B; A *= C; A *= D; A *= E;
        A.scale(mpq_class(tx + 1));
        acc += A;
    }
    acc.scale(mpq_class(sgn));
    return acc;
}

} // namespace w15j
