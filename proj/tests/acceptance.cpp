// Acceptance suite: one pass/fail line per criterion, exit code = #failures.
#include "w15j/config_file.hpp"
#include "w15j/fifteenj.hpp"
#include "w15j/nine_j_actions.hpp"
#include "w15j/semiclassics.hpp"
#include "w15j/sweep.hpp"
#include "w15j/wigner.hpp"
#include "w15j/wigner_d.hpp"

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

using namespace w15j;

namespace {

HalfInt H(int t) { return HalfInt::from_twice(t); }

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s]: %s  (%s)\n", idx, name, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion1_oracle_equivalence(SymbolCache& cache) {
    using L = Label15;
    long cases = 0, mismatches = 0;
    const int M = 4;  // doubled bound: all labels <= 2
    for (int t1 = 0; t1 <= M; ++t1)
    for (int t2 = 0; t2 <= M; ++t2)
    for (int t12 = std::abs(t1 - t2); t12 <= std::min(t1 + t2, M); t12 += 2)
    for (int t5 = 0; t5 <= M; ++t5)
    for (int t125 = std::abs(t12 - t5); t125 <= std::min(t12 + t5, M); t125 += 2)
    for (int t6 = 0; t6 <= M; ++t6)
    for (int t1256 = std::abs(t125 - t6); t1256 <= std::min(t125 + t6, M); t1256 += 2)
    for (int t3 = 0; t3 <= M; ++t3)
    for (int t4 = 0; t4 <= M; ++t4)
    for (int t34 = std::abs(t3 - t4); t34 <= std::min(t3 + t4, M); t34 += 2)
    for (int t13 = std::abs(t1 - t3); t13 <= std::min(t1 + t3, M); t13 += 2)
    for (int t135 = std::abs(t13 - t5); t135 <= std::min(t13 + t5, M); t135 += 2)
    for (int t1356 = std::abs(t135 - t6); t1356 <= std::min(t135 + t6, M); t1356 += 2)
    for (int t24 = std::abs(t2 - t4); t24 <= std::min(t2 + t4, M); t24 += 2) {
        const int lo = std::max(std::abs(t1256 - t34), std::abs(t1356 - t24));
        const int hi = std::min({t1256 + t34, t1356 + t24, M});
        for (int t7 = lo; t7 <= hi; t7 += 2) {
            FifteenJLabels l;
            l[L::J1] = H(t1); l[L::J2] = H(t2); l[L::J12] = H(t12);
            l[L::J125] = H(t125); l[L::J1256] = H(t1256);
            l[L::J3] = H(t3); l[L::J4] = H(t4); l[L::J34] = H(t34);
            l[L::J135] = H(t135); l[L::J1356] = H(t1356);
            l[L::J13] = H(t13); l[L::J24] = H(t24);
            l[L::J5] = H(t5); l[L::J6] = H(t6); l[L::J7] = H(t7);
            if (!admissible(l)) continue;
            ++cases;
            if (!(wigner_15j_first(l, cache) == contract_moebius_oracle(l)))
                ++mismatches;
        }
    }
    report(1, "oracle equivalence, exhaustive labels <= 2", mismatches == 0 && cases > 1000,
           fmt("%ld admissible sets, %ld mismatches", cases, mismatches));
}

// ---------------------------------------------------------------- criterion 2
void criterion2_exact_identities(SymbolCache& cache) {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> d(0, 5);
    long bad = 0;

    // 6j orthogonality, 500 instances
    int done = 0;
    while (done < 500) {
        const int ta = d(rng), tb = d(rng), tc = d(rng), td = d(rng);
        std::vector<int> ps;
        for (int tp = std::max(std::abs(ta - td), std::abs(tb - tc));
             tp <= std::min(ta + td, tb + tc); tp += 2)
            ps.push_back(tp);
        if (ps.empty()) continue;
        const int tp = ps[rng() % ps.size()];
        const int tq = ps[rng() % ps.size()];
        AlgebraicNumber acc;
        for (int tx = std::max(std::abs(ta - tb), std::abs(tc - td));
             tx <= std::min(ta + tb, tc + td); tx += 2) {
            AlgebraicNumber t = wigner_6j(H(ta), H(tb), H(tx), H(tc), H(td), H(tp), cache) *
                                wigner_6j(H(ta), H(tb), H(tx), H(tc), H(td), H(tq), cache);
            t.scale(tx + 1);
            acc += t;
        }
        const bool ok = (tp == tq)
                            ? acc == AlgebraicNumber::from_rational(mpq_class(1, tp + 1))
                            : acc.is_zero();
        if (!ok) ++bad;
        ++done;
    }

    // Biedenharn-Elliott, 500 instances
    done = 0;
    while (done < 500) {
        const int ta = d(rng), tb = d(rng), te = d(rng), tf = d(rng);
        std::vector<std::array<int, 5>> opts;
        for (int tp = 0; tp <= 8 && opts.size() < 50; ++tp)
            for (int tq = 0; tq <= 8 && opts.size() < 50; ++tq)
                for (int tr = 0; tr <= 8 && opts.size() < 50; ++tr)
                    for (int tc = 0; tc <= 8 && opts.size() < 50; ++tc)
                        for (int td2 = 0; td2 <= 8; ++td2) {
                            if (!triangle_ok(H(tp), H(tq), H(tr)) ||
                                !triangle_ok(H(tp), H(ta), H(td2)) ||
                                !triangle_ok(H(te), H(tq), H(td2)) ||
                                !triangle_ok(H(te), H(ta), H(tr)) ||
                                !triangle_ok(H(tp), H(tb), H(tc)) ||
                                !triangle_ok(H(tf), H(tq), H(tc)) ||
                                !triangle_ok(H(tf), H(tb), H(tr)))
                                continue;
                            opts.push_back({tp, tq, tr, tc, td2});
                            if (opts.size() >= 50) break;
                        }
        if (opts.empty()) continue;
        const auto [tp, tq, tr, tc, td2] = opts[rng() % opts.size()];
        AlgebraicNumber lhs;
        for (int tx = 0; tx <= 40; ++tx) {
            const AlgebraicNumber t1 =
                wigner_6j(H(ta), H(tb), H(tx), H(tc), H(td2), H(tp), cache);
            if (t1.is_zero()) continue;
            const AlgebraicNumber t2 =
                wigner_6j(H(tc), H(td2), H(tx), H(te), H(tf), H(tq), cache);
            if (t2.is_zero()) continue;
            const AlgebraicNumber t3 =
                wigner_6j(H(te), H(tf), H(tx), H(tb), H(ta), H(tr), cache);
            if (t3.is_zero()) continue;
            AlgebraicNumber t = t1 * t2;
            t *= t3;
            t.scale(mpq_class(
                sign_from_twice(static_cast<long>(ta) + tb + tc + td2 + te + tf + tp + tq + tr + tx) *
                (tx + 1)));
            lhs += t;
        }
        const AlgebraicNumber rhs =
            wigner_6j(H(tp), H(tq), H(tr), H(te), H(ta), H(td2), cache) *
            wigner_6j(H(tp), H(tq), H(tr), H(tf), H(tb), H(tc), cache);
        if (!(lhs == rhs)) ++bad;
        ++done;
    }

    // 9j zero-spin collapse, 200 instances
    done = 0;
    while (done < 200) {
        const int ta = d(rng), tb = d(rng), td2 = d(rng), te = d(rng);
        std::vector<std::pair<int, int>> opts;
        for (int tc = std::abs(ta - tb); tc <= ta + tb; tc += 2)
            for (int tg = std::abs(ta - td2); tg <= ta + td2; tg += 2) {
                if (!triangle_ok(H(td2), H(te), H(tc))) continue;
                if (!triangle_ok(H(tb), H(te), H(tg))) continue;
                opts.push_back({tc, tg});
            }
        if (opts.empty()) continue;
        const auto [tc, tg] = opts[rng() % opts.size()];
        const AlgebraicNumber nine = wigner_9j(H(ta), H(tb), H(tc), H(td2), H(te),
                                               H(tc), H(tg), H(tg), H(0), cache);
        AlgebraicNumber six = wigner_6j(H(ta), H(tb), H(tc), H(te), H(td2), H(tg), cache);
        mpz_class dd = mpz_class(tc + 1) * (tg + 1);
        mpz_class s = 1, r = 1, m = dd;
        for (long p = 2; p * p <= m; ++p) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            for (int k = 0; k < e / 2; ++k) s *= p;
            if (e % 2) r *= p;
        }
        if (m > 1) r *= m;
        six *= AlgebraicNumber::term(mpq_class(sign_from_twice(tb + tc + td2 + tg), s * r), r);
        if (!(nine == six)) ++bad;
        ++done;
    }

    // 15j double-zero collapse, 200 instances
    done = 0;
    std::uniform_int_distribution<int> d4(0, 4);
    while (done < 200) {
        using L = Label15;
        FifteenJLabels l;
        auto pick = [&](int a, int b) -> int {
            std::vector<int> opts2;
            for (int t = std::abs(a - b); t <= std::min(a + b, 8); t += 2)
                opts2.push_back(t);
            return opts2.empty() ? -1 : static_cast<int>(opts2[rng() % opts2.size()]);
        };
        const int t1 = d4(rng), t2 = d4(rng), t3 = d4(rng), t4 = d4(rng);
        l[L::J1] = H(t1); l[L::J2] = H(t2); l[L::J3] = H(t3); l[L::J4] = H(t4);
        l[L::J5] = H(0); l[L::J6] = H(0);
        int t;
        if ((t = pick(t1, t2)) < 0) continue;
        l[L::J12] = l[L::J125] = l[L::J1256] = H(t);
        if ((t = pick(t3, t4)) < 0) continue;
        l[L::J34] = H(t);
        if ((t = pick(t1, t3)) < 0) continue;
        l[L::J13] = l[L::J135] = l[L::J1356] = H(t);
        if ((t = pick(t2, t4)) < 0) continue;
        l[L::J24] = H(t);
        const int lo = std::max(std::abs(l[L::J12].twice() - l[L::J34].twice()),
                                std::abs(l[L::J13].twice() - l[L::J24].twice()));
        const int hi = std::min(l[L::J12].twice() + l[L::J34].twice(),
                                l[L::J13].twice() + l[L::J24].twice());
        if (lo > hi) continue;
        l[L::J7] = H(lo + 2 * static_cast<int>(rng() % ((hi - lo) / 2 + 1)));
        if (!admissible(l)) continue;
        AlgebraicNumber nine = wigner_9j(l[L::J1], l[L::J2], l[L::J12], l[L::J3],
                                         l[L::J4], l[L::J34], l[L::J13], l[L::J24],
                                         l[L::J7], cache);
        nine.scale(mpq_class(1, static_cast<long>(l[L::J12].dim()) * l[L::J13].dim()));
        if (!(wigner_15j_first(l, cache) == nine)) ++bad;
        ++done;
    }

    report(2, "exact-engine identities", bad == 0, fmt("%ld violations", bad));
}

// ------------------------------------------------------------- sweep fixtures
SweepSpec section6_spec() {
    SweepSpec s;
    using L = Label15;
    FifteenJLabels& l = s.labels;
    l[L::J1] = H(1);    l[L::J2] = H(237); l[L::J12] = H(236);
    l[L::J125] = H(238); l[L::J1256] = H(236);
    l[L::J3] = H(189);  l[L::J4] = H(3);   l[L::J34] = H(188);
    l[L::J135] = H(188); l[L::J1356] = H(190);
    l[L::J13] = H(190); l[L::J24] = H(234);
    l[L::J5] = H(2);    l[L::J6] = H(2);
    for (L k : {L::J1, L::J4, L::J5, L::J6}) l.small[static_cast<int>(k)] = true;
    s.formula = Formula::FourSmall;
    return s;
}

SweepSpec section5_spec() {
    SweepSpec s;
    using L = Label15;
    FifteenJLabels& l = s.labels;
    l[L::J1] = H(203);  l[L::J2] = H(207); l[L::J12] = H(192);
    l[L::J125] = H(194); l[L::J1256] = H(196);
    l[L::J3] = H(3);    l[L::J4] = H(199); l[L::J34] = H(200);
    l[L::J135] = H(200); l[L::J1356] = H(202);
    l[L::J13] = H(202); l[L::J24] = H(216);
    l[L::J5] = H(2);    l[L::J6] = H(2);
    for (L k : {L::J3, L::J5, L::J6}) l.small[static_cast<int>(k)] = true;
    s.formula = Formula::ThreeSmall;
    return s;
}

SweepSpec section4_spec() {
    SweepSpec s;
    using L = Label15;
    FifteenJLabels& l = s.labels;
    l[L::J1] = H(197);  l[L::J2] = H(187); l[L::J12] = H(148);
    l[L::J125] = H(150); l[L::J1256] = H(148);
    l[L::J3] = H(173);  l[L::J4] = H(205); l[L::J34] = H(176);
    l[L::J135] = H(192); l[L::J1356] = H(194);
    l[L::J13] = H(190); l[L::J24] = H(180);
    l[L::J5] = H(2);    l[L::J6] = H(2);
    for (L k : {L::J5, L::J6}) l.small[static_cast<int>(k)] = true;
    s.formula = Formula::TwoSmall;
    return s;
}

// ---------------------------------------------------------------- criterion 3
void criterion3_section6(SymbolCache& cache) {
    SweepSpec spec = section6_spec();
    run_sweep(spec, cache);  // warm the cache
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = run_sweep(spec, cache);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto& s = res.summary;
    const bool pass = secs < 60.0 && s.rms_rel <= 0.05 && s.sign_mismatches == 0 &&
                      s.allowed > 100;
    report(3, "section-6 four-small reproduction", pass,
           fmt("warm sweep %.1fs, %zu rows, central rms %.4f, sign mismatches %d",
               secs, s.rows, s.rms_rel, s.sign_mismatches));
}

// ---------------------------------------------------------------- criterion 4
void criterion4_section5(SymbolCache& cache) {
    SweepSpec spec = section5_spec();
    const auto res = run_sweep(spec, cache);
    const auto& s = res.summary;
    const bool pass = s.rms_rel <= 0.15 && s.exact_sign_changes == s.asym_sign_changes &&
                      s.allowed > 50;
    report(4, "section-5 three-small reproduction", pass,
           fmt("%zu rows, central rms %.4f, sign changes exact %d vs asym %d",
               s.rows, s.rms_rel, s.exact_sign_changes, s.asym_sign_changes));
}

// ---------------------------------------------------------------- criterion 6
bool criterion6_collapse(SymbolCache& cache) {
    using L = Label15;
    struct Set {
        int t1, t2, t3, t4, t12, t34, t13, t24;
    };
    const Set sets[3] = {
        {197, 187, 173, 205, 148, 176, 190, 180},
        {199, 185, 211, 175, 168, 190, 186, 178},
        {181, 209, 197, 189, 172, 196, 182, 186},
    };
    bool all = true;
    std::string detail;
    for (const Set& st : sets) {
        SweepSpec spec;
        FifteenJLabels& l = spec.labels;
        l[L::J1] = H(st.t1); l[L::J2] = H(st.t2); l[L::J3] = H(st.t3); l[L::J4] = H(st.t4);
        l[L::J12] = l[L::J125] = l[L::J1256] = H(st.t12);
        l[L::J34] = H(st.t34);
        l[L::J13] = l[L::J135] = l[L::J1356] = H(st.t13);
        l[L::J24] = H(st.t24);
        l[L::J5] = H(0); l[L::J6] = H(0);
        l.small[static_cast<int>(L::J5)] = true;
        l.small[static_cast<int>(L::J6)] = true;
        spec.formula = Formula::TwoSmall;
        const auto res = run_sweep(spec, cache);
        all = all && res.summary.rms_rel <= 0.10 && res.summary.allowed > 50;
        detail += fmt("[rms %.4f over %zu rows] ", res.summary.rms_rel, res.summary.rows);
    }
    report(6, "nine-j collapse calibration (three label sets)", all, detail);
    return all;
}

// ---------------------------------------------------------------- criterion 5
void criterion5_section4(SymbolCache& cache, bool gate_passed) {
    SweepSpec spec = section4_spec();
    const auto res = run_sweep(spec, cache);
    const auto& s = res.summary;
    const bool pass = gate_passed && s.rms_rel <= 0.10 && s.allowed > 50;
    report(5, "section-4 two-small reproduction", pass,
           fmt("%zu rows, central rms %.4f (9j gate %s)", s.rows, s.rms_rel,
               gate_passed ? "passed" : "FAILED"));
}

// ---------------------------------------------------------------- criterion 7
void criterion7_scaling(SymbolCache& cache) {
    struct Base {
        Formula f;
        // doubled labels at scale 1 (large core) + index offsets for derived
        FifteenJLabels labels;
    };
    using L = Label15;

    auto scale_labels = [](const FifteenJLabels& base, Formula f, int k) {
        FifteenJLabels l = base;
        auto S = [&](L lab) { l[lab] = H(base[lab].twice() * k); };
        auto D = [&](L lab, L from, L basefrom) {
            l[lab] = H(l[from].twice() + (base[lab].twice() - base[basefrom].twice()));
        };
        switch (f) {
            case Formula::TwoSmall:
                for (L x : {L::J1, L::J2, L::J3, L::J4, L::J12, L::J34, L::J13, L::J24})
                    S(x);
                D(L::J125, L::J12, L::J12);
                D(L::J135, L::J13, L::J13);
                l[L::J1256] = H(l[L::J125].twice() +
                                (base[L::J1256].twice() - base[L::J125].twice()));
                l[L::J1356] = H(l[L::J135].twice() +
                                (base[L::J1356].twice() - base[L::J135].twice()));
                break;
            case Formula::ThreeSmall:
                for (L x : {L::J1, L::J2, L::J4, L::J12, L::J24}) S(x);
                D(L::J34, L::J4, L::J4);
                D(L::J13, L::J1, L::J1);
                D(L::J125, L::J12, L::J12);
                D(L::J135, L::J13, L::J13);
                l[L::J1256] = H(l[L::J125].twice() +
                                (base[L::J1256].twice() - base[L::J125].twice()));
                l[L::J1356] = H(l[L::J135].twice() +
                                (base[L::J1356].twice() - base[L::J135].twice()));
                break;
            case Formula::FourSmall:
                for (L x : {L::J2, L::J3}) S(x);
                D(L::J12, L::J2, L::J2);
                D(L::J13, L::J3, L::J3);
                D(L::J24, L::J2, L::J2);
                D(L::J34, L::J3, L::J3);
                D(L::J125, L::J12, L::J12);
                D(L::J135, L::J13, L::J13);
                l[L::J1256] = H(l[L::J125].twice() +
                                (base[L::J1256].twice() - base[L::J125].twice()));
                l[L::J1356] = H(l[L::J135].twice() +
                                (base[L::J1356].twice() - base[L::J135].twice()));
                break;
        }
        return l;
    };

    // subsampled central-window median of rel err
    auto median_err = [&](const FifteenJLabels& labels, Formula f) -> double {
        FifteenJLabels l = labels;
        const auto w = admissible_window(l, L::J7);
        if (!w) return -1;
        const int lo = w->first.twice(), hi = w->second.twice();
        const int clo = lo + (hi - lo) / 4, chi = hi - (hi - lo) / 4;
        std::vector<double> rels;
        const int npts = 15;
        for (int i = 0; i < npts; ++i) {
            int t7 = clo + (chi - clo) * i / (npts - 1);
            if ((t7 - lo) % 2) ++t7;
            l[L::J7] = H(t7);
            if (!admissible(l)) continue;
            const double ex = wigner_15j_first(l, cache).to_double();
            const auto a = asymp_eval(l, f);
            if (a.regime != Regime::Allowed || ex == 0) continue;
            rels.push_back(std::abs(a.value - ex) / std::abs(ex));
        }
        if (rels.size() < 8) return -1;
        std::sort(rels.begin(), rels.end());
        return rels[rels.size() / 2];
    };

    Base bases[3];
    {
        // two-small base ~ half paper scale
        Base& b = bases[0];
        b.f = Formula::TwoSmall;
        FifteenJLabels& l = b.labels;
        l[L::J1] = H(99); l[L::J2] = H(93); l[L::J3] = H(87); l[L::J4] = H(103);
        l[L::J12] = H(74); l[L::J34] = H(88); l[L::J13] = H(96); l[L::J24] = H(90);
        l[L::J125] = H(76); l[L::J1256] = H(74); l[L::J135] = H(98); l[L::J1356] = H(100);
        l[L::J5] = H(2); l[L::J6] = H(2);
        l.small[static_cast<int>(L::J5)] = l.small[static_cast<int>(L::J6)] = true;
    }
    {
        Base& b = bases[1];
        b.f = Formula::ThreeSmall;
        FifteenJLabels& l = b.labels;
        l[L::J1] = H(50); l[L::J2] = H(52); l[L::J4] = H(50);
        l[L::J12] = H(48); l[L::J24] = H(54);
        l[L::J3] = H(3);
        l[L::J34] = H(51); l[L::J13] = H(49);
        l[L::J125] = H(50); l[L::J1256] = H(52);
        l[L::J135] = H(47); l[L::J1356] = H(49);
        l[L::J5] = H(2); l[L::J6] = H(2);
        for (L k : {L::J3, L::J5, L::J6}) l.small[static_cast<int>(k)] = true;
    }
    {
        Base& b = bases[2];
        b.f = Formula::FourSmall;
        FifteenJLabels& l = b.labels;
        l[L::J2] = H(60); l[L::J3] = H(48);
        l[L::J1] = H(1); l[L::J4] = H(3);
        l[L::J12] = H(59); l[L::J13] = H(49); l[L::J24] = H(57); l[L::J34] = H(47);
        l[L::J125] = H(61); l[L::J1256] = H(59); l[L::J135] = H(47); l[L::J1356] = H(49);
        l[L::J5] = H(2); l[L::J6] = H(2);
        for (L k : {L::J1, L::J4, L::J5, L::J6}) l.small[static_cast<int>(k)] = true;
    }

    bool all = true;
    std::string detail;
    for (const Base& b : bases) {
        double med[3];
        for (int k = 0; k < 3; ++k) {
            const int factor = 1 << k;
            med[k] = median_err(scale_labels(b.labels, b.f, factor), b.f);
        }
        const bool ok = med[0] > 0 && med[1] > 0 && med[2] > 0 && med[1] < med[0] &&
                        med[2] < med[1];
        all = all && ok;
        detail += fmt("%s: %.4f > %.4f > %.4f%s  ", formula_name(b.f), med[0], med[1],
                      med[2], ok ? "" : " (NOT monotone)");
    }
    report(7, "scaling law (x2, x4 strictly improve)", all, detail);
}

// ---------------------------------------------------------------- criterion 8
void criterion8_geometry() {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    long bad = 0;
    for (int it = 0; it < 10000; ++it) {
        std::array<Vec3, 4> p;
        for (auto& v : p) v = Vec3(u(rng), u(rng), u(rng));
        if (std::abs((p[1] - p[0]).cross(p[2] - p[0]).dot(p[3] - p[0])) / 6 < 1e-3) {
            --it;
            continue;
        }
        std::array<double, 6> e;
        for (std::size_t k = 0; k < kTetEdges.size(); ++k)
            e[k] = (p[kTetEdges[k].second] - p[kTetEdges[k].first]).norm();
        const auto t = embed_tetrahedron(e);
        for (std::size_t k = 0; k < kTetEdges.size(); ++k)
            if (std::abs(t.edge_vector(kTetEdges[k]).norm() - e[k]) > 1e-12 * e[k]) ++bad;
        if (std::abs(cm_volume(e) - t.volume()) > 1e-10 * std::max(cm_volume(e), 1e-300))
            ++bad;
    }
    const auto reg = embed_tetrahedron({1, 1, 1, 1, 1, 1});
    const auto dih = dihedral_angles(reg);
    bool regok = std::abs(cm_volume({1, 1, 1, 1, 1, 1}) - 1 / (6 * std::sqrt(2.0))) <= 1e-12;
    for (const auto& [e2, d2] : dih)
        regok = regok && std::abs(d2.internal - std::acos(1.0 / 3)) <= 1e-12;
    report(8, "geometry suite", bad == 0 && regok,
           fmt("%ld round-trip violations over 10000 embeddings, regular-tet %s", bad,
               regok ? "ok" : "bad"));
}

// ---------------------------------------------------------------- criterion 9
void criterion9_dmatrix() {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(0.0, M_PI);
    long bad = 0;
    for (int ts = 0; ts <= 6; ++ts)
        for (int tn = -ts; tn <= ts; tn += 2)
            for (int tm = -ts; tm <= ts; tm += 2)
                if (wigner_d(H(ts), H(tn), H(tm), 0.0) != (tn == tm ? 1.0 : 0.0)) ++bad;
    for (int it = 0; it < 100; ++it) {
        const double th = u(rng);
        for (int ts = 0; ts <= 6; ++ts) {
            for (int tn = -ts; tn <= ts; tn += 2) {
                double s = 0;
                for (int tm = -ts; tm <= ts; tm += 2) {
                    const double dv = wigner_d(H(ts), H(tn), H(tm), th);
                    s += dv * dv;
                    if (std::abs(dv - sign_from_twice(tn - tm) *
                                          wigner_d(H(ts), H(tm), H(tn), th)) > 1e-12)
                        ++bad;
                }
                if (std::abs(s - 1.0) > 1e-12) ++bad;
            }
        }
    }
    report(9, "d-matrix suite", bad == 0, fmt("%ld violations", bad));
}

} // namespace

int main() {
    SymbolCache cache;
    const char* env = std::getenv("W15J_CACHE");
    if (env && *env) {
        try {
            cache.load(env);
            std::printf("loaded 6j cache: %s (%zu entries)\n", env, cache.size());
        } catch (const std::exception&) {
        }
    }

    criterion1_oracle_equivalence(cache);
    criterion2_exact_identities(cache);
    criterion3_section6(cache);
    criterion4_section5(cache);
    const bool gate = criterion6_collapse(cache);
    criterion5_section4(cache, gate);
    criterion7_scaling(cache);
    criterion8_geometry();
    criterion9_dmatrix();

    if (env && *env) {
        try {
            cache.store(env);
        } catch (const std::exception&) {
        }
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return g_failures;
}
