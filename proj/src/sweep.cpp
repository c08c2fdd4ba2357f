#include "w15j/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace w15j {

std::optional<std::pair<HalfInt, HalfInt>> admissible_window(const FifteenJLabels& l,
                                                             Label15 varied) {
    // parity of the varied label is pinned by any triad containing it
    FifteenJLabels probe = l;
    const auto triads = fifteenj_triads();
    int parity = -1;
    for (const auto& t : triads) {
        int sum = 0;
        bool has = false;
        for (Label15 k : t) {
            if (k == varied) { has = true; continue; }
            sum += l[k].twice();
        }
        if (has) { parity = sum % 2; break; }
    }
    if (parity < 0) return std::nullopt;

    // conservative upper bound on the scan
    int tmax = 0;
    for (int i = 0; i < kNumLabels15; ++i) tmax = std::max(tmax, l.j[i].twice());
    tmax = 2 * tmax + 2;

    int lo = -1, hi = -1;
    for (int t = parity; t <= tmax; t += 2) {
        probe[varied] = HalfInt::from_twice(t);
        if (admissible(probe)) {
            if (lo < 0) lo = t;
            hi = t;
        } else if (lo >= 0) {
            break;  // contiguous window ended
        }
    }
    if (lo < 0) return std::nullopt;
    return std::make_pair(HalfInt::from_twice(lo), HalfInt::from_twice(hi));
}

SweepResult run_sweep(const SweepSpec& spec, SymbolCache& cache, unsigned threads) {
    check_small_flags(spec.labels, spec.formula);
    auto window = spec.range ? spec.range : admissible_window(spec.labels, spec.varied);
    SweepResult out;
    if (!window) return out;

    std::vector<int> points;
    for (int t = window->first.twice(); t <= window->second.twice(); t += 2)
        points.push_back(t);
    out.rows.resize(points.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, points.size() ? points.size() : 1);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) break;
            FifteenJLabels l = spec.labels;
            l[spec.varied] = HalfInt::from_twice(points[i]);
            SweepRow row;
            row.varied = l[spec.varied];
            if (!admissible(l)) {
                row.regime = Regime::Forbidden;
                out.rows[i] = row;
                continue;
            }
            row.exact = wigner_15j_first(l, cache).to_double();
            const AsymptoticResult a = asymp_eval(l, spec.formula);
            row.asymptotic = a.value;
            row.regime = a.regime;
            row.abs_err = std::abs(row.asymptotic - row.exact);
            row.rel_err = row.abs_err / std::max(std::abs(row.exact), kRelFloor);
            out.rows[i] = row;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    out.summary = summarize(out.rows);
    return out;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
    SweepSummary s;
    s.rows = rows.size();
    const std::size_t q = rows.size() / 4;
    std::vector<double> rels;
    double num2 = 0, den2 = 0;
    double prev_exact = 0, prev_asym = 0;
    bool have_prev = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        if (r.regime != Regime::Allowed) { have_prev = false; continue; }
        ++s.allowed;
        if (have_prev) {
            if (r.exact * prev_exact < 0) ++s.exact_sign_changes;
            if (r.asymptotic * prev_asym < 0) ++s.asym_sign_changes;
        }
        prev_exact = r.exact;
        prev_asym = r.asymptotic;
        have_prev = true;
        if (i < q || i >= rows.size() - q) continue;  // central half-window only
        rels.push_back(r.rel_err);
        num2 += (r.asymptotic - r.exact) * (r.asymptotic - r.exact);
        den2 += r.exact * r.exact;
        if (r.exact != 0 && r.asymptotic != 0 && r.exact * r.asymptotic < 0)
            ++s.sign_mismatches;
    }
    if (!rels.empty()) {
        double ss = 0;
        for (double v : rels) ss += v * v;
        s.rms_rel = std::sqrt(ss / rels.size());
        std::sort(rels.begin(), rels.end());
        s.median_rel = rels[rels.size() / 2];
        s.max_rel = rels.back();
        s.curve_rel = den2 > 0 ? std::sqrt(num2 / den2) : 0;
    }
    return s;
}

std::string sweep_csv_header(Label15 varied) {
    return std::string("two_") + label15_name(varied) +
           ",exact,asymptotic,abs_err,rel_err,regime";
}

std::string sweep_row_csv(const SweepRow& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%s", r.varied.twice(),
                  r.exact, r.asymptotic, r.abs_err, r.rel_err, regime_name(r.regime));
    return buf;
}

} // namespace w15j
