#include "w15j/config_file.hpp"
#include "w15j/fifteenj.hpp"
#include "w15j/semiclassics.hpp"
#include "w15j/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitForbidden = 3;
constexpr int kExitConvergence = 4;

std::string cache_path_override(const std::string& cli_value) {
    if (!cli_value.empty()) return cli_value;
    if (const char* env = std::getenv("W15J_CACHE")) return env;
    return {};
}

struct CacheGuard {
    w15j::SymbolCache cache;
    std::string path;
    explicit CacheGuard(const std::string& p) : path(p) {
        if (!path.empty() && std::filesystem::exists(path)) cache.load(path);
    }
    void flush() {
        if (!path.empty()) cache.store(path);
    }
};

int cmd_exact(const std::string& config, const std::string& cache_path) {
    auto spec = w15j::parse_config_file(config);
    if (!spec.range && spec.labels[spec.varied].twice() == 0 &&
        !w15j::admissible(spec.labels)) {
        // fallthrough: evaluated below and reported as zero with diagnostics
    }
    CacheGuard cg(cache_path_override(cache_path));
    const auto& l = spec.labels;
    if (!w15j::admissible(l)) {
        std::cout << "0 (triad violation: " << w15j::first_triad_violation(l) << ")\n";
        return 0;
    }
    const auto v = w15j::wigner_15j_first(l, cg.cache);
    cg.flush();
    std::printf("%s\n%.17g\n", v.serialize().c_str(), v.to_double());
    return 0;
}

int cmd_asymp(const std::string& config, const std::string& cache_path) {
    (void)cache_path;
    auto spec = w15j::parse_config_file(config);
    const auto r = w15j::asymp_eval(spec.labels, spec.formula);
    if (r.regime == w15j::Regime::Forbidden) {
        std::printf("forbidden\n");
        return kExitForbidden;
    }
    std::printf("%.17g (%s)\n", r.value, w15j::regime_name(r.regime));
    return 0;
}

int cmd_window(const std::string& config) {
    auto spec = w15j::parse_config_file(config);
    auto w = w15j::admissible_window(spec.labels, spec.varied);
    if (!w) {
        std::printf("empty\n");
        return kExitForbidden;
    }
    std::printf("two_%s %d..%d\n", w15j::label15_name(spec.varied), w->first.twice(),
                w->second.twice());
    return 0;
}

int cmd_sweep(const std::string& config, const std::string& out_path,
              const std::string& cache_path, unsigned threads) {
    auto spec = w15j::parse_config_file(config);
    CacheGuard cg(cache_path_override(cache_path));
    const auto res = w15j::run_sweep(spec, cg.cache, threads);
    cg.flush();
    if (res.rows.empty()) {
        std::fprintf(stderr, "empty admissible window\n");
        return kExitForbidden;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
        return kExitConfig;
    }
    out << w15j::sweep_csv_header(spec.varied) << '\n';
    for (const auto& r : res.rows) out << w15j::sweep_row_csv(r) << '\n';
    const auto& s = res.summary;
    std::printf("rows %zu allowed %zu\n", s.rows, s.allowed);
    std::printf("central half-window:  rms_rel %.6g  median_rel %.6g  max_rel %.6g  "
                "curve_rel %.6g\n",
                s.rms_rel, s.median_rel, s.max_rel, s.curve_rel);
    std::printf("sign mismatches %d  sign changes exact %d asym %d\n",
                s.sign_mismatches, s.exact_sign_changes, s.asym_sign_changes);
    return 0;
}

int cmd_cache(const std::string& action, const std::string& path) {
    w15j::SymbolCache cache;
    cache.load(path);
    if (action == "stats") {
        std::printf("entries %zu\n", cache.size());
        return 0;
    }
    if (action == "compact") {
        // load canonicalizes and dedupes; rewrite sorted
        cache.store(path);
        std::printf("compacted %zu entries\n", cache.size());
        return 0;
    }
    std::fprintf(stderr, "unknown cache action: %s\n", action.c_str());
    return kExitConfig;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and semiclassical Wigner 15j evaluation"};
    app.require_subcommand(1);

    std::string config, out_path = "sweep.csv", cache_path, cache_action, path;
    unsigned threads = 0;

    auto* exact = app.add_subcommand("exact", "exact 15j for a label set");
    exact->add_option("config", config)->required();
    exact->add_option("--cache", cache_path, "6j cache file");

    auto* asymp = app.add_subcommand("asymp", "asymptotic 15j for a label set");
    asymp->add_option("config", config)->required();

    auto* sweep = app.add_subcommand("sweep", "exact vs asymptotic sweep to CSV");
    sweep->add_option("config", config)->required();
    sweep->add_option("-o,--output", out_path);
    sweep->add_option("--cache", cache_path, "6j cache file");
    sweep->add_option("--threads", threads, "0 = hardware concurrency");

    auto* window = app.add_subcommand("window", "admissible window of the varied label");
    window->add_option("config", config)->required();

    auto* cachecmd = app.add_subcommand("cache", "cache file maintenance");
    cachecmd->add_option("action", cache_action, "stats|compact")->required();
    cachecmd->add_option("path", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (exact->parsed()) return cmd_exact(config, cache_path);
        if (asymp->parsed()) return cmd_asymp(config, cache_path);
        if (sweep->parsed()) return cmd_sweep(config, out_path, cache_path, threads);
        if (window->parsed()) return cmd_window(config);
        if (cachecmd->parsed()) return cmd_cache(cache_action, path);
    } catch (const w15j::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const w15j::ClassicallyForbidden& e) {
        std::fprintf(stderr, "classically forbidden: %s\n", e.what());
        return kExitForbidden;
    } catch (const w15j::ConvergenceFailure& e) {
        std::fprintf(stderr, "convergence failure: %s (best residual %g)\n", e.what(),
                     e.best_residual);
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return 0;
}
