#pragma once

#include "w15j/fifteenj.hpp"
#include "w15j/semiclassics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace w15j {

struct SweepSpec {
    FifteenJLabels labels;
    Label15 varied = Label15::J7;
    // inclusive doubled-label range; defaults to the full admissible window
    std::optional<std::pair<HalfInt, HalfInt>> range;
    Formula formula = Formula::TwoSmall;
};

struct SweepRow {
    HalfInt varied;
    double exact = 0;
    double asymptotic = 0;
    double abs_err = 0;
    double rel_err = 0;
    Regime regime = Regime::Allowed;
};

struct SweepSummary {
    std::size_t rows = 0;
    std::size_t allowed = 0;
    // over Allowed rows of the central half-window (outer quarters dropped)
    double rms_rel = 0;
    double median_rel = 0;
    double max_rel = 0;
    // curve-level metric over the same rows: ||asym-exact||_2 / ||exact||_2
    double curve_rel = 0;
    int sign_mismatches = 0;
    int exact_sign_changes = 0;
    int asym_sign_changes = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

// Maximal contiguous admissible range of the varied label (steps of 1), with
// the other fourteen labels fixed. nullopt when empty.
std::optional<std::pair<HalfInt, HalfInt>> admissible_window(const FifteenJLabels& l,
                                                             Label15 varied);

// One row per varied value; rows in varied order regardless of thread count.
SweepResult run_sweep(const SweepSpec& spec, SymbolCache& cache,
                      unsigned threads = 0);

// rel_err floor used by the rows
constexpr double kRelFloor = 1e-300;

std::string sweep_csv_header(Label15 varied);
std::string sweep_row_csv(const SweepRow& r);
// Rows over the central half-window (outer quarters dropped), Allowed only.
SweepSummary summarize(const std::vector<SweepRow>& rows);

} // namespace w15j
