#include "w15j/config_file.hpp"
#include "w15j/sweep.hpp"

#include <doctest.h>

#include <sstream>

using namespace w15j;

namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

const char* kSection6Config = R"(
# four-small sweep, varied j7
two_j1 = 1
two_j2 = 237
two_j12 = 236
two_j125 = 238
two_j1256 = 236
two_j3 = 189
two_j4 = 3
two_j34 = 188
two_j135 = 188
two_j1356 = 190
two_j13 = 190
two_j24 = 234
two_s5 = 2
two_s6 = 2
small = j1,j4,s5,s6
varied = j7
formula = four_small
)";

} // namespace

TEST_CASE("config parser: happy path and errors") {
    const auto spec = parse_config_text(kSection6Config, "test");
    CHECK(spec.formula == Formula::FourSmall);
    CHECK(spec.varied == Label15::J7);
    CHECK(spec.labels[Label15::J2].twice() == 237);
    CHECK(spec.labels.is_small(Label15::J1));
    CHECK(spec.labels.is_small(Label15::J6));
    CHECK_FALSE(spec.labels.is_small(Label15::J2));

    CHECK_THROWS_AS(parse_config_text("two_j1 = 1\n", "t"), ConfigError);   // missing keys
    CHECK_THROWS_AS(parse_config_text("nonsense\n", "t"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("two_bogus = 3\n", "t"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("two_j1 = -3\n", "t"), ConfigError);
    // formula/small mismatch is a config error before any evaluation
    std::string bad = kSection6Config;
    bad.replace(bad.find("four_small"), 10, "two_small");
    CHECK_THROWS_AS(parse_config_text(bad, "t"), ConfigError);
}

TEST_CASE("admissible window: endpoints inclusive, empty handled") {
    const auto spec = parse_config_text(kSection6Config, "test");
    const auto w = admissible_window(spec.labels, Label15::J7);
    REQUIRE(w.has_value());
    // both j7 triads: (j1256 j34 j7): [48, 424]; (j1356 j24 j7): [44, 424]
    CHECK(w->first.twice() == 48);
    CHECK(w->second.twice() == 424);
    // endpoints are themselves admissible
    FifteenJLabels l = spec.labels;
    l[Label15::J7] = w->first;
    CHECK(admissible(l));
    l[Label15::J7] = w->second;
    CHECK(admissible(l));
    l[Label15::J7] = H(w->first.twice() - 2);
    CHECK_FALSE(admissible(l));

    // contradictory fixed triads -> empty window
    FifteenJLabels bad = spec.labels;
    bad[Label15::J12] = H(300);  // breaks (j1 j2 j12) regardless of j7
    CHECK_FALSE(admissible_window(bad, Label15::J7).has_value());
}

TEST_CASE("sweep: determinism, parallel equals serial, warm equals cold") {
    auto spec = parse_config_text(kSection6Config, "test");
    spec.range = {{H(180), H(220)}};
    SymbolCache cold;
    const auto serial = run_sweep(spec, cold, 1);
    REQUIRE(serial.rows.size() == 21);
    // parallel, warm cache
    const auto parallel = run_sweep(spec, cold, 4);
    REQUIRE(parallel.rows.size() == serial.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(sweep_row_csv(serial.rows[i]) == sweep_row_csv(parallel.rows[i]));
    }
    // cold second cache gives identical bytes
    SymbolCache cold2;
    const auto again = run_sweep(spec, cold2, 3);
    std::ostringstream a, b;
    a << sweep_csv_header(spec.varied) << '\n';
    b << sweep_csv_header(spec.varied) << '\n';
    for (const auto& r : serial.rows) a << sweep_row_csv(r) << '\n';
    for (const auto& r : again.rows) b << sweep_row_csv(r) << '\n';
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 7) == "two_j7,");
    // summary sanity on this central slice
    CHECK(serial.summary.allowed == 21);
    CHECK(serial.summary.rms_rel < 0.10);
}

TEST_CASE("eval paths: inadmissible labels give a triad diagnostic") {
    auto spec = parse_config_text(kSection6Config, "test");
    spec.labels[Label15::J7] = H(46);  // below the window
    CHECK_FALSE(admissible(spec.labels));
    CHECK(!first_triad_violation(spec.labels).empty());
    SymbolCache cache;
    CHECK(wigner_15j_first(spec.labels, cache).is_zero());
}

TEST_CASE("algebraic output re-parsed equals emitted value") {
    SymbolCache cache;
    auto spec = parse_config_text(kSection6Config, "test");
    spec.labels[Label15::J7] = H(200);
    const auto v = wigner_15j_first(spec.labels, cache);
    CHECK(AlgebraicNumber::parse(v.serialize()) == v);
}
