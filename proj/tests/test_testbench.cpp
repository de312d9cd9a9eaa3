#include <doctest.h>

#include "ca3cam/oracle.hpp"
#include "ca3cam/testbench.hpp"

using namespace ca3cam;
using namespace ca3cam::testbench;

TEST_SUITE("testbench") {

TEST_CASE("operation demo reproduces the golden timeline") {
    auto run = run_operation_demo();
    for (const auto& m : run.verdict.mismatches) MESSAGE(m);
    CHECK(run.verdict.passed);
    REQUIRE(run.results.size() == 9);
    CHECK(run.results[3].answer == IndexSet{0, 1, 8, 9});
    CHECK(run.results[4].answer == IndexSet{3, 4});
    CHECK(run.results[6].forgotten == IndexSet{5, 6});
    CHECK(run.results[7].answer == IndexSet{1, 3, 4, 8});
    CHECK(run.results[8].answer == IndexSet{4});
    CHECK(run.raster.fired(1, pop::kS1Cue) == IndexSet{0});
    CHECK(run.raster.fired(3, pop::kS1Cue) == IndexSet{0});
    CHECK(run.raster.fired(4, pop::kMergeCue) == IndexSet{0});
    CHECK(run.raster.fired(6, pop::kMergeCue) == IndexSet{0});
}

TEST_CASE("golden anchors are consistent with the frozen raster") {
    auto golden = golden_raster();
    CHECK(snn::is_well_formed(golden));
    for (const auto& a : golden_anchors()) {
        CAPTURE(a.step);
        CAPTURE(a.population);
        CHECK(golden.fired(a.step, a.population) == a.neurons);
    }
}

TEST_CASE("insufficient potentiation fails the demo") {
    CamParams weak;
    weak.stdp.a_plus = 0.1;
    auto run = run_operation_demo(weak);
    CHECK_FALSE(run.verdict.passed);
}

TEST_CASE("binary content encoding") {
    CHECK(binary_content(3, 10) == IndexSet{0, 1});
    CHECK(binary_content(1, 10) == IndexSet{0});
    CHECK(binary_content(5, 10) == IndexSet{0, 2});
    CHECK(binary_content(0, 10).empty());
}

TEST_CASE("memtest on the 5x(5+10) network") {
    auto report = run_memtest(CamConfig{5, 10});
    for (const auto& m : report.mismatches) MESSAGE(m);
    CHECK(report.passed());
    CHECK(report.operations() == 60);
    CHECK(report.learns == 15);
    CHECK(report.forgetting_learns == 10);
    CHECK(report.recalls_by_cue == 15);
    CHECK(report.recalls_by_content == 30);
    CHECK(report.total_steps <= 851);
    CHECK(report.total_steps == 3 * (5 * 7 + 15 * 6) + 1);
    CHECK(report.sweep3_matches_sweep1);

    auto sweep1 = report.recall_table(1);
    REQUIRE(sweep1.size() == 15);
    CHECK(sweep1[2] == IndexSet{0, 1});    // cue 2 stores binary 3
    CHECK(sweep1[5] == IndexSet{0, 2, 4});  // content 0 -> cues 0, 2, 4
    auto sweep2 = report.recall_table(2);
    CHECK(sweep2[0] == difference(iota_set(10), {0}));
    CHECK(report.recall_table(3) == sweep1);
}

TEST_CASE("memtest scales and validates its encoding") {
    auto grid = run_memtest(CamConfig{16, 6});
    CHECK(grid.passed());
    CHECK(grid.operations() == 3 * (16 + 16 + 6));
    CHECK_THROWS_AS(run_memtest(CamConfig{5, 2}), std::invalid_argument);
    CHECK_THROWS_AS(run_memtest(CamConfig{3, 2}), std::invalid_argument);
    CHECK(run_memtest(CamConfig{2, 2}).passed());
}

TEST_CASE("random operations are reproducible and contract-respecting") {
    CamConfig config{8, 12};
    auto a = random_operations(42, 200, config);
    auto b = random_operations(42, 200, config);
    REQUIRE(a.size() == 200);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].body.index() == b[i].body.index());
        CHECK(a[i].start == b[i].start);
    }
    CHECK_NOTHROW(compile(a, config));
    std::size_t kinds[3] = {};
    for (const auto& op : a) ++kinds[op.body.index()];
    for (auto k : kinds) CHECK(k > 30);
}

TEST_CASE("stress runs agree with the oracle") {
    auto single = run_random_stress(1, 1, CamConfig{5, 10});
    CHECK(single.passed());
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto report = run_random_stress(seed, 300, CamConfig{5, 10});
        CHECK_MESSAGE(report.passed(), report.detail);
    }
    auto wide = run_random_stress(9, 300, CamConfig{32, 32});
    CHECK_MESSAGE(wide.passed(), wide.detail);
}

TEST_CASE("compare_results reports differences") {
    OperationResult a, b;
    a.kind = b.kind = OperationKind::recall_by_cue;
    a.answer = {1};
    b.answer = {1};
    CHECK(compare_results(a, b).empty());
    b.answer = {2};
    CHECK_FALSE(compare_results(a, b).empty());
    b.answer = {1};
    a.valid = false;
    CHECK_FALSE(compare_results(a, b).empty());
}

}  // TEST_SUITE
