#include "ca3cam/testbench.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ca3cam/oracle.hpp"

namespace ca3cam::testbench {

const std::vector<GoldenEvent>& golden_anchors() {
    // clang-format off
    static const std::vector<GoldenEvent> anchors = {
        // first learn: cue 0, content {0,1,8,9}
        {1, pop::kS1Cue, {0}},         {1, pop::kS1Cont, {0, 1, 8, 9}},
        {2, pop::kS1Cue, {}},          {2, pop::kS1Cont, {}},
        {3, pop::kS1Cue, {0}},         {3, pop::kS1Cont, {0, 1, 8, 9}},
        {2, pop::kS2Int, {0}},         {2, pop::kS2Cond, {0, 1, 8, 9}},
        {4, pop::kS2Int, {0}},         {4, pop::kS2Cond, {0, 1, 8, 9}},
        {3, pop::kS2Cue, {0}},         {3, pop::kS2Cont, {0, 1, 8, 9}},
        {5, pop::kS2Cue, {0}},         {5, pop::kS2Cont, {0, 1, 8, 9}},
        {4, pop::kMergeCue, {0}},      {4, pop::kMergeCont, {0, 1, 8, 9}},
        {6, pop::kMergeCue, {0}},      {6, pop::kMergeCont, {0, 1, 8, 9}},
        {7, pop::kOutput, {0, 5, 6, 13, 14}},
        // recall by cue 0
        {31, pop::kS1Cue, {0}},        {32, pop::kS1Cont, {0, 1, 8, 9}},
        {33, pop::kS2Int, {0}},        {33, pop::kS2Cond, {}},
        {33, pop::kS2Cue, {0}},        {34, pop::kMergeCue, {0}},
        {35, pop::kMergeCont, {0, 1, 8, 9}},
        {35, pop::kOutput, {0}},       {36, pop::kOutput, {5, 6, 13, 14}},
        // recall by content {6}
        {41, pop::kS1Cont, {6}},       {42, pop::kS2Int, {0}},
        {42, pop::kS2Cond, {6}},       {43, pop::kS2Cont, {6}},
        {44, pop::kS2Cue, {3, 4}},     {44, pop::kMergeCont, {6}},
        {45, pop::kMergeCue, {3, 4}},
        {45, pop::kOutput, {11}},      {46, pop::kOutput, {3, 4}},
        // relearn of cue 3 with content {1,3,4,8}, forgetting {5,6}
        {61, pop::kS1Cue, {3}},        {61, pop::kS1Cont, {1, 3, 4, 8}},
        {62, pop::kS1Cont, {5, 6}},
        {63, pop::kS1Cue, {3}},        {63, pop::kS1Cont, {1, 3, 4, 8}},
        {63, pop::kS2Cue, {3}},        {63, pop::kS2Cont, {1, 3, 4, 8}},
        {64, pop::kS2Cont, {5, 6}},
        {65, pop::kS2Cue, {3}},        {65, pop::kS2Cont, {1, 3, 4, 8}},
        // recalls after the relearn
        {75, pop::kMergeCont, {1, 3, 4, 8}},
        {85, pop::kMergeCue, {4}},
    };
    // clang-format on
    return anchors;
}

std::vector<Operation> operation_demo_ops() {
    return {
        {Learn{{0, {0, 1, 8, 9}}}, 0},
        {Learn{{4, {1, 5, 6}}}, 10},
        {Learn{{3, {4, 5, 6}}}, 20},
        {RecallByCue{0}, 30},
        {RecallByContent{{6}}, 40},
        {RecallByContent{{4, 5}}, 50},
        {Learn{{3, {1, 3, 4, 8}}}, 60},
        {RecallByCue{3}, 70},
        {RecallByContent{{6}}, 80},
    };
}

namespace {

std::string describe(const snn::Raster& raster, const snn::SpikeEvent& e) {
    std::ostringstream out;
    out << e.step << ',' << raster.population_names.at(e.population) << ',' << e.neuron;
    return out.str();
}

void compare_full(const snn::Raster& actual, const snn::Raster& golden, Verdict& verdict) {
    if (actual.population_names != golden.population_names) {
        verdict.fail("population layout differs from the golden raster");
        return;
    }
    std::size_t reported = 0;
    auto report = [&](const std::string& why) {
        if (reported++ < 20) verdict.fail(why);
    };
    auto a = actual.events.begin();
    auto g = golden.events.begin();
    while (a != actual.events.end() || g != golden.events.end()) {
        if (g == golden.events.end() || (a != actual.events.end() && *a < *g)) {
            report("unexpected spike " + describe(actual, *a++));
        } else if (a == actual.events.end() || *g < *a) {
            report("missing spike " + describe(golden, *g++));
        } else {
            ++a;
            ++g;
        }
    }
    if (reported > 20) verdict.fail(std::to_string(reported - 20) + " further raster differences");
}

}  // namespace

DemoRun run_operation_demo(const CamParams& params) {
    CamConfig config{5, 10, params};
    CamNetwork cam(config);
    auto program = compile(operation_demo_ops(), config);

    DemoRun run;
    run.raster = cam.network().run(program.schedule, kDemoUntil);
    run.results = decode(run.raster, program.plan);

    for (const auto& anchor : golden_anchors()) {
        auto fired = run.raster.fired(anchor.step, anchor.population);
        if (fired != anchor.neurons)
            run.verdict.fail(anchor.population + " at step " + std::to_string(anchor.step) + ": expected " +
                             to_string(anchor.neurons) + ", got " + to_string(fired));
    }

    // Decoded outcomes narrated for the demo.
    const std::vector<IndexSet> answers = {{}, {}, {}, {0, 1, 8, 9}, {3, 4}, {3, 4}, {}, {1, 3, 4, 8}, {4}};
    const std::vector<IndexSet> forgotten = {{}, {}, {}, {}, {}, {}, {5, 6}, {}, {}};
    for (std::size_t i = 0; i < run.results.size(); ++i) {
        const auto& r = run.results[i];
        const std::string label = "operation " + std::to_string(i) + " (" + to_string(r.kind) + " @" +
                                  std::to_string(r.start) + ")";
        if (!r.valid) run.verdict.fail(label + " flagged invalid");
        if (r.answer != answers[i])
            run.verdict.fail(label + ": answer " + to_string(r.answer) + ", expected " + to_string(answers[i]));
        if (r.forgotten != forgotten[i])
            run.verdict.fail(label + ": forgotten " + to_string(r.forgotten) + ", expected " +
                             to_string(forgotten[i]));
    }

    compare_full(run.raster, golden_raster(), run.verdict);
    return run;
}

IndexSet binary_content(std::uint64_t value, std::size_t cont_size) {
    IndexSet bits;
    for (std::size_t k = 0; k < cont_size && k < 64; ++k)
        if (value >> k & 1U) bits.insert(k);
    return bits;
}

std::vector<IndexSet> MemtestReport::recall_table(std::size_t sweep) const {
    std::vector<IndexSet> table;
    for (const auto& check : checks)
        if (check.sweep == sweep && check.kind != OperationKind::learn) table.push_back(check.result.answer);
    return table;
}

MemtestReport run_memtest(const CamConfig& config) {
    config.validate();
    const auto cues = config.cue_count;
    const auto cont = config.cont_size;
    // Cue i stores i+1 in binary; its complement must be non-empty as well.
    if (cont < 64 && (static_cast<std::uint64_t>(cues) + 1) >= (std::uint64_t{1} << cont))
        throw std::invalid_argument("binary encoding of " + std::to_string(cues) + " cues does not fit " +
                                    std::to_string(cont) + " content neurons");

    const IndexSet universe = iota_set(cont);
    std::vector<IndexSet> table(cues);
    for (std::size_t i = 0; i < cues; ++i) table[i] = binary_content(i + 1, cont);

    MemtestReport report;
    report.cue_count = cues;
    report.cont_size = cont;

    std::vector<Operation> ops;
    std::vector<MemtestCheck> checks;
    std::vector<bool> stored(cues, false);
    for (std::size_t sweep = 1; sweep <= 3; ++sweep) {
        if (sweep > 1)
            for (auto& content : table) content = difference(universe, content);
        for (std::size_t i = 0; i < cues; ++i) {
            ops.push_back({Learn{{i, table[i]}}, {}});
            MemtestCheck check{sweep, OperationKind::learn, i, {}, {}, false};
            if (stored[i]) {
                check.expected = difference(universe, table[i]);  // the previous sweep's content
                ++report.forgetting_learns;
            }
            stored[i] = true;
            checks.push_back(check);
            ++report.learns;
        }
        for (std::size_t i = 0; i < cues; ++i) {
            ops.push_back({RecallByCue{i}, {}});
            checks.push_back({sweep, OperationKind::recall_by_cue, i, table[i], {}, false});
            ++report.recalls_by_cue;
        }
        for (std::size_t j = 0; j < cont; ++j) {
            ops.push_back({RecallByContent{{j}}, {}});
            IndexSet expected;
            for (std::size_t i = 0; i < cues; ++i)
                if (table[i].count(j)) expected.insert(i);
            checks.push_back({sweep, OperationKind::recall_by_content, j, expected, {}, false});
            ++report.recalls_by_content;
        }
    }

    CamMemory memory(config);
    auto results = memory.execute_all(ops);
    report.raster = memory.finish();
    report.total_steps = memory.cam().network().current_step();

    for (std::size_t k = 0; k < checks.size(); ++k) {
        auto& check = checks[k];
        check.result = results[k];
        const auto& got = check.kind == OperationKind::learn ? check.result.forgotten : check.result.answer;
        check.passed = check.result.valid && got == check.expected;
        if (!check.passed) {
            std::ostringstream why;
            why << "sweep " << check.sweep << ' ' << to_string(check.kind) << ' ' << check.target << " @"
                << check.result.start << ": got " << to_string(got) << ", expected " << to_string(check.expected);
            for (const auto& issue : check.result.issues) why << "; " << issue;
            report.mismatches.push_back(why.str());
        }
    }
    report.checks = std::move(checks);
    report.sweep3_matches_sweep1 = report.recall_table(1) == report.recall_table(3);
    if (!report.sweep3_matches_sweep1) report.mismatches.push_back("sweep 3 recalls differ from sweep 1");
    return report;
}

std::vector<Operation> random_operations(std::uint64_t seed, std::size_t n_ops, const CamConfig& config) {
    std::mt19937_64 rng(seed);
    const auto cues = config.cue_count;
    const auto cont = config.cont_size;
    auto uniform = [&](std::size_t lo, std::size_t hi) {  // inclusive
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };
    auto random_subset = [&](std::size_t max_bits) {
        IndexSet bits;
        const auto count = uniform(1, std::min(max_bits, cont));
        while (bits.size() < count) bits.insert(uniform(0, cont - 1));
        return bits;
    };

    // A few prototypes; most contents are perturbations of one of them, so
    // stored memories overlap heavily.
    std::vector<IndexSet> prototypes;
    for (std::size_t k = 0; k < 3; ++k) prototypes.push_back(random_subset(std::max<std::size_t>(1, cont / 2)));

    std::vector<IndexSet> stored(cues);
    std::vector<Operation> ops;
    ops.reserve(n_ops);
    while (ops.size() < n_ops) {
        const double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        if (roll < 0.4) {
            const auto cue = uniform(0, cues - 1);
            IndexSet content;
            if (chance(0.15) && !stored[cue].empty()) {
                content = stored[cue];  // identical relearn
            } else if (chance(0.6)) {
                content = prototypes[uniform(0, prototypes.size() - 1)];
                for (int flips = static_cast<int>(uniform(0, 2)); flips > 0; --flips) {
                    const auto bit = uniform(0, cont - 1);
                    if (!content.erase(bit)) content.insert(bit);
                }
                if (content.empty()) content.insert(uniform(0, cont - 1));
            } else {
                content = random_subset(cont);
            }
            stored[cue] = content;
            ops.push_back({Learn{{cue, std::move(content)}}, {}});
        } else if (roll < 0.7) {
            ops.push_back({RecallByCue{uniform(0, cues - 1)}, {}});
        } else {
            ops.push_back({RecallByContent{random_subset(3)}, {}});
        }
    }
    return ops;
}

std::string compare_results(const OperationResult& actual, const OperationResult& expected) {
    std::ostringstream why;
    if (actual.kind != expected.kind) why << "kind differs; ";
    if (!actual.valid) {
        why << "flagged invalid";
        for (const auto& issue : actual.issues) why << " (" << issue << ")";
        why << "; ";
    }
    if (actual.echo != expected.echo)
        why << "echo " << to_string(actual.echo.cues) << to_string(actual.echo.content) << " vs "
            << to_string(expected.echo.cues) << to_string(expected.echo.content) << "; ";
    if (actual.answer != expected.answer)
        why << "answer " << to_string(actual.answer) << " vs " << to_string(expected.answer) << "; ";
    if (actual.forgotten != expected.forgotten)
        why << "forgotten " << to_string(actual.forgotten) << " vs " << to_string(expected.forgotten) << "; ";
    return why.str();
}

StressReport run_random_stress(std::uint64_t seed, std::size_t n_ops, const CamConfig& config) {
    if (n_ops < 1) throw std::invalid_argument("stress needs at least one operation");
    StressReport report;
    report.seed = seed;
    report.n_ops = n_ops;
    report.cue_count = config.cue_count;
    report.cont_size = config.cont_size;

    const auto ops = random_operations(seed, n_ops, config);
    CamMemory memory(config);
    const auto results = memory.execute_all(ops);
    memory.finish();
    report.total_steps = memory.cam().network().current_step();

    OracleCam oracle;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto expected = oracle_apply(oracle, ops[i]);
        const auto diff = compare_results(results[i], expected);
        if (diff.empty()) continue;
        ++report.divergences;
        if (!report.first_divergence) {
            report.first_divergence = i;
            report.failing_prefix.assign(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            report.detail = "operation " + std::to_string(i) + " (" + to_string(results[i].kind) + " @" +
                            std::to_string(results[i].start) + "): " + diff;
        }
    }
    return report;
}

}  // namespace ca3cam::testbench
