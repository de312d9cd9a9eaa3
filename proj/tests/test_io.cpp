#include <doctest.h>

#include <sstream>

#include "ca3cam/io.hpp"
#include "ca3cam/testbench.hpp"

using namespace ca3cam;

TEST_SUITE("io") {

TEST_CASE("index lists") {
    CHECK(parse_index_list("0,1,8,9") == IndexSet{0, 1, 8, 9});
    CHECK(parse_index_list("3") == IndexSet{3});
    CHECK(to_string(IndexSet{0, 1, 8, 9}) == "{0,1,8,9}");
    CHECK(to_string(IndexSet{}) == "{}");
    CHECK_THROWS_AS(parse_index_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_list("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index_list("-1"), std::invalid_argument);
    CHECK(difference({1, 2, 3}, {2}) == IndexSet{1, 3});
    CHECK(intersects({1, 2}, {2, 5}));
    CHECK_FALSE(intersects({1}, {2}));
}

TEST_CASE("raster CSV round trip") {
    auto raster = testbench::golden_raster();
    std::stringstream csv;
    io::write_raster_csv(csv, raster);
    CHECK(csv.str().rfind("step,population,neuron\n", 0) == 0);
    CHECK(csv.str().find("\n35,Output,0\n") != std::string::npos);
    auto back = io::read_raster_csv(csv, raster.population_names);
    CHECK(back == raster);

    std::istringstream bad("step,population,neuron\n2,Output,1\n1,Output,1\n");
    CHECK_THROWS(io::read_raster_csv(bad, raster.population_names));
    std::istringstream no_header("1,Output,1\n");
    CHECK_THROWS(io::read_raster_csv(no_header, raster.population_names));
}

TEST_CASE("raster JSON has the same events") {
    auto raster = testbench::golden_raster();
    auto json = io::raster_to_json(raster);
    REQUIRE(json.size() == raster.events.size());
    CHECK(json[0]["step"] == raster.events[0].step);
    CHECK(json[0]["population"] == raster.population_names[raster.events[0].population]);
}

TEST_CASE("parameter overrides") {
    CamParams p;
    io::apply_param(p, "a_plus=0.1");
    io::apply_param(p, "refractory_steps=2");
    io::apply_param(p, "cue_inhibition=20");
    CHECK(p.stdp.a_plus == 0.1);
    CHECK(p.neuron.refractory_steps == 2);
    CHECK(p.cue_inhibition == 20.0);
    CHECK_THROWS(io::apply_param(p, "bogus=1"));
    CHECK_THROWS(io::apply_param(p, "a_plus"));
    CHECK_THROWS(io::apply_param(p, "a_plus=x"));
    CHECK_THROWS(io::apply_param(p, "refractory_steps=1.5"));
    auto json = io::to_json(p);
    CHECK(json["a_plus"] == 0.1);
    CHECK(json["cue_inhibition"] == 20.0);
}

TEST_CASE("operation scripts") {
    std::istringstream in(
        "# demo head\n"
        "learn 0 0,1,8,9 @0\n"
        "rcue 0\n"
        "rcont 6   # trailing comment\n");
    auto script = io::parse_script(in);
    REQUIRE(script.ops.size() == 3);
    CHECK(script.lines == std::vector<std::size_t>{2, 3, 4});
    CHECK(script.ops[0].start == Step{0});
    CHECK_FALSE(script.ops[1].start.has_value());
    auto program = io::compile_script(script, CamConfig{});
    CHECK(program.plan.ops[1].start == 7);
    CHECK(program.plan.ops[2].start == 13);

    auto error_line = [](const std::string& text) -> std::size_t {
        std::istringstream bad(text);
        try {
            io::compile_script(io::parse_script(bad), CamConfig{});
        } catch (const io::ScriptError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(error_line("rcue 0 @0\nrcue 1 @3\n") == 2);
    CHECK(error_line("learn 0,1 2\n") == 1);
    CHECK(error_line("\nlearn 0\n") == 2);
    CHECK(error_line("fetch 1\n") == 1);
    CHECK(error_line("rcue 0 @x\n") == 1);
    CHECK(error_line("rcue 9\n") == 1);
    CHECK(error_line("rcue 1 @0\nrcue 1 @6\n") == 0);
}

TEST_CASE("a script with the demo starts reproduces the demo results") {
    std::istringstream in(
        "learn 0 0,1,8,9 @0\nlearn 4 1,5,6 @10\nlearn 3 4,5,6 @20\nrcue 0 @30\nrcont 6 @40\n"
        "rcont 4,5 @50\nlearn 3 1,3,4,8 @60\nrcue 3 @70\nrcont 6 @80\n");
    auto program = io::compile_script(io::parse_script(in), CamConfig{});
    CamNetwork cam(CamConfig{});
    auto raster = cam.network().run(program.schedule, program.plan.end_step);
    auto demo = testbench::run_operation_demo();
    CHECK(raster == demo.raster);
    auto results = decode(raster, program.plan);
    for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].answer == demo.results[i].answer);
}

}  // TEST_SUITE
