#include "suc/io.hpp"

#include "gen_util.hpp"
#include "suc/generator.hpp"
#include "suc/oracle.hpp"
#include "suc/solver.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

using namespace suc;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = SUC_TEST_DATA_DIR;

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("suc_io_test_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("toy fixture solves to the hand-computed optimum") {
  const Instance inst = read_instance(kDataDir / "toy.json");
  CHECK(validate_instance(inst).empty());

  const BruteForceResult brute = brute_force_solve(inst);
  REQUIRE(brute.feasible);
  CHECK(brute.cost == -15.0);

  const SucGraph sg = build_digraph(inst);
  for (Preset p : all_presets()) {
    const SolveResult got = run_preset(sg.graph, inst.limits, p);
    REQUIRE(got.solution.has_value());
    CHECK(got.solution->cost == -15.0);
  }
}

TEST_CASE("instance round trip") {
  const Instance inst = generate_instance(testgen::small_params(42));
  const fs::path file = temp_file("roundtrip.json");
  write_instance(inst, file);
  const Instance back = read_instance(file);
  CHECK(back == inst);

  // Serialization is stable: a second write produces identical bytes.
  const fs::path file2 = temp_file("roundtrip2.json");
  write_instance(back, file2);
  CHECK(slurp(file) == slurp(file2));
  fs::remove(file);
  fs::remove(file2);
}

TEST_CASE("schema violations name the offending field") {
  const std::string good = slurp(kDataDir / "toy.json");

  SUBCASE("missing horizon") {
    std::string text = good;
    const auto pos = text.find("\"horizon\": 4,");
    text.erase(pos, std::string("\"horizon\": 4,").size());
    CHECK_THROWS_WITH_AS(instance_from_json(text),
                         doctest::Contains("horizon"), SchemaError);
  }
  SUBCASE("unknown top-level key") {
    std::string text = good;
    text.insert(text.find("\"horizon\""), "\"bogus\": 1,\n  ");
    CHECK_THROWS_WITH_AS(instance_from_json(text), doctest::Contains("bogus"),
                         SchemaError);
  }
  SUBCASE("wrong type with a field path") {
    std::string text = good;
    const std::string needle = "\"duration\": 2";
    text.replace(text.find(needle), needle.size(), "\"duration\": \"two\"");
    CHECK_THROWS_WITH_AS(instance_from_json(text),
                         doctest::Contains("transitions[2].duration"),
                         SchemaError);
  }
  SUBCASE("duplicate cost entry") {
    std::string text = good;
    const std::string needle = "{\"t\": 1, \"transition\": 0, \"value\": 0},";
    text.insert(text.find(needle), needle + "\n    ");
    CHECK_THROWS_WITH_AS(instance_from_json(text),
                         doctest::Contains("duplicate"), SchemaError);
  }
  SUBCASE("cost entry outside the horizon") {
    std::string text = good;
    const std::string needle = "{\"t\": 1, \"transition\": 0, \"value\": 0}";
    text.replace(text.find(needle), needle.size(),
                 "{\"t\": 9, \"transition\": 0, \"value\": 0}");
    CHECK_THROWS_WITH_AS(instance_from_json(text), doctest::Contains(".t"),
                         SchemaError);
  }
  SUBCASE("unknown transition in costs") {
    std::string text = good;
    const std::string needle = "{\"t\": 1, \"transition\": 0, \"value\": 0}";
    text.replace(text.find(needle), needle.size(),
                 "{\"t\": 1, \"transition\": 77, \"value\": 0}");
    CHECK_THROWS_WITH_AS(instance_from_json(text),
                         doctest::Contains("transition"), SchemaError);
  }
}

TEST_CASE("parse errors carry a location") {
  try {
    instance_from_json("{ \"horizon\": 4,, }", "broken.json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("broken.json") != std::string::npos);
    CHECK(what.find("line") != std::string::npos);
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_instance(temp_file("does_not_exist.json")), ParseError);
}

TEST_CASE("plan serialization") {
  ProductionPlan plan;
  plan.steps = {PlanStep{0, 1, 2}, PlanStep{1, 3, 1}};
  const std::string json = plan_to_json(plan, -15.0);
  CHECK(json.find("\"cost\": -15.0") != std::string::npos);
  CHECK(json.find("\"transition\": 2") != std::string::npos);
}
