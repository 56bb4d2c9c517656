#include <doctest.h>

#include <sstream>

#include "surplus/errors.hpp"
#include "surplus/generators.hpp"
#include "surplus/harness.hpp"
#include "surplus/parallel.hpp"
#include "surplus/verify.hpp"

using namespace surplus;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find("\r\n", pos);
    REQUIRE(end != std::string::npos);
    out.push_back(text.substr(pos, end - pos));
    pos = end + 2;
  }
  return out;
}

std::string sweep_text(std::string_view json) {
  std::ostringstream out;
  run_sweep(ExperimentSpec::parse_json(json), out);
  return out.str();
}

}  // namespace

TEST_CASE("algorithm catalogue") {
  const auto& names = algorithm_names();
  CHECK(names.size() == 12);
  CHECK(names.front() == "hyperplane-regular");
  CHECK_THROWS_AS(run_algorithm(petersen(), "nosuch", 1), UsageError);
}

TEST_CASE("every algorithm reports exact surplus halves") {
  const Graph g = random_regular(20, 4, 3);
  AlgorithmOptions opts;
  opts.trials = 16;
  for (const auto& name : algorithm_names()) {
    INFO(name);
    try {
      const auto rep = run_algorithm(g, name, 5, opts);
      CHECK(rep.algorithm == name);
      CHECK(rep.cut.consistent_with(g));
      CHECK(rep.cut.surplus().twice() == 2 * static_cast<std::int64_t>(rep.cut.crossing()) - 40);
    } catch (const PreconditionError&) {
      CHECK((name == "hyperplane-srg" || name == "odd-cycle-st"));
    }
  }
}

TEST_CASE("run_algorithm is deterministic and applicability is enforced") {
  const Graph p = paley(13);
  const auto a = run_algorithm(p, "hyperplane-srg", 7);
  const auto b = run_algorithm(p, "hyperplane-srg", 7);
  CHECK(a.cut.sides() == b.cut.sides());
  CHECK(a.stats == b.stats);
  REQUIRE(a.guarantee.has_value());
  CHECK(*a.guarantee > 0.0);
  CHECK(run_algorithm(complete(5), "oracle", 1).cut.crossing() == 6);
  CHECK_THROWS_AS(run_algorithm(star(4), "hyperplane-srg", 1), PreconditionError);
  CHECK_THROWS_AS(run_algorithm(gnp(40, 0.2, 1), "oracle", 1), PreconditionError);
}

TEST_CASE("experiment spec parsing") {
  const auto spec = ExperimentSpec::parse_json(
      R"({"graphs": ["paley 13", {"generator": "petersen", "id": "P"}, {"file": "x.el"}],
          "algorithms": ["local-search", "oracle"], "trials": 8, "seed": 3, "r": 5})");
  REQUIRE(spec.graphs.size() == 3);
  CHECK(spec.graphs[0].id == "paley 13");
  CHECK(spec.graphs[1].id == "P");
  CHECK(spec.graphs[2].file == std::optional<std::string>("x.el"));
  CHECK(spec.options.trials == 8);
  CHECK(spec.seed == 3);
  CHECK(spec.options.r == std::optional<unsigned>(5));
  CHECK_THROWS_AS(ExperimentSpec::parse_json("[1]"), UsageError);
  CHECK_THROWS_AS(ExperimentSpec::parse_json("{"), UsageError);
  CHECK_THROWS_AS(ExperimentSpec::parse_json(R"({"algorithms": ["nope"]})"), UsageError);
  CHECK_THROWS_AS(ExperimentSpec::parse_json(R"({"trials": "many"})"), UsageError);
}

TEST_CASE("sweep over Paley graphs") {
  const std::string json =
      R"({"graphs": ["paley 5", "paley 13", "paley 17", "paley 29", "paley 37"],
          "algorithms": ["local-search", "hyperplane-srg", "oracle"], "trials": 32, "seed": 9})";
  const std::string first = sweep_text(json);
  const auto rows = lines_of(first);
  REQUIRE(rows.size() == 16);
  std::string header;
  for (const auto& c : sweep_columns()) header += (header.empty() ? "" : ",") + c;
  CHECK(rows[0] == header);
  std::size_t skips = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) skips += rows[i].find(",skip: ") != std::string::npos;
  // Only Paley(37) exceeds the oracle cap of 30 vertices.
  CHECK(skips == 1);
  CHECK(sweep_text(json) == first);
}

TEST_CASE("empty sweep is header only") {
  const std::string out = sweep_text(R"({"graphs": [], "algorithms": ["oracle"]})");
  CHECK(lines_of(out).size() == 1);
  const std::string timed = sweep_text(R"({"graphs": [], "algorithms": [], "timing": true})");
  CHECK(timed.find("wall_ms") != std::string::npos);
}

TEST_CASE("sweep output does not depend on the thread budget") {
  const std::string json = R"({"graphs": ["petersen", "cycle 7", "gnp 12 0.5 seed=4"],
      "algorithms": ["local-search", "triangle-sampling", "oracle"], "seed": 2})";
  const std::string a = sweep_text(json);
  setenv("SURPLUS_LAB_THREADS", "1", 1);
  const std::string b = sweep_text(json);
  unsetenv("SURPLUS_LAB_THREADS");
  CHECK(thread_budget() >= 1);
  CHECK(a == b);
}

TEST_CASE("formatting helpers") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-10.0) == "-10");
  CHECK(format_double(0.1) == "0.1");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("verify suites") {
  CHECK(bundled_corpus().size() >= 30);
  for (const auto& ng : bundled_corpus()) CHECK(ng.graph.num_vertices() <= 20);
  std::ostringstream out;
  const auto summary = run_verify("core", out);
  CHECK(summary.checks > 0);
  CHECK(summary.failures == 0);
  CHECK(out.str().find("FAIL") == std::string::npos);
  std::ostringstream sink;
  CHECK_THROWS_AS(run_verify("nosuch", sink), UsageError);
}
