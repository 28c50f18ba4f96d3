#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "graphonlab/cli.hpp"
#include "graphonlab/io.hpp"

using namespace graphonlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "graphonlab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// end-to-end through the installed binary
int run_binary(const std::string& args) {
  const std::string command = std::string(GRAPHONLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "graphonlab_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("density command") {
  auto r = run({"density", "--pattern", "clique:3", "--graphon", "const:0.5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "0.125\n");
  r = run({"density", "--pattern", "catalog:z6_chords", "--graphon", "const:0.5"});
  CHECK(std::stod(r.out) == std::pow(0.5, 8));

  const auto path = (scratch() / "w.json").string();
  io::write_file(path, io::graphon_to_json(gen_random(4, 2)).dump());
  r = run({"density", "--pattern", "clique:3", "--graphon", "file:" + path, "--route", "both"});
  CHECK(r.code == cli::kOk);
  const auto j = io::Json::parse(r.out);
  CHECK(j.at("agree").get<bool>());
  CHECK(j.at("max_relative_difference").get<double>() <= 1e-10);
}

TEST_CASE("localdensity command") {
  auto r = run({"localdensity", "--graphon", "const:0.4"});
  CHECK(r.code == cli::kOk);
  CHECK(io::Json::parse(r.out).at("d_star").get<double>() == doctest::Approx(0.4));

  const auto dir = scratch();
  io::write_file((dir / "bipartite.json").string(), io::graphon_to_json(from_graph(clique(2))).dump());
  io::write_file((dir / "identity2.json").string(),
                 R"({"measures": [0.5, 0.5], "values": [[1, 0], [0, 1]]})");
  r = run({"localdensity", "--graphon", "file:" + (dir / "bipartite.json").string()});
  CHECK(std::abs(io::Json::parse(r.out).at("d_star").get<double>()) <= 1e-12);
  r = run({"localdensity", "--graphon", "file:" + (dir / "identity2.json").string()});
  CHECK(io::Json::parse(r.out).at("d_star").get<double>() == doctest::Approx(0.5));
  r = run({"localdensity", "--graphon", "random:3:1", "--method", "grid", "--resolution", "50"});
  CHECK(r.code == cli::kOk);
  CHECK(io::Json::parse(r.out).at("method") == "grid");
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--check", "transform", "--trials", "50"});
  CHECK(r.code == cli::kOk);
  CHECK(io::Json::parse(r.out).size() == 50);
  const auto again = run({"verify", "--check", "transform", "--trials", "50"});
  CHECK(again.out == r.out);

  r = run({"verify", "--check", "knrs", "--pattern", "cycle:5", "--graphon", "random:4:3"});
  CHECK(r.code == cli::kOk);

  const auto cfg = (scratch() / "empty.json").string();
  io::write_file(cfg, R"({"seed": 1, "checks": []})");
  r = run({"verify", "--config", cfg});
  CHECK(r.code == cli::kOk);
  CHECK(io::Json::parse(r.out).empty());

  r = run({"verify", "--check", "transform", "--trials", "3", "--format", "csv"});
  CHECK(r.out.rfind("check_name,ratio,passed,seed", 0) == 0);
}

TEST_CASE("search command") {
  const auto dir = scratch();
  const auto graphon = (dir / "best.json").string();
  const auto svg = (dir / "trajectory.svg").string();
  auto r = run({"search", "--pattern", "clique:3", "--d", "0.3", "--n", "3", "--starts", "2", "--inner", "40",
                "--emit-graphon", graphon, "--svg", svg});
  CHECK(r.code == cli::kOk);
  CHECK(io::Json::parse(r.out).at("best_ratio").get<double>() >= 1 - 1e-6);
  CHECK(fs::exists(svg));
  // the emitted graphon feeds back into verify
  r = run({"verify", "--check", "knrs", "--pattern", "clique:3", "--graphon", "file:" + graphon});
  CHECK(r.code == cli::kOk);

  r = run({"search", "--pattern", "catalog:z6_chords", "--d", "0.4", "--n", "3", "--starts", "1", "--inner", "20"});
  CHECK(r.code == cli::kOk);
  CHECK(io::Json::parse(r.out).at("advisory").get<bool>());
}

TEST_CASE("op command") {
  auto r = run({"op", "--name", "edge_density", "--graphon", "const:0.3"});
  CHECK(io::Json::parse(r.out).at("edge_density").get<double>() == doctest::Approx(0.3));
  r = run({"op", "--name", "subdivide", "--pattern", "clique:3", "-s", "1"});
  CHECK(io::graph_from_json(io::Json::parse(r.out)).edge_count() == 6);
  r = run({"op", "--name", "hom_count", "--pattern", "clique:2", "--host", "clique:3"});
  CHECK(io::Json::parse(r.out).at("hom_count") == 6);
  r = run({"op", "--name", "is_bipartite", "--pattern", "cycle:6"});
  CHECK(io::Json::parse(r.out).at("bipartite").get<bool>());
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"density", "--pattern", "clique:3"}).code == cli::kInputError);
  CHECK(run({"density", "--pattern", "nonsense", "--graphon", "const:0.5"}).code == cli::kInputError);
  CHECK(run({"density", "--pattern", "clique:3", "--graphon", "const:2"}).code == cli::kInputError);
  CHECK(run({"verify", "--check", "knrs", "--pattern", "clique:3", "--graphon", "const:0.3", "--d", "0.5"}).code ==
        cli::kInputError);
  CHECK(run({"op", "--name", "bogus"}).code == cli::kInputError);

  setenv("GRAPHONLAB_BUDGET", "maps=10,cells=10", 1);
  CHECK(run_binary("density --pattern clique:5 --graphon random:5:1") == cli::kBudgetExceeded);
  CHECK(run_binary("density --pattern clique:5 --graphon random:5:1 --route naive") == cli::kBudgetExceeded);
  unsetenv("GRAPHONLAB_BUDGET");

  CHECK(run_binary("density --pattern clique:3 --graphon const:0.5") == cli::kOk);
  CHECK(run_binary("density --graphon const:0.5") == cli::kInputError);
  CHECK(run_binary("localdensity --graphon file:/nonexistent.json") == cli::kInputError);
}
