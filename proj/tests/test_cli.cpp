#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxeter/cli.hpp"

using coxeter::run_cli;

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group command") {
  const auto r = run({"group", "--type", "A3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 24") != std::string::npos);
  CHECK(r.out.find("reflections: 6") != std::string::npos);

  const auto i7 = run({"group", "--type", "I2(7)"});
  CHECK(i7.code == 0);
  CHECK(i7.out.find("order: 14") != std::string::npos);

  const auto j = run({"group", "--type", "A2", "--format", "json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema"] == "coxeter-cosets/1");
  CHECK(parsed["order"] == 6);
}

TEST_CASE("group from a matrix file") {
  const std::string path = "cli_test_matrix.json";
  {
    std::ofstream f(path);
    f << "{\"rank\": 2, \"m\": [[1, 3], [3, 1]]}";
  }
  const auto r = run({"group", "--matrix", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 6") != std::string::npos);
  std::remove(path.c_str());

  const auto missing = run({"group", "--matrix", "no_such_file.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"group"}).code == 2);                       // neither source
  CHECK(run({"group", "--type", "Q9"}).code == 2);       // bad label
  CHECK(run({"frobnicate"}).code == 2);                  // bad command
  CHECK(run({"verify", "nope", "--type", "A2"}).code == 2);
  CHECK(run({"poly", "poincare", "--type", "A2"}).code == 2);  // missing --w
  CHECK(run({"export", "graph", "--type", "A2"}).code == 2);   // no vertices
  CHECK(run({"group", "--type", "A2", "--matrix", "x.json"}).code == 2);
}

TEST_CASE("resource limits exit with 3") {
  CHECK(run({"group", "--type", "H3", "--cap", "50"}).code == 3);
  CHECK(run({"cosets", "delta", "--type", "A3", "--cap", "50"}).code == 3);
}

TEST_CASE("coset counts") {
  const auto d = run({"cosets", "delta", "--type", "A2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("19 cosets") != std::string::npos);
  const auto x = run({"cosets", "xi", "--type", "A3", "--format", "json"});
  CHECK(x.code == 0);
  const auto parsed = nlohmann::json::parse(x.out);
  CHECK(parsed["xi_count"] == 281);
  CHECK(parsed["delta_count"] == 167);
  const auto s = run({"cosets", "sigma", "--type", "A2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("13 cosets") != std::string::npos);
}

TEST_CASE("component filter lists the local dimensions") {
  const auto r =
      run({"cosets", "delta", "--type", "A2", "--component", "321"});
  CHECK(r.code == 0);
  CHECK(r.out.find("delta = 6") != std::string::npos);
  // Two cosets of local dimension 0, three of -1, one of 1.
  std::size_t minus = 0, zero = 0, one = 0, pos = 0;
  for (;;) {
    pos = r.out.find("321,", pos);
    if (pos == std::string::npos) break;
    const auto eol = r.out.find('\n', pos);
    const auto line = r.out.substr(pos, eol - pos);
    if (line.ends_with(",-1")) ++minus;
    if (line.ends_with(",0")) ++zero;
    if (line.ends_with(",1") && !line.ends_with(",-1")) ++one;
    pos = eol;
  }
  CHECK(minus == 3);
  CHECK(zero == 2);
  CHECK(one == 1);
}

TEST_CASE("verify passes on A2 and honours exit codes") {
  const auto r = run({"verify", "all", "--type", "A2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("regularity") != std::string::npos);
  CHECK(r.out.find("lifting") != std::string::npos);
  // Timing lands on stderr, keeping stdout deterministic.
  CHECK(r.err.find("suite") != std::string::npos);
}

TEST_CASE("identical invocations give byte-identical stdout") {
  const std::vector<std::string> cases[] = {
      {"cosets", "delta", "--type", "A3"},
      {"cosets", "xi", "--type", "A2", "--format", "json"},
      {"verify", "structure", "--type", "A2"},
      {"export", "graph", "--type", "A3", "--interval", "1324,3412",
       "--format", "dot"},
      {"poly", "eulerian4", "--type", "A3", "--format", "json"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // Parallel and serial sweeps agree too.
  const auto p1 = run({"verify", "structure", "--type", "A3", "--jobs", "1"});
  const auto p4 = run({"verify", "structure", "--type", "A3", "--jobs", "4"});
  CHECK(p1.out == p4.out);
}

TEST_CASE("polynomial evaluations from the command line") {
  const auto e = run({"poly", "eulerian4", "--type", "A2", "--eval",
                      "2,2,2,2"});
  CHECK(e.code == 0);
  CHECK(e.out.find("eval(2,2,2,2) = 33") != std::string::npos);

  const auto p = run({"poly", "poincare", "--type", "A2", "--w", "321"});
  CHECK(p.code == 0);
  CHECK(p.out.find("1 + 2*q + 2*q^2 + q^3") != std::string::npos);
  CHECK(p.out.find("average: 3/2") != std::string::npos);

  const auto o = run({"poly", "inout", "--type", "A3", "--w", "3412",
                      "--eval", "q=-1"});
  CHECK(o.code == 0);
  CHECK(o.out.find("eval(q=-1) = 0") != std::string::npos);

  const auto d = run({"poly", "directional", "--type", "A2", "--w", "321",
                      "--kind", "C"});
  CHECK(d.code == 0);
  CHECK(d.out.find("1 + 2*q2 + 2*q2^2 + q2^3") != std::string::npos);

  const auto bad = run({"poly", "poincare", "--type", "A2", "--w", "321",
                        "--eval", "z=1"});
  CHECK(bad.code == 2);
}

TEST_CASE("exports") {
  const auto fig = run({"export", "graph", "--type", "A3", "--interval",
                        "1324,3412", "--format", "json"});
  CHECK(fig.code == 0);
  const auto parsed = nlohmann::json::parse(fig.out);
  CHECK(parsed["nodes"].size() == 10);
  CHECK(parsed["edges"].size() == 16);

  const auto single = run({"export", "graph", "--type", "A3", "--interval",
                           "3412,3412", "--format", "json"});
  const auto sp = nlohmann::json::parse(single.out);
  CHECK(sp["nodes"].size() == 1);
  CHECK(sp["edges"].size() == 0);

  const auto coset = run({"export", "graph", "--type", "A2", "--coset",
                          "1,2:e:1,2", "--format", "json"});
  CHECK(coset.code == 0);
  const auto cp = nlohmann::json::parse(coset.out);
  CHECK(cp["nodes"].size() == 6);
  // 3-regular: 9 directed edges.
  CHECK(cp["edges"].size() == 9);

  const auto dot = run({"export", "hasse", "--type", "A2", "--all",
                        "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("dashed") == std::string::npos);  // short edges only

  const auto bad = run({"export", "graph", "--type", "A3", "--interval",
                        "4321,1234"});
  CHECK(bad.code == 2);

  // --out writes the file instead of stdout.
  const auto to_file = run({"export", "graph", "--type", "A2", "--all",
                            "--format", "dot", "--out", "cli_test_graph.dot"});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f("cli_test_graph.dot");
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("digraph") != std::string::npos);
  f.close();
  std::remove("cli_test_graph.dot");
}

TEST_CASE("help is available") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coxeter-cosets") != std::string::npos);
}
