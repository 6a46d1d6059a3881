#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef RTA_CLI_PATH
#error "RTA_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// run the binary through a shell, capturing stdout; stderr is dropped
RunResult run(const std::string& args) {
  std::string cmd = std::string(RTA_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WEXITSTATUS(rc);
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string("cli_") + name + ".json";
  std::ofstream f(path);
  f << body;
  return path;
}

}  // namespace

TEST_CASE("compose and sign") {
  auto notf = write_temp("not", R"({"k":2,"n":1,"perm":[1,0]})");
  auto cnot = write_temp("cnot", R"({"k":2,"n":2,"perm":[0,1,3,2]})");

  RunResult par = run("compose --op par " + notf + " " + notf);
  CHECK(par.status == 0);
  CHECK(nlohmann::json::parse(par.out)["perm"] ==
        nlohmann::json::parse("[3,2,1,0]"));

  RunResult ser = run("compose --op ser " + notf + " " + cnot);
  CHECK(ser.status == 0);
  CHECK(nlohmann::json::parse(ser.out)["perm"] ==
        nlohmann::json::parse("[3,2,0,1]"));

  CHECK(run("sign " + notf).out == "odd\n");
  RunResult bad = run("compose --op diag " + notf + " " + cnot);
  CHECK(bad.status == 2);
}

TEST_CASE("order and closure") {
  auto cnot = write_temp("cnot2", R"({"k":2,"n":2,"perm":[0,1,3,2]})");
  RunResult ord = run("order --arity 3 " + cnot);
  CHECK(ord.status == 0);
  CHECK(ord.out == "168\n");

  RunResult cl = run("closure --mode borrow --max-arity 2 " + cnot + " --json");
  CHECK(cl.status == 0);
  auto j = nlohmann::json::parse(cl.out);
  CHECK(j["mode"] == "borrow");
  CHECK(j["slices"][0]["order"] == "1");
  CHECK(j["slices"][1]["order"] == "6");

  // identical invocations give identical bytes
  RunResult again = run("closure --mode borrow --max-arity 2 " + cnot + " --json");
  CHECK(again.out == cl.out);
}

TEST_CASE("classify and maxclass") {
  auto cnot = write_temp("cnot3", R"({"k":2,"n":2,"perm":[0,1,3,2]})");
  RunResult cls = run("classify --arity 2 " + cnot);
  CHECK(cls.status == 0);
  auto j = nlohmann::json::parse(cls.out);
  CHECK(j["affine_field"] == 2);
  CHECK(j["order"] == "2");
  CHECK(j["transitive"] == false);

  RunResult mc = run("maxclass --alphabet 3 --arity 2");
  CHECK(mc.status == 0);
  auto t = nlohmann::json::parse(mc.out);
  CHECK(t["entries"].size() == 7);
  bool affine_certain = false;
  for (const auto& e : t["entries"])
    if (e["type"] == "affine" && e["status"] == "certain") affine_certain = true;
  CHECK(affine_certain);
}

TEST_CASE("witness words print as gate arrays") {
  RunResult w = run("witness3 --alphabet 3 --triples 1,2,1 2,1,2 3,3,3");
  CHECK(w.status == 0);
  auto j = nlohmann::json::parse(w.out);
  CHECK(j["k"] == 3);
  CHECK(j["length"].get<int>() <= 6);
  CHECK(j["word"].is_array());
  RunResult bad = run("witness3 --alphabet 3 --triples 1,2,1 1,2,1 3,3,3");
  CHECK(bad.status == 2);
  RunResult range = run("witness3 --alphabet 3 --triples 1,2,4 2,1,2 3,3,3");
  CHECK(range.status == 2);
}

TEST_CASE("verify subcommand") {
  RunResult one = run("verify g1344");
  CHECK(one.status == 0);
  CHECK(one.out.substr(0, 11) == "PASS g1344 ");

  // repeat runs byte-identically
  CHECK(run("verify g1344").out == one.out);

  RunResult js = run("verify g1344 deg-order --json");
  CHECK(js.status == 0);
  auto j = nlohmann::json::parse(js.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["id"] == "g1344");
  CHECK(j[0]["pass"] == true);
  CHECK(j[1]["id"] == "deg-order");

  CHECK(run("verify not-a-check").status == 2);
}

TEST_CASE("malformed inputs exit with the input code") {
  auto broken = write_temp("broken", R"({"k":2,"n":1)");
  CHECK(run("sign " + broken).status == 2);
  auto nonbij = write_temp("nonbij", R"({"k":2,"n":1,"perm":[0,0]})");
  CHECK(run("sign " + nonbij).status == 2);
  CHECK(run("sign does_not_exist.json").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("degree caps exit with the cap code") {
  auto cnot = write_temp("cnot4", R"({"k":2,"n":2,"perm":[0,1,3,2]})");
  RunResult capped = run("--cap 300 order --arity 16 " + cnot);
  CHECK(capped.status == 3);
  RunResult low = run("--cap 17 order --arity 3 " + cnot);
  CHECK(low.status == 2);

  std::string env = std::string("RTA_DEGREE_CAP=300 ") + RTA_CLI_PATH +
                    " order --arity 16 " + cnot + " >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(env.c_str())) == 3);
}
