// Runs the built binary end to end; the binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("decide aa") {
  auto r = run("decide --gens ab --rel aa --json");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "not_residually_q_solvable");
  CHECK(j["r"] == "a");
  CHECK(j["k"] == "2");
  CHECK(j.contains("budget_report"));
}

TEST_CASE("decide aab is residually Q-solvable") {
  auto r = run("decide --gens ab --rel aab --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "residually_q_solvable");
}

TEST_CASE("h1 output") {
  auto r = run("h1 --gens at --rel TataTAtAA");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["betti"] == 1);
  CHECK(j["torsion"].empty());
}

TEST_CASE("wp exit codes") {
  CHECK(run("wp --gens ab --rel aa --word a").exit_code == 1);
  CHECK(run("wp --gens ab --rel aa --word aa").exit_code == 0);
  CHECK(run("nc-member --gens ab --rel a --word aa").exit_code == 0);
  CHECK(run("nc-member --gens ab --rel aa --word a").exit_code == 1);
}

TEST_CASE("ball output shape") {
  auto r = run("ball --gens ab --rel a --radius 2 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["edges"].size() == 9);
  CHECK(j["vertices"][0] == "");
}

TEST_CASE("fox json pairs") {
  auto r = run("fox --gens ab --word abAB --generator a --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0] == "1");
  CHECK(j[0][1] == "");
  CHECK(j[1][0] == "-1");
  CHECK(j[1][1] == "abA");
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run("decide --gens ab --rel xy").exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("wp --gens ab --rel aa").exit_code == 64);  // missing --word
}

TEST_CASE("presentation file input and inline override") {
  std::string path = "/tmp/orsolv_test_pres.txt";
  FILE* f = fopen(path.c_str(), "w");
  REQUIRE(f);
  fputs("gens: ab\nrel: aa\n", f);
  fclose(f);
  CHECK(run("wp --pres " + path + " --word aa").exit_code == 0);
  // inline relator overrides the file
  CHECK(run("wp --pres " + path + " --rel a --word aa").exit_code == 0);
  CHECK(run("wp --pres " + path + " --rel ab --word aa").exit_code == 1);
  remove(path.c_str());
}

TEST_CASE("json output is deterministic across runs") {
  auto r1 = run("decide --gens at --rel TataTAtAA --json");
  auto r2 = run("decide --gens at --rel TataTAtAA --json");
  CHECK(r1.exit_code == 1);
  CHECK(r1.out == r2.out);
  auto j = nlohmann::json::parse(r1.out);
  CHECK(j["r"] == "A");
  CHECK(j["k"] == "1");
}

int main(int argc, char** argv) {
  if (argc < 2) return 64;
  g_binary = argv[1];
  doctest::Context ctx;
  return ctx.run();
}
