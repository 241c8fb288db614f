#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(HLAB_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("solve prints answers and the exhaustion flag") {
  auto r = run("solve --program " + data("append.pl") +
               " --query \"app([a],[b],Z)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{Z/[a,b]}\nexhausted: yes\n");
}

TEST_CASE("solve with --keep-duplicates reports both derivations") {
  auto r = run("solve --program " + data("p2.pl") +
               " --query \"p(Y)\" --keep-duplicates");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n{Y/a}\nexhausted: yes\n");
}

TEST_CASE("missing query is a usage error") {
  auto r = run("solve --program " + data("append.pl"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("parse errors exit 2") {
  auto r = run("solve --program " + data("append.pl") + " --query \"p(\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("check renders both verdicts and the condition status") {
  auto r = run("check --program " + data("intro.pl") + " --query \"p(X)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("M_P |= Q: holds") != std::string::npos);
  CHECK(r.out.find("P |= Q: fails") != std::string::npos);
  CHECK(r.out.find("conditions: violated") != std::string::npos);
}

TEST_CASE("check with an extended alphabet reports condition (a)") {
  auto r = run("check --program " + data("append.pl") +
               " --alphabet \"'[]'/0, '.'/2, g/1\""
               " --query \"app([X],[Y],[X,Y])\"");
  CHECK(r.out.find("conditions: hold (a: g/1)") != std::string::npos);
}

TEST_CASE("an unknown-dominated report exits 1") {
  auto r = run("check --program " + data("nat.pl") +
               " --query \"nat(X)\" --depth 8");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("unknown") != std::string::npos);
}

TEST_CASE("entails agrees with the paper-style verdicts") {
  auto r = run("entails --program " + data("append.pl") +
               " --query \"app([X],[Y],[X,Y])\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("P |= Q: holds") != std::string::npos);
}

TEST_CASE("generalize prints the generalized query and rho") {
  auto r = run("generalize --program " + data("append.pl") +
               " --query \"app([a],[[]|g(a,X)],[g(a,Y),Z,[a]])\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("app([V1],[[]|V2],[V3,Z,[V1]])") != std::string::npos);
  CHECK(r.out.find("rho:") != std::string::npos);
}

TEST_CASE("model lists the bounded approximation deterministically") {
  auto r = run("model --program " + data("intro.pl") + " --depth-cap 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "p(a)\nstage: 1\nfixpoint: yes\n");
}

TEST_CASE("counterexample emits the program text") {
  auto r = run(
      "counterexample --occurring \"a/0\" --alphabet \"a/0\""
      " --query \"p(V)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p(a).\n") != std::string::npos);
  CHECK(r.out.find("witness:") != std::string::npos);
}

TEST_CASE("structured output round-trips byte-identically") {
  for (const std::string& args :
       {std::string("check --program ") + data("intro.pl") +
            " --query \"p(X)\" --format json",
        std::string("solve --program ") + data("append.pl") +
            " --query \"app([a],[b],Z)\" --format json",
        std::string("model --program ") + data("append.pl") +
            " --depth-cap 2 --format json"}) {
    auto r = run(args);
    auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump() + "\n" == r.out);
  }
}

TEST_CASE("fuzz smoke run is clean and seeded") {
  auto r = run("fuzz --property lemma2 --cases 20 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  auto again = run("fuzz --property lemma2 --cases 20 --seed 7");
  CHECK(again.out == r.out);
}

TEST_CASE("unknown subcommand and bad flags exit 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("solve --no-such-flag").exit_code == 2);
}
