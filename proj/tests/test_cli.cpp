#include "sullivan/cli.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace sullivan;
using namespace sullivan::cli;

namespace {

std::string sample_path(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name + ".sul"; }
std::string data_path(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

RunResult run_cmd(Command cmd, const std::string& input, Format fmt = Format::Report) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.input = input;
  cfg.format = fmt;
  return run(cfg);
}

int run_args(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  int code = cli::main(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run_cmd(Command::Validate, sample_path("ex1")).exit_code == kOk);
  RunResult bad = run_cmd(Command::Validate, data_path("order_violation.sul"));
  CHECK(bad.exit_code == kUserError);
  CHECK_FALSE(bad.err.empty());
  RunResult parse_err = run_cmd(Command::Validate, data_path("malformed/undeclared.sul"));
  CHECK(parse_err.exit_code == kUserError);
  CHECK(parse_err.err.find(":3:11: undeclared identifier 'zz'") != std::string::npos);
  CHECK(run_cmd(Command::Validate, data_path("no_such_file.sul")).exit_code == kUserError);
}

TEST_CASE("minimize in both formats") {
  RunResult m = run_cmd(Command::Minimize, sample_path("ex1"), Format::Machine);
  CHECK(m.exit_code == kOk);
  CHECK(m.out.find("pair a1 v2\n") != std::string::npos);
  RunResult r = run_cmd(Command::Minimize, sample_path("ex1"));
  CHECK(r.exit_code == kOk);
  CHECK(r.out.find("W = {b1, c1, u3}") != std::string::npos);
  CHECK(run_cmd(Command::Minimize, data_path("order_violation.sul")).exit_code == kUserError);
}

TEST_CASE("output is deterministic") {
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"}) {
    RunResult a = run_cmd(Command::Minimize, sample_path(name), Format::Machine);
    RunResult b = run_cmd(Command::Minimize, sample_path(name), Format::Machine);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("homology and comparison") {
  RunConfig cfg;
  cfg.command = Command::Homology;
  cfg.input = sample_path("ex1");
  cfg.max_degree = 3;
  RunResult h = run(cfg);
  CHECK(h.exit_code == kOk);
  CHECK(h.out == "H^0 = 1\nH^1 = 2\nH^2 = 1\nH^3 = 1\n");
  cfg.against = sample_path("ex2");
  CHECK(run(cfg).exit_code == kOk);
  cfg.against = sample_path("ex4");
  RunResult diff = run(cfg);
  CHECK(diff.exit_code == kNotEqual);
  CHECK(diff.out.find("differ at degree 1") != std::string::npos);
}

TEST_CASE("at-model needs a module") {
  CHECK(run_cmd(Command::AtModel, sample_path("ex1")).exit_code == kUserError);
}

TEST_CASE("verify passes on the examples") {
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"}) {
    RunResult v = run_cmd(Command::Verify, sample_path(name));
    CHECK(v.exit_code == kOk);
    CHECK(v.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("argument parsing") {
  std::string out, err;
  CHECK(run_args({"minimize", sample_path("ex1"), "--format", "machine"}, out, err) == kOk);
  CHECK(out.rfind("W = {b1, c1, u3}\n", 0) == 0);
  CHECK(run_args({"minimize", sample_path("ex1"), "--format", "xml"}, out, err) == kUserError);
  CHECK(run_args({}, out, err) == kUserError);
  CHECK(run_args({"frobnicate"}, out, err) == kUserError);
  CHECK(run_args({"verify", sample_path("ex1"), "--max-degree", "0"}, out, err) == kUserError);
  CHECK(run_args({"--help"}, out, err) == kOk);
  CHECK(out.find("minimize") != std::string::npos);

  auto tmp = std::filesystem::temp_directory_path() / "sullivan_cli_test_out.txt";
  CHECK(run_args({"minimize", sample_path("ex4"), "--format", "machine", "--output", tmp.string()}, out, err) == kOk);
  CHECK(out.empty());
  CHECK(testsupport::read_text(tmp.string()) ==
        run_cmd(Command::Minimize, sample_path("ex4"), Format::Machine).out);
  std::filesystem::remove(tmp);
}

TEST_CASE("module commands") {
  auto tmp = std::filesystem::temp_directory_path() / "sullivan_cli_module.sul";
  {
    std::ofstream f(tmp);
    f << "mode module\ngen v0 : 1\ngen v1 : 1\ngen e : 0\nd e = v1 - v0\n";
  }
  RunResult v = run_cmd(Command::Validate, tmp.string());
  CHECK(v.exit_code == kOk);
  RunResult a = run_cmd(Command::AtModel, tmp.string(), Format::Machine);
  CHECK(a.exit_code == kOk);
  CHECK(a.out.rfind("H = {v0}\n", 0) == 0);
  CHECK(a.out.find("pair e v1\n") != std::string::npos);
  CHECK(run_cmd(Command::Minimize, tmp.string()).exit_code == kUserError);
  std::filesystem::remove(tmp);
}
