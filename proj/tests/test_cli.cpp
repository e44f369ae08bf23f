#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "sft/verdict.hpp"

namespace {
  std::string data(std::string const& name) {
    return std::string(SFT_TEST_DATA_DIR) + "/" + name;
  }

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "sft");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int const code = sft::cli::run(static_cast<int>(argv.size()), argv.data(),
                                   out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    return std::filesystem::temp_directory_path()
           / ("sft_cli_" + std::to_string(::getpid()) + "_" + name);
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream     in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze prints the report") {
    auto const r = run({"analyze", data("golden.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"conclusion\": \"not_isomorphic\"") != std::string::npos);
    auto const swap = run({"analyze", data("swap.txt")});
    CHECK(swap.code == 0);
    CHECK(swap.out.find("\"conclusion\": \"inconclusive\"") != std::string::npos);
  }

  TEST_CASE("analyze --out then verify") {
    auto const path = scratch("report.json");
    auto const r    = run({"analyze", data("golden.txt"), "--depth", "3",
                           "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "conclusion: not_isomorphic\n");
    auto const v = run({"verify", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out == "ok: conclusion not_isomorphic re-verified\n");

    auto text = slurp(path);
    auto pos  = text.find("\"non_member\": \"L:1 C: R:1 O:0\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("\"non_member\": \"L:1 C: R:1 O:0\"").size(),
                 "\"non_member\": \"L:12 C: R:12 O:0\"");
    std::ofstream(path) << text;
    auto const bad = run({"verify", path.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("FAIL ", 0) == 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run({"analyze", data("zero_row.txt")}).code == 2);
    CHECK(run({"analyze", data("missing.txt")}).code == 2);
    CHECK(run({"analyze", data("golden.txt"), "--depth", "1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"words", data("golden.txt")}).code == 2);
    CHECK(run({"witness", "invariant", data("swap.txt")}).code == 2);
    CHECK(run({"witness", "minimal", data("identity.txt"), "1", "2"}).code == 2);
    CHECK(run({"witness", "freeness", data("golden.txt"), "2", "1"}).code == 2);
    auto const r = run({"words", data("zero_row.txt"), "2"});
    CHECK(r.err.find("ZeroRow") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("transfer apply") {
    auto const r = run({"transfer", "apply", data("golden.txt"),
                        data("weight_golden.txt"), data("function_golden.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == "depth 1\n1 11/2\n2 1/1\n");
  }

  TEST_CASE("transfer recover reproduces the weight") {
    auto const r = run({"transfer", "recover", data("golden.txt"),
                        data("weight_zero.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == "depth 2\n11 0/1\n12 1/1\n21 1/1\ndomain 1\n1\n2\n");
  }

  TEST_CASE("transfer equiv") {
    auto const same = run({"transfer", "equiv", data("golden.txt"),
                           data("weight_golden.txt"),
                           data("weight_golden_scaled.txt")});
    CHECK(same.code == 0);
    CHECK(same.out == "equivalent: true\ndepth 1\n1 1/2\n2 1/2\n");
    auto const diff = run({"transfer", "equiv", data("golden.txt"),
                           data("weight_golden.txt"), data("weight_zero.txt")});
    CHECK(diff.code == 0);
    CHECK(diff.out == "equivalent: false\n");
  }

  TEST_CASE("witness subcommands") {
    auto const inv = run({"witness", "invariant", data("golden.txt")});
    CHECK(inv.code == 0);
    CHECK(inv.out
          == "r: 121\nmember: L:12 C: R:12 O:0\nnon_member: L:1 C: R:1 O:0\n"
             "verified: yes\n");
    auto const min = run({"witness", "minimal", data("golden.txt"), "21", "12"});
    CHECK(min.out == "s_prefix: 2112\nt: 2\nverified: yes\n");
    auto const fr = run({"witness", "freeness", data("full2.txt"), "0", "2"});
    CHECK(fr.code == 0);
    CHECK(fr.out.find("verified: yes") != std::string::npos);
  }

  TEST_CASE("words") {
    CHECK(run({"words", data("golden.txt"), "3"}).out
          == "111\n112\n121\n211\n212\n");
    CHECK(run({"words", data("golden.txt"), "2", "--periodic"}).out
          == "11\n12\n21\n");
    CHECK(run({"words", data("golden.txt"), "0"}).code == 2);
  }
}
