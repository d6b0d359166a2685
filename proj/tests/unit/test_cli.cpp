#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include <braidlab/cli.hpp>
#include <braidlab/free_group.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "braidlab");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = braidlab::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Every non-empty output line parses as JSON.
bool all_lines_json(const std::string& text) {
  std::istringstream s(text);
  std::string line;
  bool any = false;
  while (std::getline(s, line)) {
    if (line.empty()) continue;
    if (!json::accept(line)) return false;
    any = true;
  }
  return any;
}

}  // namespace

TEST_CASE("sign, compare and reduce") {
  auto r = run({"sign", "s1 s2^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "positive(1)\n");
  r = run({"compare", "s1", "s1"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  r = run({"reduce", "s1 s2 s1^-1"});
  CHECK(r.out == "s2^-1 s1 s2\n");
  r = run({"--json", "sign", "s2^-3"});
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "negative");
  CHECK(j["main_index"] == 2);
  CHECK(j["verdict"] == "negative(2)");
}

TEST_CASE("reduce --trace emits one JSON line per step") {
  const auto r = run({"reduce", "--trace", "s1 s2 s1^-1 s2 s1 s2^-1 s1^-1"});
  CHECK(r.code == 0);
  std::istringstream s(r.out);
  std::string line;
  int steps = 0;
  while (std::getline(s, line)) {
    if (!json::accept(line)) continue;
    const json j = json::parse(line);
    if (!j.contains("step")) continue;
    CHECK(j["handle"].contains("start"));
    CHECK(j["word"].is_string());
    ++steps;
  }
  CHECK(steps >= 1);
}

TEST_CASE("free-group commands") {
  CHECK(run({"embed", "x"}).out == "s1 s2^-1\n");
  CHECK(run({"unembed", "s1^2 s2^-2"}).out == "y\n");
  CHECK(run({"aut", "phi", "y", "--power", "-1"}).out == "x^-1 y x^-2 y\n");
  CHECK(run({"kn-rewrite", "3", "x y x^-1"}).out == "g3 g2^-1\n");
  CHECK(run({"exotic-compare", "x", "y"}).out == "less\n");
  CHECK(run({"exotic-compare", "--ctx", "kn:3", "1", "g2"}).out == "less\n");
  const auto basis = run({"--json", "kn-basis", "4"});
  CHECK(json::parse(basis.out)["basis"].size() == 4);
  CHECK(all_lines_json(run({"--json", "burau", "s1 s2"}).out));
}

TEST_CASE("probes") {
  auto r = run({"probe-convexity", "--gens", "x", "--radius", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("not convex", 0) == 0);
  r = run({"--json", "probe-convexity", "--gens", "x^2,y"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["witness"]["rechecked"] == true);
  r = run({"probe-convexity", "--gens", "1"});
  CHECK(r.code == 0);
  r = run({"--json", "probe-conradian", "--radius", "6"});
  CHECK(r.code == 0);
  CHECK(all_lines_json(r.out));
}

TEST_CASE("stdin mode") {
  const auto r = run({"--stdin", "sign"}, "s1\ns2^-1\n\n");
  CHECK(r.code == 0);
  CHECK(r.out == "positive(1)\nnegative(2)\ntrivial\n");
  const auto j = run({"--json", "--stdin", "sign"}, "s1\ns2\n");
  CHECK(json::parse(j.out).size() == 2);
}

TEST_CASE("errors are reported on stderr and as JSON") {
  auto r = run({"sign", "s3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error") != std::string::npos);
  r = run({"--json", "sign", "s1 q"});
  CHECK(r.code == 2);
  json j = json::parse(r.out);
  CHECK(j["error"]["kind"] == "parse");
  CHECK(j["error"]["offset"] == 3);
  CHECK(j["exit_code"] == 2);
  for (const auto& args : std::vector<std::vector<std::string>>{{"--json"},
                                                                 {"--json", "bogus"},
                                                                 {"--json", "sign"},
                                                                 {"--json", "kn-rewrite", "3", "x"},
                                                                 {"--json", "aut", "nope", "x"},
                                                                 {"--json", "verify", "--trials", "0"}}) {
    CAPTURE(args.back());
    r = run(args);
    CHECK(r.code == 2);
    CHECK(all_lines_json(r.out));
  }
}

TEST_CASE("the step budget comes from the environment") {
  ::setenv("BRAIDLAB_BUDGET", "1", 1);
  auto r = run({"--json", "reduce", "s1 s2 s1^-1 s2 s1 s2^-1 s1^-1"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["kind"] == "budget");
  ::setenv("BRAIDLAB_BUDGET", "abc", 1);
  r = run({"sign", "s1"});
  CHECK(r.code == 2);
  ::unsetenv("BRAIDLAB_BUDGET");
  r = run({"reduce", "s1 s2 s1^-1 s2 s1 s2^-1 s1^-1"});
  CHECK(r.code == 0);
}

TEST_CASE("verify is reproducible") {
  const auto a = run({"--json", "verify", "--seed", "1", "--trials", "20"});
  const auto b = run({"--json", "verify", "--seed", "1", "--trials", "20", "--threads", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::accept(a.out));
}
