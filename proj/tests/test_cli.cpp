// Copyright 2026 The Artin Retractions Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Golden tests for the command-line tool: exit codes and byte-exact output.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <doctest.h>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(ARTIN_TESTDATA_DIR) + "/" + name; }

Run run(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const std::string err_path = "cli_test_stderr_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string("'") + ARTIN_CLI_PATH + "' " + args + " 2>" + err_path;
  if (!stdin_text.empty()) {
    const std::string in_path = err_path + ".in";
    std::ofstream(in_path) << stdin_text;
    cmd += " <" + in_path;
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  std::ifstream err_in(err_path);
  std::stringstream err;
  err << err_in.rdbuf();
  std::remove(err_path.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err.str()};
}

}  // namespace

TEST_CASE("classify") {
  auto r = run("classify " + data("good.json"));
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"compatible":true,"cross_labels":[{"blocks":[0,1],"label":4}],"partition":[["a","b"],["c","d"]]})"
        "\n");

  r = run("classify " + data("bad.json"));
  CHECK(r.code == 1);
  CHECK(r.out ==
        R"({"certificate":{"labels":[3,3,4],"rule":"OddOddRequiresOdd","triple":["a","b","c"]},"compatible":false})"
        "\n");
  CHECK(r.err.empty());

  std::ifstream f(data("good.json"));
  std::stringstream text;
  text << f.rdbuf();
  CHECK(run("classify -", text.str()).code == 0);
}

TEST_CASE("input errors exit 2 with one line") {
  for (const std::string args :
       {"classify " + data("truncated.json"), std::string("classify /nonexistent.json"),
        std::string("bogus"), std::string("word eq --m 5 \"a b\" \"a ^\""),
        std::string("word nf --m 1 a"), std::string("hom list --ma 3"),
        std::string("gen parabolic --blocks 2,x")}) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
  CHECK(run("word eq --m 5 \"a b\" \"a ^\"").err.find("offset 2") != std::string::npos);
}

TEST_CASE("synth and apply") {
  auto r = run("synth " + data("chain.json") + " --keep y,z --trace");
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"map":{"x":"y","y":"y","z":"z"},"target":["y","z"],"trace":[{"removed":"x","rule":"PhiViaPsi","target":"y"}]})"
        "\n");
  r = run("apply " + data("chain.json") + " \"x z x^-1\" --keep y,z");
  CHECK(r.code == 0);
  CHECK(r.out == R"({"image":"y z y^-1","word":"x z x^-1"})" "\n");
  r = run("synth " + data("bad.json") + " --keep a");
  CHECK(r.code == 1);
  CHECK(r.out.find("OddOddRequiresOdd") != std::string::npos);
  CHECK(run("synth " + data("chain.json") + " --keep q").code == 2);
}

TEST_CASE("words") {
  auto r = run("word eq --m 5 \"a b a b a\" \"b a b a b\"");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"equal\":true}\n");
  r = run("word eq --m 3 \"a b\" \"b a\"");
  CHECK(r.code == 1);
  CHECK(r.out == "{\"equal\":false}\n");
  r = run("word nf --m 3 \"b a b a^-1\"");
  CHECK(r.out ==
        R"({"delta_power":0,"factors":[{"first":"a","length":2}],"kind":"garside","m":"3","word":"a b"})"
        "\n");
  CHECK(run("word reduce \"a b b^-1 a\"").out == "{\"word\":\"a^2\"}\n");
  CHECK(run("word abelianize \"a b^-1\" --per-generator").out ==
        R"({"coordinates":{"a":1,"b":-1},"grading":"per_generator"})" "\n");
  CHECK(run("word eq --m inf --gens s,t \"s t t^-1\" s").code == 0);
}

TEST_CASE("trees") {
  const auto r = run("tree classify --orders 2,3 \"x y x y^2\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"translation_length\":4") != std::string::npos);
  CHECK(r.out.find("\"type\":\"hyperbolic\"") != std::string::npos);
  CHECK(run("tree classify --orders 2,3 \"x\"").out.find("\"elliptic\"") != std::string::npos);
}

TEST_CASE("homomorphisms") {
  auto r = run("hom list --ma 6 --mb 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"case\":\"5c\"") != std::string::npos);
  CHECK(run("hom verify --ma 6 --mb 3 --image \"b1^-1 b1 b2\"").code == 0);
  CHECK(run("hom verify --ma 3 --mb 5 --image b2").code == 1);
  r = run("hom classify --ma 2 --mb 5 --image \"b1 b2 b1 b2 b1 b1 b2 b1 b2 b1 b1^-1\" --bound 4");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("params":{"t1":1,"t2":-1})") != std::string::npos);
}

TEST_CASE("generators and determinism") {
  const auto a = run("gen retract --n 6 --seed 3");
  const auto b = run("gen retract --n 6 --seed 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto p = run("gen parabolic --blocks 2,3 --seed 5 --cross 6");
  CHECK(p.code == 0);
  CHECK(run("classify -", p.out).code == 0);
  CHECK(run("--pretty classify " + data("good.json")).out.find("\n  \"compatible\": true") !=
        std::string::npos);
  CHECK(run("classify " + data("good.json") + " --pretty").out ==
        run("--pretty classify " + data("good.json")).out);
}
