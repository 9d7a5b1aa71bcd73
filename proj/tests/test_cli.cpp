// Copyright 2026 The Tractatus Network Authors.
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

// Runs the tnet executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "tnet/document.hpp"

using namespace tnet;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const fs::path& scratch) {
  const auto out = scratch / "stdout.txt";
  const auto err = scratch / "stderr.txt";
  const std::string cmd = std::string(TNET_CLI) + " " + args + " >" + out.string() + " 2>" +
                          err.string();
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  return r;
}

std::string fixture(const std::string& name) { return (test::fixture_dir() / name).string(); }
std::string data(const std::string& name) { return (test::data_dir() / name).string(); }

}  // namespace

TEST_CASE("unknown subcommands and bad flags are usage errors") {
  const auto dir = test::scratch_dir("cli-usage");
  CHECK(run("frobnicate", dir).status == 1);
  CHECK(run("", dir).status == 1);
  CHECK(run("simnet --manifest " + data("manifest.tsv"), dir).status == 1);
  CHECK(run("simnet --manifest " + data("manifest.tsv") + " --lang de --threshold abc --out " +
                (dir / "o").string(),
            dir)
            .status == 1);
  fs::remove_all(dir);
}

TEST_CASE("every subcommand has help") {
  const auto dir = test::scratch_dir("cli-help");
  for (const char* cmd : {"ingest", "stats", "simnet", "conceptnet", "align", "translate",
                          "search", "compare", "serve"}) {
    const auto r = run(std::string(cmd) + " --help", dir);
    CAPTURE(cmd);
    CHECK(r.status == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("data errors exit with status 2") {
  const auto dir = test::scratch_dir("cli-data");
  CHECK(run("stats --manifest " + (dir / "missing.tsv").string(), dir).status == 2);
  CHECK(run("simnet --manifest " + data("manifest.tsv") + " --lang xx --out " + (dir / "o").string(),
            dir)
            .status == 2);
  fs::remove_all(dir);
}

TEST_CASE("stats prints one row per version") {
  const auto dir = test::scratch_dir("cli-stats");
  const auto r = run("stats --manifest " + fixture("manifest.tsv"), dir);
  CHECK(r.status == 0);
  CHECK(r.out.rfind("language\ttranslator\tpropositions\ttokens\ttypes\n", 0) == 0);
  CHECK(r.out.find("\nen\tsynthetic\t8\t") != std::string::npos);
  CHECK(r.out.find("\nru\tsynthetic\t7\t") != std::string::npos);
  const auto de = run("stats --manifest " + data("manifest.tsv"), dir);
  CHECK(de.out.find("\nde\t") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("simnet writes one document and is byte-reproducible") {
  const auto dir = test::scratch_dir("cli-simnet");
  const auto args = "simnet --manifest " + data("manifest.tsv") + " --lang de --threshold 0.3 --out ";
  REQUIRE(run(args + (dir / "a").string(), dir).status == 0);
  REQUIRE(run(args + (dir / "b").string(), dir).status == 0);
  const auto a = read_file(dir / "a" / "propositions-de.json");
  CHECK(a == read_file(dir / "b" / "propositions-de.json"));
  CHECK(read_file(dir / "a" / "index.json") == read_file(dir / "b" / "index.json"));
  CHECK(load_bundle(dir / "a").size() == 1);
  CHECK_FALSE(fs::exists(dir / "a" / ".tnet.lock"));
  fs::remove_all(dir);
}

TEST_CASE("a held lock on the output directory stops a second run") {
  const auto dir = test::scratch_dir("cli-lock");
  fs::create_directories(dir / "o");
  std::ofstream(dir / "o" / ".tnet.lock") << "";
  const auto r = run("simnet --manifest " + data("manifest.tsv") + " --lang de --out " +
                         (dir / "o").string(),
                     dir);
  CHECK(r.status == 2);
  CHECK(r.err.find("locked") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("resource directory can be overridden from the environment") {
  const auto dir = test::scratch_dir("cli-env");
  const auto r = run("simnet --manifest " + fixture("manifest.tsv") + " --lang en --out " +
                         (dir / "o").string(),
                     dir);
  CHECK(r.status == 0);
  const std::string cmd = "TNET_RESOURCES=" + (dir / "nowhere").string() + " " + TNET_CLI +
                          " simnet --manifest " + fixture("manifest.tsv") + " --lang en --out " +
                          (dir / "o2").string() + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(raw) == 2);
  fs::remove_all(dir);
}

TEST_CASE("conceptnet, align, translate, search and compare run end to end") {
  const auto dir = test::scratch_dir("cli-pipeline");
  const auto out = (dir / "o").string();
  CHECK(run("conceptnet --manifest " + fixture("manifest.tsv") + " --lang en --concepts " +
                fixture("en_synth_concepts.txt") + " --out " + out,
            dir)
            .status == 0);
  CHECK(run("conceptnet --manifest " + fixture("manifest.tsv") + " --lang fr --out " + out, dir)
            .status == 0);
  CHECK(run("simnet --manifest " + fixture("manifest.tsv") + " --lang en --out " + out, dir)
            .status == 0);
  CHECK(run("simnet --manifest " + fixture("manifest.tsv") + " --lang fr --out " + out, dir)
            .status == 0);
  CHECK(load_bundle(out).size() == 4);

  CHECK(run("align --manifest " + fixture("toy_manifest.tsv") + " --src de --tgt en --out " + out,
            dir)
            .status == 0);
  CHECK(read_file(dir / "o" / "align-de-en.txt") == "1\t1-1\n2\t1-1\n");

  const auto t = run("translate --manifest " + fixture("toy_manifest.tsv") +
                         " --src de --tgt en --concept haus",
                     dir);
  CHECK(t.status == 0);
  CHECK(t.out.find("\nhouse\t") != std::string::npos);

  const auto s = run("search --bundle " + out + " --net propositions-en-synthetic --q garden --k 3",
                     dir);
  CHECK(s.status == 0);
  CHECK_FALSE(s.out.empty());
  CHECK(run("search --bundle " + out + " --net nope --q garden", dir).status == 2);

  const auto c = run("compare --a " + out + "/propositions-en-synthetic.json --b " + out +
                         "/propositions-en-synthetic.json",
                     dir);
  CHECK(c.status == 0);
  const auto report = nlohmann::json::parse(c.out);
  CHECK(report["node_jaccard"] == 1.0);
  CHECK(report["edge_jaccard"] == 1.0);

  const auto i = run("ingest --manifest " + fixture("manifest.tsv") + " --out " + out, dir);
  CHECK(i.status == 0);
  CHECK(i.out.find("1.2\tmissing from ru:synthetic") != std::string::npos);
  fs::remove_all(dir);
}
