#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "mlsum/config.hpp"
#include "mlsum/frames.hpp"
#include "mlsum/graph.hpp"
#include "mlsum/text_model.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kTool = MLSUM_TOOL_PATH;
const fs::path kFixtures = MLSUM_FIXTURES_DIR;

int run(const std::string& args, const fs::path& stderr_file = {}) {
    std::string cmd = "'" + kTool.string() + "' " + args + " >/dev/null";
    cmd += stderr_file.empty() ? " 2>/dev/null" : " 2>'" + stderr_file.string() + "'";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "mlsum_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string toy_args() {
    return "--input '" + (kFixtures / "toy").string() + "' --frames '" +
           (kFixtures / "toy_frames.tsv").string() + "'";
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("summarize reproduces the golden summary byte for byte") {
    auto out = temp_dir() / "summary.txt";
    int rc = run("summarize " + toy_args() + " --out '" + out.string() + "'");
    REQUIRE(rc == 0);
    CHECK(slurp(out) == slurp(kFixtures / "golden" / "toy_summary.txt"));

    // and the run is stable
    auto out2 = temp_dir() / "summary2.txt";
    REQUIRE(run("summarize " + toy_args() + " --out '" + out2.string() + "'") == 0);
    CHECK(slurp(out) == slurp(out2));
}

TEST_CASE("lexrank-sentences baseline has its own golden file") {
    auto out = temp_dir() / "baseline.txt";
    int rc = run("summarize --input '" + (kFixtures / "toy").string() +
                 "' --mode lexrank-sentences --out '" + out.string() + "'");
    REQUIRE(rc == 0);
    CHECK(slurp(out) == slurp(kFixtures / "golden" / "toy_summary_lexrank.txt"));
}

TEST_CASE("missing input directory exits 2") {
    CHECK(run("summarize --input /no/such/dir --heuristic-frames --out -") == 2);
}

TEST_CASE("byte budget zero exits 1 with a range message") {
    auto err = temp_dir() / "stderr.txt";
    CHECK(run("summarize " + toy_args() + " --byte-budget 0 --out -", err) == 1);
    CHECK(slurp(err).find("byte_budget") != std::string::npos);
}

TEST_CASE("unknown flags and conflicting frame sources exit 1") {
    CHECK(run("summarize " + toy_args() + " --no-such-flag --out -") == 1);
    CHECK(run("summarize " + toy_args() + " --heuristic-frames --out -") == 1);
}

TEST_CASE("multilayer mode without a frame source advises --heuristic-frames") {
    auto err = temp_dir() / "stderr2.txt";
    CHECK(run("summarize --input '" + (kFixtures / "toy").string() + "' --out -", err) == 2);
    CHECK(slurp(err).find("--heuristic-frames") != std::string::npos);
}

TEST_CASE("self-evaluation scores a clean 1.0") {
    auto dir = temp_dir();
    auto sys_dir = dir / "self_sys";
    auto ref_dir = dir / "self_ref";
    fs::create_directories(sys_dir);
    fs::create_directories(ref_dir);
    std::ofstream(sys_dir / "t1.txt") << "The dam held firm overnight.\n";
    std::ofstream(ref_dir / "t1.A.txt") << "The dam held firm overnight.\n";
    auto report_file = dir / "self.json";
    int rc = run("evaluate --summaries '" + sys_dir.string() + "' --references '" +
                 ref_dir.string() + "' --json '" + report_file.string() + "'");
    REQUIRE(rc == 0);
    auto report = json::parse(slurp(report_file));
    CHECK(report["mean_recall"].get<double>() == doctest::Approx(1.0));
    CHECK(report["ci_low"].get<double>() == doctest::Approx(1.0));
    CHECK(report["ci_high"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("evaluate scores the bundled fixtures with hand counts") {
    auto report_file = temp_dir() / "fixture_eval.json";
    int rc = run("evaluate --summaries '" + (kFixtures / "rouge" / "systems").string() +
                 "' --references '" + (kFixtures / "rouge" / "models").string() + "' --json '" +
                 report_file.string() + "'");
    REQUIRE(rc == 0);
    auto report = json::parse(slurp(report_file));
    CHECK(report["clusters"]["c1"]["recall"].get<double>() == doctest::Approx(2.0 / 3.0));
    CHECK(report["clusters"]["c1"]["precision"].get<double>() == doctest::Approx(0.5));
    CHECK(report["clusters"]["c2"]["recall"].get<double>() == doctest::Approx(1.0));
    REQUIRE(report["missing"].size() == 1);
    CHECK(report["missing"][0].get<std::string>() == "c4");
}

TEST_CASE("evaluate with a missing directory exits 2") {
    CHECK(run("evaluate --summaries /no/such/dir --references /no/such/either") == 2);
}

TEST_CASE("inspect-graph emits the certificates and recomputable top edges") {
    auto dump_file = temp_dir() / "graph.json";
    int rc = run("inspect-graph " + toy_args() + " --dump '" + dump_file.string() +
                 "' --top-k 5");
    REQUIRE(rc == 0);
    auto dump = json::parse(slurp(dump_file));
    CHECK(dump["layers"]["documents"].get<int>() == 4);
    CHECK(dump["layers"]["sentences"].get<int>() == 24);
    CHECK(dump["stochastic"].get<bool>());
    CHECK(dump["preference_normalized"].get<bool>());
    CHECK(dump["column_sums"]["min"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dump["column_sums"]["max"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dump["preference_sum"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

    // recompute the strongest frame edge through the library
    auto corpus = mlsum::ingest_directory(kFixtures / "toy", {});
    auto loaded = mlsum::load_frames(kFixtures / "toy_frames.tsv", corpus);
    auto covered =
        mlsum::cover_sentences(corpus, loaded.frames, mlsum::VerbLexicon::bundled());
    auto centroid = mlsum::centroid_table(corpus, 0.0);
    auto graph = mlsum::build_graph(corpus, covered, {}, centroid);
    REQUIRE(dump["layers"]["frames"].get<std::size_t>() == graph.frame_count());
    double best = 0.0;
    for (const auto& [key, w] : graph.frame_edges) best = std::max(best, w);
    REQUIRE(dump["top_edges"]["frame"].size() == 5);
    CHECK(dump["top_edges"]["frame"][0]["weight"].get<double>() == doctest::Approx(best));
    // descending order within the dump
    double prev = best;
    for (const auto& edge : dump["top_edges"]["frame"]) {
        CHECK(edge["weight"].get<double>() <= prev + 1e-15);
        prev = edge["weight"].get<double>();
    }
}

TEST_CASE("extract-frames emits records load_frames can read back") {
    auto out = temp_dir() / "extracted.tsv";
    int rc = run("extract-frames --input '" + (kFixtures / "toy").string() + "' --out '" +
                 out.string() + "'");
    REQUIRE(rc == 0);
    auto corpus = mlsum::ingest_directory(kFixtures / "toy", {});
    auto loaded = mlsum::load_frames(out, corpus);
    CHECK(loaded.warnings.empty());
    auto direct = mlsum::extract_frames(corpus, mlsum::VerbLexicon::bundled());
    REQUIRE(loaded.frames.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(loaded.frames[i].sentence_id == direct[i].sentence_id);
        CHECK(loaded.frames[i].predicate == direct[i].predicate);
        CHECK(loaded.frames[i].args == direct[i].args);
    }
}

TEST_CASE("dumped config reproduces identical output when fed back") {
    auto dir = temp_dir();
    auto out1 = dir / "cfg_run1.txt";
    auto cfg = dir / "effective.cfg";
    REQUIRE(run("summarize " + toy_args() + " --damping 0.9 --penalty-factor 0.5 --out '" +
                out1.string() + "' --dump-config '" + cfg.string() + "'") == 0);
    auto out2 = dir / "cfg_run2.txt";
    REQUIRE(run("summarize " + toy_args() + " --config '" + cfg.string() + "' --out '" +
                out2.string() + "'") == 0);
    CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("stdout output and trace sidecar") {
    auto dir = temp_dir();
    auto trace_file = dir / "trace.json";
    int rc = run("summarize " + toy_args() + " --out - --trace '" + trace_file.string() + "'");
    REQUIRE(rc == 0);
    auto trace = json::parse(slurp(trace_file));
    CHECK(trace["converged"].get<bool>());
    CHECK(trace["documents"].get<int>() == 4);
    CHECK(trace["total_bytes"].get<int>() <= 665);
    CHECK(trace["frames"].get<int>() > 0);
    CHECK(!trace["selected"].empty());
}

TEST_SUITE_END();
