#include <doctest.h>

#include <filesystem>

#include "mlsum/errors.hpp"
#include "mlsum/summarizer.hpp"
#include "support/test_corpora.hpp"

using namespace mlsum;

namespace {

const std::filesystem::path kFixtures = MLSUM_FIXTURES_DIR;

Corpus toy_corpus() {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures / "toy")) {
        if (entry.is_regular_file()) paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    return ingest(paths, {});
}

std::string summary_text(const Summary& summary) {
    std::string text;
    for (const auto& s : summary.selected) {
        text += s.text;
        text += '\n';
    }
    return text;
}

} // namespace

TEST_SUITE_BEGIN("summarizer");

TEST_CASE("select_under_budget arithmetic and skip rule") {
    std::vector<RankedSentence> order = {{0, 0.5}, {1, 0.3}, {2, 0.2}};
    std::vector<std::size_t> lens = {300, 300, 300};
    auto picked = select_under_budget(order, lens, 665);
    REQUIRE(picked.size() == 2);
    CHECK(picked[0].sentence_id == 0);
    CHECK(picked[1].sentence_id == 1);

    // the top sentence does not fit, the second does
    lens = {700, 300, 300};
    picked = select_under_budget(order, lens, 665);
    REQUIRE(picked.size() == 2);
    CHECK(picked[0].sentence_id == 1);
    CHECK(picked[1].sentence_id == 2);

    // strict stop ends the walk at the first overflow
    picked = select_under_budget(order, lens, 665, true);
    CHECK(picked.empty());

    // hand-simulated mixed walk: 665 - 400 = 265, skip 300, take 250
    order = {{0, 0.5}, {1, 0.3}, {2, 0.2}, {3, 0.1}};
    lens = {400, 300, 250, 10};
    picked = select_under_budget(order, lens, 665);
    REQUIRE(picked.size() == 3);
    CHECK(picked[0].sentence_id == 0);
    CHECK(picked[1].sentence_id == 2);
    CHECK(picked[2].sentence_id == 3);  // 15 bytes remain, the 10-byte tail fits
}

TEST_CASE("a one-sentence corpus summarizes to that sentence") {
    auto corpus = ingest_texts({{"a", "Short sentence here."}}, {});
    auto summary = summarize(corpus, {}, {});
    REQUIRE(summary.selected.size() == 1);
    CHECK(summary.selected[0].text == "Short sentence here.");
    CHECK(summary.total_bytes == corpus.sentence(0).byte_len);
    CHECK(summary.trace.synthetic_frames == 1);  // no annotation supplied
}

TEST_CASE("a budget below every sentence yields an empty summary and a note") {
    auto corpus = ingest_texts({{"a", "This sentence is rather long."}}, {});
    SummaryConfig cfg;
    cfg.byte_budget = 5;
    auto summary = summarize(corpus, {}, cfg);
    CHECK(summary.selected.empty());
    CHECK(summary.total_bytes == 0);
    REQUIRE(!summary.trace.notes.empty());
    CHECK(summary.trace.notes.back().find("byte budget") != std::string::npos);
}

TEST_CASE("summary never exceeds the byte budget") {
    mlsum::testing::CorpusGenerator gen(21);
    for (int trial = 0; trial < 10; ++trial) {
        auto instance = gen.make();
        SummaryConfig cfg;
        cfg.byte_budget = 150 + static_cast<int>(gen.pick(0, 400));
        auto summary = summarize(instance.corpus, instance.frames, cfg);
        CHECK(summary.total_bytes <= static_cast<std::size_t>(cfg.byte_budget));
        std::size_t recount = 0;
        std::set<int> unique;
        for (const auto& s : summary.selected) {
            recount += s.byte_len;
            unique.insert(s.sentence_id);
        }
        CHECK(recount == summary.total_bytes);
        CHECK(unique.size() == summary.selected.size());
    }
}

TEST_CASE("rerunning the pipeline is byte-identical") {
    auto corpus = toy_corpus();
    auto loaded = load_frames(kFixtures / "toy_frames.tsv", corpus);
    REQUIRE(loaded.warnings.empty());
    SummaryConfig cfg;
    auto first = summarize(corpus, loaded.frames, cfg);
    auto second = summarize(corpus, loaded.frames, cfg);
    CHECK(summary_text(first) == summary_text(second));
    CHECK(first.total_bytes == second.total_bytes);
    CHECK(first.total_bytes <= 665);
    CHECK(!first.selected.empty());

    // a fresh ingestion of the same files changes nothing either
    auto corpus2 = toy_corpus();
    auto loaded2 = load_frames(kFixtures / "toy_frames.tsv", corpus2);
    auto third = summarize(corpus2, loaded2.frames, cfg);
    CHECK(summary_text(first) == summary_text(third));
}

TEST_CASE("original-order flag reorders by document position only") {
    auto corpus = toy_corpus();
    auto loaded = load_frames(kFixtures / "toy_frames.tsv", corpus);
    SummaryConfig cfg;
    auto ranked = summarize(corpus, loaded.frames, cfg);
    cfg.original_order = true;
    auto repositioned = summarize(corpus, loaded.frames, cfg);
    REQUIRE(ranked.selected.size() == repositioned.selected.size());
    std::set<int> a, b;
    for (const auto& s : ranked.selected) a.insert(s.sentence_id);
    for (const auto& s : repositioned.selected) b.insert(s.sentence_id);
    CHECK(a == b);  // same set, different order
    for (std::size_t i = 1; i < repositioned.selected.size(); ++i) {
        CHECK(repositioned.selected[i - 1].sentence_id < repositioned.selected[i].sentence_id);
    }
}

TEST_CASE("baseline_lexrank: single sentence and symmetric tie-break") {
    auto corpus = ingest_texts({{"a", "Only sentence."}}, {});
    SummaryConfig cfg;
    cfg.mode = SummaryMode::LexrankSentences;
    auto summary = summarize(corpus, {}, cfg);
    REQUIRE(summary.selected.size() == 1);
    CHECK(summary.selected[0].text == "Only sentence.");

    // three pairwise-equal sentences: uniform ranking, ties by id
    auto sym = ingest_texts({{"a", "Rho sigma."}, {"b", "Sigma tau."}, {"c", "Tau rho."}}, {});
    auto base = baseline_lexrank(sym, cfg);
    REQUIRE(base.trace.ranking.size() == 3);
    CHECK(base.trace.ranking[0].sentence_id == 0);
    CHECK(base.trace.ranking[0].score == doctest::Approx(1.0 / 3.0));
    CHECK(base.trace.ranking[1].sentence_id == 1);
    CHECK(base.trace.ranking[2].sentence_id == 2);
}

TEST_CASE("single-document corpora rank identically in multilayer and lexrank-frames") {
    mlsum::testing::CorpusGenerator gen(31);
    for (int trial = 0; trial < 15; ++trial) {
        auto instance = gen.make(1, 1);
        SummaryConfig multilayer;
        multilayer.mode = SummaryMode::Multilayer;
        SummaryConfig frames_only;
        frames_only.mode = SummaryMode::LexrankFrames;
        auto a = summarize(instance.corpus, instance.frames, multilayer);
        auto b = summarize(instance.corpus, instance.frames, frames_only);
        REQUIRE(a.trace.ranking.size() == b.trace.ranking.size());
        for (std::size_t i = 0; i < a.trace.ranking.size(); ++i) {
            CHECK(a.trace.ranking[i].sentence_id == b.trace.ranking[i].sentence_id);
            CHECK(a.trace.ranking[i].score ==
                  doctest::Approx(b.trace.ranking[i].score).epsilon(1e-14));
        }
    }
}

TEST_CASE("modes disagree on multi-document corpora when layers matter") {
    auto corpus = toy_corpus();
    auto loaded = load_frames(kFixtures / "toy_frames.tsv", corpus);
    SummaryConfig multilayer;
    SummaryConfig frames_only;
    frames_only.mode = SummaryMode::LexrankFrames;
    auto a = summarize(corpus, loaded.frames, multilayer);
    auto b = summarize(corpus, loaded.frames, frames_only);
    bool any_difference = false;
    REQUIRE(a.trace.ranking.size() == b.trace.ranking.size());
    for (std::size_t i = 0; i < a.trace.ranking.size(); ++i) {
        if (a.trace.ranking[i].sentence_id != b.trace.ranking[i].sentence_id ||
            std::abs(a.trace.ranking[i].score - b.trace.ranking[i].score) > 1e-12) {
            any_difference = true;
        }
    }
    CHECK(any_difference);  // the document and sentence layers carry signal
}

TEST_CASE("lexrank-sentences mode requires no frames at all") {
    auto corpus = toy_corpus();
    SummaryConfig cfg;
    cfg.mode = SummaryMode::LexrankSentences;
    auto summary = summarize(corpus, {}, cfg);
    CHECK(!summary.selected.empty());
    CHECK(summary.total_bytes <= 665);
    CHECK(summary.trace.frame_count == 0);
}

TEST_SUITE_END();
