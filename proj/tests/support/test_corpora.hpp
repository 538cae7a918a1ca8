#ifndef MLSUM_TESTS_SUPPORT_TEST_CORPORA_HPP
#define MLSUM_TESTS_SUPPORT_TEST_CORPORA_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mlsum/frames.hpp"
#include "mlsum/text_model.hpp"

namespace mlsum::testing {

/// Three documents with a fully hand-checkable vocabulary:
///   df(alpha)=1 df(beta)=2 df(gamma)=3 df(delta)=3 df(epsilon)=2 df(zeta)=1
inline Corpus abc_corpus() {
    return ingest_texts(
        {
            {"d0", "Alpha beta gamma. Alpha delta."},
            {"d1", "Beta gamma delta. Epsilon beta."},
            {"d2", "Gamma epsilon. Zeta gamma delta."},
        },
        {});
}

/// The running-example shape: two documents, two sentences each, two frames
/// per sentence (eight frames total). Frame ids are dense in sentence order.
/// Every frame carries the predicate "seized", which occurs in d0 only and
/// therefore has positive idf: causality is 1 for every pair, so the frame
/// layer is a complete graph (all 28 unordered pairs weighted).
struct PaperShape {
    Corpus corpus;
    std::vector<Frame> frames;
};

inline PaperShape paper_shape_corpus() {
    PaperShape fixture;
    fixture.corpus = ingest_texts(
        {
            {"d0", "Insurgents seized the port on Monday. Government troops left the city."},
            {"d1", "Rebels attacked the city at dawn. Troops abandoned the port quickly."},
        },
        {});
    auto add = [&](int sentence,
                   std::initializer_list<std::pair<Role, const char*>> args) {
        Frame f;
        f.id = static_cast<int>(fixture.frames.size());
        f.sentence_id = sentence;
        f.predicate = "seized";
        for (const auto& [role, text] : args) f.args[role] = text;
        f.complete = classify_completeness(f);
        fixture.frames.push_back(std::move(f));
    };
    add(0, {{Role::A0, "Insurgents"}, {Role::A1, "the port"}, {Role::AmTmp, "Monday"}});
    add(0, {{Role::A0, "Insurgents"}});
    add(1, {{Role::A0, "Government troops"}, {Role::A1, "the city"}});
    add(1, {{Role::A0, "troops"}});
    add(2, {{Role::A0, "Rebels"}, {Role::A1, "the city"}, {Role::AmTmp, "dawn"}});
    add(2, {{Role::A1, "the city"}, {Role::AmLoc, "dawn"}});
    add(3, {{Role::A0, "Troops"}, {Role::A1, "the port"}});
    add(3, {{Role::A0, "Troops"}});
    return fixture;
}

/// Deterministic random corpora for the property and acceptance suites.
/// All draws use raw engine output so results do not depend on the standard
/// library's distribution implementations.
class CorpusGenerator {
public:
    explicit CorpusGenerator(std::uint64_t seed) : engine_(seed) {}

    std::size_t pick(std::size_t lo, std::size_t hi) {  // inclusive bounds
        return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
    }

    double unit() { return static_cast<double>(engine_() % 1000000) / 1000000.0; }

    const std::string& word() {
        static const std::vector<std::string> vocab = {
            "storm",   "council", "river",   "barrier", "flood",   "mayor",
            "troops",  "city",    "port",    "village", "harvest", "drought",
            "strike",  "union",   "court",   "verdict", "rocket",  "launch",
            "summit",  "treaty",  "border",  "market",  "crisis",  "rescue",
            "team",    "coach",   "final",   "victory", "voters",  "ballot",
            "reform",  "minister", "protest", "crowd",  "bridge",  "tunnel",
            "engine",  "factory", "workers", "wages",
        };
        return vocab[pick(0, vocab.size() - 1)];
    }

    struct Instance {
        Corpus corpus;
        std::vector<Frame> frames;  // dense ids, completeness classified
    };

    /// docs in [min_docs, max_docs], sentences per doc in [2, 10], frames
    /// per sentence in [1, 4].
    Instance make(std::size_t min_docs = 2, std::size_t max_docs = 5) {
        Instance instance;
        std::size_t n_docs = pick(min_docs, max_docs);
        std::vector<std::pair<std::string, std::string>> texts;
        std::vector<std::vector<std::vector<std::string>>> doc_sentence_words;
        for (std::size_t d = 0; d < n_docs; ++d) {
            std::size_t n_sents = pick(2, 10);
            std::string text;
            std::vector<std::vector<std::string>> sent_words;
            for (std::size_t s = 0; s < n_sents; ++s) {
                std::size_t n_words = pick(4, 9);
                std::vector<std::string> words;
                for (std::size_t w = 0; w < n_words; ++w) words.push_back(word());
                std::string sentence;
                for (std::size_t w = 0; w < words.size(); ++w) {
                    if (w > 0) sentence += ' ';
                    sentence += words[w];
                }
                sentence[0] = static_cast<char>(sentence[0] - 'a' + 'A');
                sentence += '.';
                if (!text.empty()) text += ' ';
                text += sentence;
                sent_words.push_back(std::move(words));
            }
            texts.emplace_back("doc" + std::to_string(d), std::move(text));
            doc_sentence_words.push_back(std::move(sent_words));
        }
        instance.corpus = ingest_texts(texts, {});

        int sentence_id = 0;
        for (const auto& doc : doc_sentence_words) {
            for (const auto& words : doc) {
                std::size_t n_frames = pick(1, 4);
                for (std::size_t f = 0; f < n_frames; ++f) {
                    Frame frame;
                    frame.id = static_cast<int>(instance.frames.size());
                    frame.sentence_id = sentence_id;
                    frame.predicate = words[pick(0, words.size() - 1)];
                    auto random_span = [&]() {
                        std::size_t len = pick(1, std::min<std::size_t>(3, words.size()));
                        std::size_t start = pick(0, words.size() - len);
                        std::string span;
                        for (std::size_t w = start; w < start + len; ++w) {
                            if (!span.empty()) span += ' ';
                            span += words[w];
                        }
                        return span;
                    };
                    if (pick(0, 9) < 8) frame.args[Role::A0] = random_span();
                    if (pick(0, 9) < 6) frame.args[Role::A1] = random_span();
                    if (pick(0, 9) < 3) frame.args[Role::A2] = random_span();
                    if (pick(0, 9) < 3) frame.args[Role::AmTmp] = "Monday";
                    if (pick(0, 9) < 3) frame.args[Role::AmLoc] = "Rome";
                    frame.complete = classify_completeness(frame);
                    instance.frames.push_back(std::move(frame));
                }
                ++sentence_id;
            }
        }
        return instance;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mlsum::testing

#endif
