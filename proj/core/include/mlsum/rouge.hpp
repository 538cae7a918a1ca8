#ifndef MLSUM_ROUGE_HPP
#define MLSUM_ROUGE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mlsum {

struct RougeSettings {
    bool stem = false;
    bool remove_stopwords = false;
};

struct RougeScore {
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
    std::size_t match_count = 0;  // clipped unigram matches
    double ref_count = 0.0;       // mean reference token count
    std::size_t cand_count = 0;   // candidate token count
};

/// Evaluation tokenizer, deliberately independent of the pipeline one:
/// whitespace split, outer punctuation stripped, lowercased.
std::vector<std::string> rouge_tokens(std::string_view text, const RougeSettings& settings = {});

/// Clipped unigram overlap against the per-token maximum over references;
/// recall denominator is the mean reference length. Requires at least one
/// reference; an empty candidate scores zero.
RougeScore rouge1(std::string_view candidate, const std::vector<std::string>& references,
                  const RougeSettings& settings = {});

struct EvalReport {
    std::map<std::string, RougeScore> per_cluster;
    std::vector<std::string> missing;  // summaries with no matching reference
    double mean_recall = 0.0;
    double ci_low = 0.0;   // 95% nonparametric bootstrap over clusters
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    std::size_t resamples = 0;
};

/// Score `<summary_dir>/<cluster>.txt` against every
/// `<reference_dir>/<cluster>.<assessor>.txt`, then bootstrap the mean
/// recall with a seeded generator (raw engine outputs, so results are
/// bit-stable across platforms).
EvalReport evaluate_run(const std::filesystem::path& summary_dir,
                        const std::filesystem::path& reference_dir,
                        std::uint64_t seed = 2004, std::size_t resamples = 10000,
                        const RougeSettings& settings = {});

} // namespace mlsum

#endif
