#include "mlsum/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "mlsum/errors.hpp"
#include "mlsum/text_model.hpp"

namespace mlsum {

std::vector<std::string> rouge_tokens(std::string_view text, const RougeSettings& settings) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) continue;
        std::string_view word = text.substr(start, i - start);
        while (!word.empty() && !std::isalnum(static_cast<unsigned char>(word.front()))) {
            word.remove_prefix(1);
        }
        while (!word.empty() && !std::isalnum(static_cast<unsigned char>(word.back()))) {
            word.remove_suffix(1);
        }
        if (word.empty()) continue;
        std::string tok(word);
        std::transform(tok.begin(), tok.end(), tok.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (settings.remove_stopwords && default_stopwords().count(tok) > 0) continue;
        if (settings.stem) tok = light_stem(std::move(tok));
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

namespace {

std::map<std::string, std::size_t> counts(const std::vector<std::string>& tokens) {
    std::map<std::string, std::size_t> c;
    for (const auto& t : tokens) c[t] += 1;
    return c;
}

} // namespace

RougeScore rouge1(std::string_view candidate, const std::vector<std::string>& references,
                  const RougeSettings& settings) {
    if (references.empty()) throw InputError("rouge1: at least one reference required");

    auto cand = counts(rouge_tokens(candidate, settings));
    RougeScore score;
    for (const auto& [t, c] : cand) score.cand_count += c;

    // Per-token clip against the maximum count over the references.
    std::map<std::string, std::size_t> ref_max;
    std::size_t ref_tokens_total = 0;
    for (const auto& ref : references) {
        auto rc = counts(rouge_tokens(ref, settings));
        for (const auto& [t, c] : rc) {
            ref_tokens_total += c;
            ref_max[t] = std::max(ref_max[t], c);
        }
    }
    score.ref_count = static_cast<double>(ref_tokens_total) / static_cast<double>(references.size());

    for (const auto& [t, c] : cand) {
        auto it = ref_max.find(t);
        if (it != ref_max.end()) score.match_count += std::min(c, it->second);
    }

    double match = static_cast<double>(score.match_count);
    score.recall = score.ref_count == 0.0 ? 0.0 : match / score.ref_count;
    score.precision = score.cand_count == 0 ? 0.0 : match / static_cast<double>(score.cand_count);
    score.f1 = (score.recall == 0.0 || score.precision == 0.0)
                   ? 0.0
                   : 2.0 * score.precision * score.recall / (score.precision + score.recall);
    return score;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

EvalReport evaluate_run(const std::filesystem::path& summary_dir,
                        const std::filesystem::path& reference_dir, std::uint64_t seed,
                        std::size_t resamples, const RougeSettings& settings) {
    std::error_code ec;
    if (!std::filesystem::is_directory(summary_dir, ec)) {
        throw InputError("summary directory not found: " + summary_dir.string());
    }
    if (!std::filesystem::is_directory(reference_dir, ec)) {
        throw InputError("reference directory not found: " + reference_dir.string());
    }

    // <reference_dir>/<cluster>.<assessor>.txt, gathered per cluster in
    // filename order.
    std::map<std::string, std::vector<std::filesystem::path>> refs;
    {
        std::vector<std::filesystem::path> paths;
        for (const auto& entry : std::filesystem::directory_iterator(reference_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                paths.push_back(entry.path());
            }
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& path : paths) {
            std::string base = path.stem().string();  // "<cluster>.<assessor>" minus ".txt"
            auto dot = base.find('.');
            if (dot == std::string::npos || dot == 0) continue;
            refs[base.substr(0, dot)].push_back(path);
        }
    }

    EvalReport report;
    report.seed = seed;
    report.resamples = resamples;

    std::vector<std::filesystem::path> summaries;
    for (const auto& entry : std::filesystem::directory_iterator(summary_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            summaries.push_back(entry.path());
        }
    }
    std::sort(summaries.begin(), summaries.end());
    if (summaries.empty()) throw InputError("no .txt summaries in " + summary_dir.string());

    std::vector<double> recalls;
    for (const auto& path : summaries) {
        std::string cluster = path.stem().string();
        auto it = refs.find(cluster);
        if (it == refs.end() || it->second.empty()) {
            report.missing.push_back(cluster);
            continue;
        }
        std::vector<std::string> ref_texts;
        ref_texts.reserve(it->second.size());
        for (const auto& ref_path : it->second) ref_texts.push_back(read_file(ref_path));
        RougeScore score = rouge1(read_file(path), ref_texts, settings);
        recalls.push_back(score.recall);
        report.per_cluster.emplace(std::move(cluster), score);
    }

    if (recalls.empty()) return report;

    double sum = 0.0;
    for (double r : recalls) sum += r;
    report.mean_recall = sum / static_cast<double>(recalls.size());

    // Nonparametric bootstrap over clusters. Indices come straight from the
    // engine (std::mt19937_64 output is pinned by the standard, the
    // distributions are not), so a fixed seed reproduces bit-identical
    // bounds everywhere.
    std::mt19937_64 engine(seed);
    const std::size_t n = recalls.size();
    std::vector<double> means;
    means.reserve(resamples);
    for (std::size_t b = 0; b < resamples; ++b) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            s += recalls[static_cast<std::size_t>(engine() % n)];
        }
        means.push_back(s / static_cast<double>(n));
    }
    std::sort(means.begin(), means.end());
    auto low_idx = static_cast<std::size_t>(std::floor(0.025 * static_cast<double>(resamples - 1)));
    auto high_idx = static_cast<std::size_t>(std::ceil(0.975 * static_cast<double>(resamples - 1)));
    report.ci_low = means[low_idx];
    report.ci_high = means[high_idx];
    return report;
}

} // namespace mlsum
