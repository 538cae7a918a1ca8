#include "mlsum/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mlsum/errors.hpp"

namespace mlsum {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ConfigError(key + ": expected a boolean, got '" + value + "'");
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double d = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        long long i = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return i;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        std::uint64_t i = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return i;
    } catch (const std::exception&) {
        throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
    }
}

std::string format_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

} // namespace

std::string_view mode_name(SummaryMode mode) {
    switch (mode) {
        case SummaryMode::Multilayer: return "multilayer";
        case SummaryMode::LexrankFrames: return "lexrank-frames";
        case SummaryMode::LexrankSentences: return "lexrank-sentences";
    }
    return "?";
}

std::string_view normalization_name(NormalizationMode mode) {
    switch (mode) {
        case NormalizationMode::WholeMatrix: return "whole-matrix";
        case NormalizationMode::BlockByDocument: return "block-normalize";
    }
    return "?";
}

void apply_config_entry(Config& config, const std::string& key, const std::string& value) {
    auto& summary = config.summary;
    auto& coeffs = summary.coefficients;
    auto& rank = summary.rank;

    if (key == "lowercase") {
        config.ingest.lowercase = parse_bool(key, value);
    } else if (key == "stem") {
        config.ingest.stem = parse_bool(key, value);
    } else if (key == "stopwords_file") {
        config.ingest.stopwords_file = std::filesystem::path(value);
    } else if (key == "verbs_file") {
        config.verbs_file = std::filesystem::path(value);
    } else if (key == "byte_budget") {
        summary.byte_budget = static_cast<int>(parse_int(key, value));
    } else if (key == "mode") {
        if (value == "multilayer") {
            summary.mode = SummaryMode::Multilayer;
        } else if (value == "lexrank-frames") {
            summary.mode = SummaryMode::LexrankFrames;
        } else if (value == "lexrank-sentences") {
            summary.mode = SummaryMode::LexrankSentences;
        } else {
            throw ConfigError("mode: expected multilayer, lexrank-frames or lexrank-sentences");
        }
    } else if (key == "normalization") {
        if (value == "whole-matrix") {
            summary.normalization = NormalizationMode::WholeMatrix;
        } else if (value == "block-normalize") {
            summary.normalization = NormalizationMode::BlockByDocument;
        } else {
            throw ConfigError("normalization: expected whole-matrix or block-normalize");
        }
    } else if (key == "centroid_threshold") {
        summary.centroid_threshold = parse_double(key, value);
    } else if (key == "dense_threshold") {
        summary.dense_threshold = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key == "strict_stop") {
        summary.strict_stop = parse_bool(key, value);
    } else if (key == "original_order") {
        summary.original_order = parse_bool(key, value);
    } else if (key == "damping") {
        rank.damping = parse_double(key, value);
    } else if (key == "tolerance") {
        rank.tolerance = parse_double(key, value);
    } else if (key == "max_iters") {
        rank.max_iters = static_cast<int>(parse_int(key, value));
    } else if (key == "penalty_factor") {
        rank.penalty_factor = parse_double(key, value);
    } else if (key == "seed") {
        config.seed = parse_uint(key, value);
    } else if (key == "bootstrap_resamples") {
        config.bootstrap_resamples = static_cast<std::size_t>(parse_uint(key, value));
    } else if (key.size() == 6 && key.compare(0, 5, "alpha") == 0 && key[5] >= '1' &&
               key[5] <= '6') {
        coeffs.alpha[static_cast<std::size_t>(key[5] - '1')] = parse_double(key, value);
    } else if (key.size() == 5 && key.compare(0, 4, "beta") == 0 && key[4] >= '1' &&
               key[4] <= '4') {
        coeffs.beta[static_cast<std::size_t>(key[4] - '1')] = parse_double(key, value);
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

Config load_config_file(const std::filesystem::path& file, Config base) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot read config file: " + file.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string entry = trim(line);
        if (entry.empty()) continue;
        auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        apply_config_entry(base, trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
    }
    return base;
}

std::string dump_config(const Config& config) {
    const auto& summary = config.summary;
    const auto& coeffs = summary.coefficients;
    const auto& rank = summary.rank;
    std::ostringstream out;
    out << "lowercase = " << (config.ingest.lowercase ? "true" : "false") << '\n';
    out << "stem = " << (config.ingest.stem ? "true" : "false") << '\n';
    if (config.ingest.stopwords_file) {
        out << "stopwords_file = " << config.ingest.stopwords_file->string() << '\n';
    }
    if (config.verbs_file) out << "verbs_file = " << config.verbs_file->string() << '\n';
    for (std::size_t i = 0; i < coeffs.alpha.size(); ++i) {
        out << "alpha" << i + 1 << " = " << format_double(coeffs.alpha[i]) << '\n';
    }
    for (std::size_t i = 0; i < coeffs.beta.size(); ++i) {
        out << "beta" << i + 1 << " = " << format_double(coeffs.beta[i]) << '\n';
    }
    out << "centroid_threshold = " << format_double(summary.centroid_threshold) << '\n';
    out << "damping = " << format_double(rank.damping) << '\n';
    out << "tolerance = " << format_double(rank.tolerance) << '\n';
    out << "max_iters = " << rank.max_iters << '\n';
    out << "penalty_factor = " << format_double(rank.penalty_factor) << '\n';
    out << "byte_budget = " << summary.byte_budget << '\n';
    out << "mode = " << mode_name(summary.mode) << '\n';
    out << "normalization = " << normalization_name(summary.normalization) << '\n';
    out << "dense_threshold = " << summary.dense_threshold << '\n';
    out << "strict_stop = " << (summary.strict_stop ? "true" : "false") << '\n';
    out << "original_order = " << (summary.original_order ? "true" : "false") << '\n';
    out << "seed = " << config.seed << '\n';
    out << "bootstrap_resamples = " << config.bootstrap_resamples << '\n';
    return out.str();
}

void validate(const Config& config) {
    const auto& summary = config.summary;
    const auto& rank = summary.rank;
    if (summary.byte_budget < 1) {
        throw ConfigError("byte_budget: must be at least 1");
    }
    if (!(rank.damping > 0.0 && rank.damping < 1.0)) {
        throw ConfigError("damping: must lie strictly between 0 and 1");
    }
    if (!(rank.tolerance > 0.0)) {
        throw ConfigError("tolerance: must be positive");
    }
    if (rank.max_iters < 1) {
        throw ConfigError("max_iters: must be at least 1");
    }
    if (!(rank.penalty_factor >= 0.0 && rank.penalty_factor <= 1.0)) {
        throw ConfigError("penalty_factor: must lie in [0, 1]");
    }
    if (!(summary.centroid_threshold >= 0.0)) {
        throw ConfigError("centroid_threshold: must be non-negative");
    }
    if (summary.dense_threshold < 1) {
        throw ConfigError("dense_threshold: must be at least 1");
    }
    for (double a : summary.coefficients.alpha) {
        if (!(a >= 0.0)) throw ConfigError("alpha coefficients must be non-negative");
    }
    for (double b : summary.coefficients.beta) {
        if (!(b >= 0.0)) throw ConfigError("beta coefficients must be non-negative");
    }
    if (config.bootstrap_resamples < 1) {
        throw ConfigError("bootstrap_resamples: must be at least 1");
    }
}

} // namespace mlsum
