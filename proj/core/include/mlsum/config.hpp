#ifndef MLSUM_CONFIG_HPP
#define MLSUM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "mlsum/summarizer.hpp"

namespace mlsum {

/// Every tunable in one place. Parsed from a flat `key = value` file;
/// command line flags override file entries; unknown keys are rejected.
struct Config {
    IngestSettings ingest;
    SummaryConfig summary;
    std::optional<std::filesystem::path> verbs_file;
    std::uint64_t seed = 2004;            // bootstrap only
    std::size_t bootstrap_resamples = 10000;
};

std::string_view mode_name(SummaryMode mode);
std::string_view normalization_name(NormalizationMode mode);

/// Apply one `key = value` pair. Throws ConfigError for unknown keys or
/// unparsable values.
void apply_config_entry(Config& config, const std::string& key, const std::string& value);

/// Flat config file: one `key = value` per line, '#' comments.
Config load_config_file(const std::filesystem::path& file, Config base = {});

/// Effective configuration, one key per line, parseable by
/// load_config_file and value-identical after the round trip.
std::string dump_config(const Config& config);

/// Range checks from the module contracts. Throws ConfigError naming the
/// offending key.
void validate(const Config& config);

} // namespace mlsum

#endif
