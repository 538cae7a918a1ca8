// Command line front end: summarize, evaluate, inspect-graph and
// extract-frames subcommands over the mlsum core library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mlsum/config.hpp"
#include "mlsum/errors.hpp"
#include "mlsum/frames.hpp"
#include "mlsum/graph.hpp"
#include "mlsum/ranking.hpp"
#include "mlsum/rouge.hpp"
#include "mlsum/summarizer.hpp"
#include "mlsum/text_model.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInput = 2;

struct CommonArgs {
    std::string input_dir;
    std::vector<std::string> input_files;
    std::string frames_file;
    bool heuristic_frames = false;
    std::string config_file;
    std::vector<std::string> overrides;  // raw "key=value" pairs
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    auto* dir = cmd->add_option("--input", args.input_dir, "Directory with one document per file");
    auto* files = cmd->add_option("--file", args.input_files, "Individual document file (repeatable)");
    dir->excludes(files);
    auto* frames =
        cmd->add_option("--frames", args.frames_file, "Tab-separated frame annotation file");
    auto* heur = cmd->add_flag("--heuristic-frames", args.heuristic_frames,
                               "Extract frames with the built-in rule-based extractor");
    frames->excludes(heur);
    cmd->add_option("--config", args.config_file, "Flat key = value config file");
    cmd->add_option("--set", args.overrides, "Override one config key, e.g. --set damping=0.9");
}

// Tunables surfaced as dedicated flags; each one maps onto a config key so
// file entries and flags share the parser and the validation.
void add_tunable_flags(CLI::App* cmd, std::vector<std::pair<std::string, std::string>>& pending) {
    static const std::vector<std::pair<std::string, std::string>> flags = {
        {"--byte-budget", "byte_budget"},
        {"--mode", "mode"},
        {"--damping", "damping"},
        {"--tolerance", "tolerance"},
        {"--max-iters", "max_iters"},
        {"--penalty-factor", "penalty_factor"},
        {"--centroid-threshold", "centroid_threshold"},
        {"--normalization", "normalization"},
        {"--seed", "seed"},
    };
    for (const auto& [flag, key] : flags) {
        const std::string key_copy = key;
        cmd->add_option_function<std::string>(
            flag,
            [&pending, key_copy](const std::string& value) {
                pending.emplace_back(key_copy, value);
            },
            "Sets config key " + key);
    }
    cmd->add_flag_callback(
        "--strict-stop", [&pending] { pending.emplace_back("strict_stop", "true"); },
        "Stop filling at the first sentence that exceeds the remaining budget");
    cmd->add_flag_callback(
        "--original-order", [&pending] { pending.emplace_back("original_order", "true"); },
        "Write selected sentences in document order instead of rank order");
}

mlsum::Config resolve_config(const CommonArgs& args,
                             const std::vector<std::pair<std::string, std::string>>& flag_values) {
    mlsum::Config config;
    if (!args.config_file.empty()) {
        config = mlsum::load_config_file(args.config_file, std::move(config));
    }
    for (const auto& entry : args.overrides) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw mlsum::ConfigError("--set expects key=value, got '" + entry + "'");
        }
        mlsum::apply_config_entry(config, entry.substr(0, eq), entry.substr(eq + 1));
    }
    for (const auto& [key, value] : flag_values) {
        mlsum::apply_config_entry(config, key, value);
    }
    mlsum::validate(config);
    return config;
}

mlsum::Corpus load_corpus(const CommonArgs& args, const mlsum::Config& config) {
    if (!args.input_dir.empty()) {
        return mlsum::ingest_directory(args.input_dir, config.ingest);
    }
    if (!args.input_files.empty()) {
        std::vector<std::filesystem::path> paths(args.input_files.begin(),
                                                 args.input_files.end());
        return mlsum::ingest(paths, config.ingest);
    }
    throw mlsum::InputError("no input given; use --input DIR or --file FILE");
}

const mlsum::VerbLexicon& resolve_lexicon(const mlsum::Config& config,
                                          std::optional<mlsum::VerbLexicon>& storage) {
    if (config.verbs_file) {
        storage = mlsum::VerbLexicon::from_file(*config.verbs_file);
        return *storage;
    }
    return mlsum::VerbLexicon::bundled();
}

std::vector<mlsum::Frame> load_frame_source(const CommonArgs& args, const mlsum::Config& config,
                                            const mlsum::Corpus& corpus,
                                            const mlsum::VerbLexicon& lexicon) {
    if (!args.frames_file.empty()) {
        auto result = mlsum::load_frames(args.frames_file, corpus);
        for (const auto& warning : result.warnings) {
            std::cerr << "warning: " << warning << '\n';
        }
        return std::move(result.frames);
    }
    if (args.heuristic_frames) {
        return mlsum::extract_frames(corpus, lexicon);
    }
    if (config.summary.mode != mlsum::SummaryMode::LexrankSentences) {
        throw mlsum::InputError(
            "no frame source: pass --frames FILE, or --heuristic-frames to use the built-in "
            "extractor");
    }
    return {};
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mlsum::InputError("cannot write file: " + path.string());
    out << content;
}

json trace_json(const mlsum::Summary& summary, const mlsum::Config& config) {
    json j;
    j["mode"] = std::string(mlsum::mode_name(config.summary.mode));
    j["documents"] = summary.trace.document_count;
    j["sentences"] = summary.trace.sentence_count;
    j["frames"] = summary.trace.frame_count;
    j["complete_frames"] = summary.trace.complete_frames;
    j["synthetic_frames"] = summary.trace.synthetic_frames;
    j["iterations"] = summary.trace.iterations;
    j["residual"] = summary.trace.residual;
    j["converged"] = summary.trace.converged;
    j["byte_budget"] = config.summary.byte_budget;
    j["total_bytes"] = summary.total_bytes;
    j["notes"] = summary.trace.notes;
    j["ranking"] = json::array();
    for (const auto& r : summary.trace.ranking) {
        j["ranking"].push_back({{"sentence", r.sentence_id}, {"score", r.score}});
    }
    j["selected"] = json::array();
    for (const auto& s : summary.selected) {
        j["selected"].push_back({{"doc", s.doc_id},
                                 {"sentence", s.sentence_id},
                                 {"bytes", s.byte_len},
                                 {"score", s.score}});
    }
    return j;
}

int cmd_summarize(const CommonArgs& args,
                  const std::vector<std::pair<std::string, std::string>>& flags,
                  const std::string& out_file, const std::string& trace_file,
                  const std::string& dump_config_file) {
    auto config = resolve_config(args, flags);
    auto corpus = load_corpus(args, config);
    for (const auto& warning : corpus.warnings) std::cerr << "warning: " << warning << '\n';

    std::optional<mlsum::VerbLexicon> lexicon_storage;
    const auto& lexicon = resolve_lexicon(config, lexicon_storage);
    auto frames = load_frame_source(args, config, corpus, lexicon);

    auto summary = mlsum::summarize(corpus, frames, config.summary, lexicon);
    for (const auto& note : summary.trace.notes) std::cerr << "note: " << note << '\n';

    std::string text;
    for (const auto& s : summary.selected) {
        text += s.text;
        text += '\n';
    }
    if (out_file.empty() || out_file == "-") {
        std::cout << text;
    } else {
        write_text_file(out_file, text);
    }
    if (!trace_file.empty()) {
        write_text_file(trace_file, trace_json(summary, config).dump(2) + "\n");
    }
    if (!dump_config_file.empty()) {
        write_text_file(dump_config_file, mlsum::dump_config(config));
    }
    std::cerr << "selected " << summary.selected.size() << " sentences, " << summary.total_bytes
              << " of " << config.summary.byte_budget << " bytes\n";
    return kExitOk;
}

int cmd_extract_frames(const CommonArgs& args,
                       const std::vector<std::pair<std::string, std::string>>& flags,
                       const std::string& out_file) {
    auto config = resolve_config(args, flags);
    auto corpus = load_corpus(args, config);
    std::optional<mlsum::VerbLexicon> lexicon_storage;
    const auto& lexicon = resolve_lexicon(config, lexicon_storage);
    auto frames = mlsum::extract_frames(corpus, lexicon);

    // Emit the annotation format (doc and in-document sentence indices).
    std::vector<int> doc_first_sentence(corpus.documents.size(), 0);
    for (const auto& doc : corpus.documents) {
        doc_first_sentence[static_cast<std::size_t>(doc.id)] =
            doc.sentences.empty() ? 0 : doc.sentences.front().id;
    }
    std::string out;
    for (const auto& frame : frames) {
        const auto& sent = corpus.sentence(frame.sentence_id);
        out += std::to_string(sent.doc_id);
        out += '\t';
        out += std::to_string(sent.id - doc_first_sentence[static_cast<std::size_t>(sent.doc_id)]);
        out += '\t';
        out += frame.predicate;
        for (const auto& [role, span] : frame.args) {
            out += '\t';
            out += std::string(mlsum::role_label(role));
            out += '=';
            out += span;
        }
        out += '\n';
    }
    if (out_file.empty() || out_file == "-") {
        std::cout << out;
    } else {
        write_text_file(out_file, out);
    }
    std::cerr << "extracted " << frames.size() << " frames\n";
    return kExitOk;
}

int cmd_inspect_graph(const CommonArgs& args,
                      const std::vector<std::pair<std::string, std::string>>& flags,
                      const std::string& dump_file, std::size_t top_k) {
    auto config = resolve_config(args, flags);
    auto corpus = load_corpus(args, config);
    std::optional<mlsum::VerbLexicon> lexicon_storage;
    const auto& lexicon = resolve_lexicon(config, lexicon_storage);
    auto frames = load_frame_source(args, config, corpus, lexicon);
    frames = mlsum::cover_sentences(corpus, std::move(frames), lexicon);

    auto centroid = mlsum::centroid_table(corpus, config.summary.centroid_threshold);
    auto graph = mlsum::build_graph(corpus, frames, config.summary.coefficients, centroid);

    mlsum::AssemblyOptions opts;
    opts.normalization = config.summary.normalization;
    opts.dense_threshold = config.summary.dense_threshold;
    opts.document_layer = config.summary.mode != mlsum::SummaryMode::LexrankFrames;
    opts.sentence_layer = config.summary.mode != mlsum::SummaryMode::LexrankFrames;
    auto H = mlsum::assemble_H(graph, opts);
    auto v = mlsum::assemble_v(graph, opts);
    auto [col_min, col_max] = H.column_sum_extrema();

    auto top_edges = [top_k](const std::map<std::pair<int, int>, double>& edges) {
        std::vector<std::pair<std::pair<int, int>, double>> sorted(edges.begin(), edges.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        if (sorted.size() > top_k) sorted.resize(top_k);
        json arr = json::array();
        for (const auto& [key, w] : sorted) {
            arr.push_back({{"from", key.first}, {"to", key.second}, {"weight", w}});
        }
        return arr;
    };

    json j;
    j["layers"] = {{"documents", graph.document_count()},
                   {"sentences", graph.sentence_count()},
                   {"frames", graph.frame_count()}};
    j["column_sums"] = {{"min", col_min}, {"max", col_max}};
    j["stochastic"] = H.stochastic;
    j["preference_sum"] = v.v.sum();
    j["preference_normalized"] = v.normalized;
    j["storage"] = H.is_sparse ? "sparse" : "dense";
    j["top_edges"] = {{"frame", top_edges(graph.frame_edges)},
                      {"sentence", top_edges(graph.sentence_edges)},
                      {"document", top_edges(graph.document_edges)}};

    std::string out = j.dump(2) + "\n";
    if (dump_file.empty() || dump_file == "-") {
        std::cout << out;
    } else {
        write_text_file(dump_file, out);
    }
    return kExitOk;
}

int cmd_evaluate(const std::string& summaries_dir, const std::string& references_dir,
                 const CommonArgs& args,
                 const std::vector<std::pair<std::string, std::string>>& flags,
                 const std::string& json_file, bool stem, bool remove_stopwords) {
    auto config = resolve_config(args, flags);
    mlsum::RougeSettings settings;
    settings.stem = stem;
    settings.remove_stopwords = remove_stopwords;
    auto report = mlsum::evaluate_run(summaries_dir, references_dir, config.seed,
                                      config.bootstrap_resamples, settings);

    char line[160];
    std::printf("%-28s %s\n", "Systems", "ROUGE-1 (95% Confidence interval)");
    std::printf("------------------------------------------------------------\n");
    std::snprintf(line, sizeof(line), "%.3f [%.3f,%.3f]", report.mean_recall, report.ci_low,
                  report.ci_high);
    std::printf("%-28s %s\n", std::filesystem::path(summaries_dir).filename().string().c_str(),
                line);
    std::printf("\nPer cluster:\n");
    for (const auto& [cluster, score] : report.per_cluster) {
        std::printf("  %-12s R=%.4f P=%.4f F1=%.4f (match=%zu ref=%.1f cand=%zu)\n",
                    cluster.c_str(), score.recall, score.precision, score.f1, score.match_count,
                    score.ref_count, score.cand_count);
    }
    for (const auto& cluster : report.missing) {
        std::printf("  %-12s missing references, excluded\n", cluster.c_str());
    }

    if (!json_file.empty()) {
        json j;
        j["mean_recall"] = report.mean_recall;
        j["ci_low"] = report.ci_low;
        j["ci_high"] = report.ci_high;
        j["seed"] = report.seed;
        j["resamples"] = report.resamples;
        j["missing"] = report.missing;
        j["clusters"] = json::object();
        for (const auto& [cluster, score] : report.per_cluster) {
            j["clusters"][cluster] = {{"recall", score.recall},
                                      {"precision", score.precision},
                                      {"f1", score.f1},
                                      {"match", score.match_count},
                                      {"ref_tokens", score.ref_count},
                                      {"cand_tokens", score.cand_count}};
        }
        write_text_file(json_file, j.dump(2) + "\n");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilayer graph summarizer and ROUGE-1 evaluation harness"};
    app.require_subcommand(1);

    CommonArgs sum_args, ext_args, insp_args, eval_args;
    std::vector<std::pair<std::string, std::string>> sum_flags, ext_flags, insp_flags, eval_flags;

    auto* sum = app.add_subcommand("summarize", "Rank sentences and fill the byte budget");
    add_common_options(sum, sum_args);
    add_tunable_flags(sum, sum_flags);
    std::string out_file, trace_file, dump_config_file;
    sum->add_option("--out", out_file, "Summary output file ('-' for stdout)");
    sum->add_option("--trace", trace_file, "JSON trace sidecar");
    sum->add_option("--dump-config", dump_config_file, "Write the effective config");

    auto* ext = app.add_subcommand("extract-frames",
                                   "Run the heuristic extractor and print annotation records");
    add_common_options(ext, ext_args);
    add_tunable_flags(ext, ext_flags);
    std::string ext_out;
    ext->add_option("--out", ext_out, "Annotation output file ('-' for stdout)");

    auto* insp = app.add_subcommand("inspect-graph", "Dump layer sizes and matrix certificates");
    add_common_options(insp, insp_args);
    add_tunable_flags(insp, insp_flags);
    std::string dump_file;
    std::size_t top_k = 10;
    insp->add_option("--dump", dump_file, "JSON dump file ('-' for stdout)");
    insp->add_option("--top-k", top_k, "Edges to keep per layer")->capture_default_str();

    auto* eval = app.add_subcommand("evaluate", "ROUGE-1 with a bootstrap confidence interval");
    std::string summaries_dir, references_dir, eval_json;
    bool eval_stem = false, eval_remove_stop = false;
    eval->add_option("--summaries", summaries_dir, "Directory of <cluster>.txt summaries")
        ->required();
    eval->add_option("--references", references_dir,
                     "Directory of <cluster>.<assessor>.txt references")
        ->required();
    eval->add_option("--json", eval_json, "Write the report as JSON too");
    eval->add_flag("--stem", eval_stem, "Stem tokens before matching");
    eval->add_flag("--remove-stopwords", eval_remove_stop, "Drop stopwords before matching");
    eval->add_option("--config", eval_args.config_file, "Flat key = value config file");
    eval->add_option("--set", eval_args.overrides, "Override one config key");
    add_tunable_flags(eval, eval_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (sum->parsed()) {
            return cmd_summarize(sum_args, sum_flags, out_file, trace_file, dump_config_file);
        }
        if (ext->parsed()) {
            return cmd_extract_frames(ext_args, ext_flags, ext_out);
        }
        if (insp->parsed()) {
            return cmd_inspect_graph(insp_args, insp_flags, dump_file, top_k);
        }
        if (eval->parsed()) {
            return cmd_evaluate(summaries_dir, references_dir, eval_args, eval_flags, eval_json,
                                eval_stem, eval_remove_stop);
        }
    } catch (const mlsum::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const mlsum::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
