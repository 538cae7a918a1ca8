#ifndef MLSUM_SUMMARIZER_HPP
#define MLSUM_SUMMARIZER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mlsum/frames.hpp"
#include "mlsum/graph.hpp"
#include "mlsum/ranking.hpp"

namespace mlsum {

enum class SummaryMode {
    Multilayer,        // full frame/sentence/document model
    LexrankFrames,     // flat frame graph: no W factors, completeness teleport
    LexrankSentences,  // plain sentence graph, cosine edges, uniform teleport
};

struct SummaryConfig {
    int byte_budget = 665;
    SummaryMode mode = SummaryMode::Multilayer;
    SimCoefficients coefficients;
    RankConfig rank;
    double centroid_threshold = 0.0;
    NormalizationMode normalization = NormalizationMode::WholeMatrix;
    std::size_t dense_threshold = 2000;
    bool strict_stop = false;     // stop at the first overflowing sentence
    bool original_order = false;  // emit in (doc, sentence) order instead of rank order
};

struct SummarySentence {
    int doc_id = -1;
    int sentence_id = -1;
    std::string text;
    std::size_t byte_len = 0;
    double score = 0.0;
};

struct SummaryTrace {
    std::size_t document_count = 0;
    std::size_t sentence_count = 0;
    std::size_t frame_count = 0;
    std::size_t complete_frames = 0;
    std::size_t synthetic_frames = 0;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    std::vector<RankedSentence> ranking;  // full post-penalty order
    std::vector<std::string> notes;
};

struct Summary {
    std::vector<SummarySentence> selected;  // selection order (or document order on request)
    std::size_t total_bytes = 0;
    SummaryTrace trace;
};

/// Walk the ranked order taking every sentence that still fits the budget;
/// with strict_stop the walk ends at the first sentence that does not fit.
std::vector<RankedSentence> select_under_budget(const std::vector<RankedSentence>& final_order,
                                                const std::vector<std::size_t>& byte_len_by_sentence,
                                                int budget, bool strict_stop = false);

/// The full pipeline: synthetic-frame cover, graph assembly, power
/// iteration, score summation, diversity penalty, budget selection.
/// Deterministic for fixed inputs and config.
Summary summarize(const Corpus& corpus, const std::vector<Frame>& frames,
                  const SummaryConfig& cfg,
                  const VerbLexicon& lexicon = VerbLexicon::bundled());

/// Single-layer sentence LexRank baseline; frames are not consulted.
Summary baseline_lexrank(const Corpus& corpus, const SummaryConfig& cfg);

} // namespace mlsum

#endif
