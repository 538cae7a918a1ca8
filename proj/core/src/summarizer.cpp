#include "mlsum/summarizer.hpp"

#include <algorithm>
#include <tuple>

#include "mlsum/errors.hpp"

namespace mlsum {

std::vector<RankedSentence> select_under_budget(const std::vector<RankedSentence>& final_order,
                                                const std::vector<std::size_t>& byte_len_by_sentence,
                                                int budget, bool strict_stop) {
    std::vector<RankedSentence> selected;
    if (budget <= 0) return selected;
    std::size_t remaining = static_cast<std::size_t>(budget);
    for (const auto& ranked : final_order) {
        std::size_t len = byte_len_by_sentence.at(static_cast<std::size_t>(ranked.sentence_id));
        if (len <= remaining) {
            selected.push_back(ranked);
            remaining -= len;
        } else if (strict_stop) {
            break;
        }
    }
    return selected;
}

namespace {

Summary finalize_summary(const Corpus& corpus, const SummaryConfig& cfg,
                         const RankResult& rank, SummaryTrace trace) {
    trace.iterations = rank.iterations;
    trace.residual = rank.residual;
    trace.converged = rank.converged;
    trace.ranking = rank.final_order;
    if (!rank.converged) {
        trace.notes.push_back("power iteration hit max_iters before tolerance");
    }

    std::vector<std::size_t> byte_lens(corpus.sentence_count(), 0);
    for (std::size_t s = 0; s < corpus.sentence_count(); ++s) {
        byte_lens[s] = corpus.sentence(static_cast<int>(s)).byte_len;
    }
    auto picked = select_under_budget(rank.final_order, byte_lens, cfg.byte_budget,
                                      cfg.strict_stop);
    if (picked.empty()) {
        trace.notes.push_back("no sentence fits the byte budget of " +
                              std::to_string(cfg.byte_budget));
    }

    Summary summary;
    summary.trace = std::move(trace);
    for (const auto& ranked : picked) {
        const Sentence& sent = corpus.sentence(ranked.sentence_id);
        summary.selected.push_back(
            {sent.doc_id, sent.id, sent.raw_text, sent.byte_len, ranked.score});
        summary.total_bytes += sent.byte_len;
    }
    if (cfg.original_order) {
        std::stable_sort(summary.selected.begin(), summary.selected.end(),
                         [](const SummarySentence& a, const SummarySentence& b) {
                             return std::tie(a.doc_id, a.sentence_id) <
                                    std::tie(b.doc_id, b.sentence_id);
                         });
    }
    return summary;
}

} // namespace

Summary summarize(const Corpus& corpus, const std::vector<Frame>& frames,
                  const SummaryConfig& cfg, const VerbLexicon& lexicon) {
    if (corpus.documents.empty()) throw InputError("summarize: empty corpus");
    if (cfg.mode == SummaryMode::LexrankSentences) return baseline_lexrank(corpus, cfg);

    auto covered = cover_sentences(corpus, frames, lexicon);

    SummaryTrace trace;
    trace.document_count = corpus.document_count();
    trace.sentence_count = corpus.sentence_count();
    trace.frame_count = covered.size();
    for (const auto& frame : covered) {
        if (frame.complete) ++trace.complete_frames;
        if (frame.synthetic) ++trace.synthetic_frames;
    }

    auto centroid = centroid_table(corpus, cfg.centroid_threshold);
    auto graph = build_graph(corpus, covered, cfg.coefficients, centroid);

    AssemblyOptions opts;
    opts.normalization = cfg.normalization;
    opts.dense_threshold = cfg.dense_threshold;
    opts.document_layer = cfg.mode == SummaryMode::Multilayer;
    opts.sentence_layer = cfg.mode == SummaryMode::Multilayer;

    auto H = assemble_H(graph, opts);
    auto v = assemble_v(graph, opts);
    auto rank = rank_frames(H, v, covered, corpus, cfg.rank);
    return finalize_summary(corpus, cfg, rank, std::move(trace));
}

Summary baseline_lexrank(const Corpus& corpus, const SummaryConfig& cfg) {
    if (corpus.documents.empty()) throw InputError("baseline_lexrank: empty corpus");
    const std::size_t n = corpus.sentence_count();
    const Eigen::Index ni = static_cast<Eigen::Index>(n);

    SummaryTrace trace;
    trace.document_count = corpus.document_count();
    trace.sentence_count = n;

    std::vector<TermVector> vecs(n);
    for (std::size_t s = 0; s < n; ++s) {
        vecs[s] = sentence_vector(corpus.sentence(static_cast<int>(s)), corpus);
    }
    Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(ni, ni);
    for (Eigen::Index i = 0; i < ni; ++i) {
        for (Eigen::Index j = i + 1; j < ni; ++j) {
            double s = cosine(vecs[static_cast<std::size_t>(i)], vecs[static_cast<std::size_t>(j)]);
            raw(i, j) = s;
            raw(j, i) = s;
        }
    }

    PreferenceVector uniform;
    uniform.v = Eigen::VectorXd::Constant(ni, 1.0 / static_cast<double>(n));
    uniform.normalized = true;
    auto H = make_column_stochastic(raw, uniform.v, cfg.dense_threshold);

    auto power = power_iteration(H, uniform, cfg.rank);
    RankResult rank;
    rank.pi = std::move(power.pi);
    rank.iterations = power.iterations;
    rank.residual = power.residual;
    rank.converged = power.converged;
    std::vector<int> ids(n);
    for (std::size_t s = 0; s < n; ++s) {
        ids[s] = static_cast<int>(s);
        rank.sentence_score[static_cast<int>(s)] = rank.pi[static_cast<Eigen::Index>(s)];
    }
    auto sim = sentence_similarity(corpus, ids);
    rank.final_order = diversity_rerank(rank.sentence_score, sim, cfg.rank.penalty_factor);
    return finalize_summary(corpus, cfg, rank, std::move(trace));
}

} // namespace mlsum
