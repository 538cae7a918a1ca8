#include "mlsum/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "mlsum/errors.hpp"

namespace mlsum {

PowerIterationResult power_iteration(const AffinityMatrix& H, const PreferenceVector& v,
                                     const RankConfig& cfg) {
    if (!H.stochastic) throw Error("power_iteration: H lacks the column-stochastic certificate");
    if (!v.normalized) throw Error("power_iteration: v lacks the normalization certificate");
    if (H.size() != v.v.size()) throw Error("power_iteration: dimension mismatch");

    const double alpha = cfg.damping;
    PowerIterationResult result;
    Eigen::VectorXd pi = v.v;
    for (int k = 1; k <= cfg.max_iters; ++k) {
        Eigen::VectorXd next = alpha * H.apply(pi) + (1.0 - alpha) * v.v;
        result.residual = (next - pi).lpNorm<1>();
        pi = std::move(next);
        result.iterations = k;
        if (result.residual < cfg.tolerance) {
            result.converged = true;
            break;
        }
    }
    pi /= pi.sum();
    result.pi = std::move(pi);
    return result;
}

std::map<int, double> sentence_scores(const Eigen::VectorXd& pi,
                                      const std::vector<Frame>& frames) {
    std::map<int, double> scores;
    for (const auto& frame : frames) {
        scores[frame.sentence_id] += pi[frame.id];
    }
    return scores;
}

double SentenceSimilarity::between(int sentence_a, int sentence_b) const {
    auto ia = std::lower_bound(ids.begin(), ids.end(), sentence_a);
    auto ib = std::lower_bound(ids.begin(), ids.end(), sentence_b);
    if (ia == ids.end() || *ia != sentence_a || ib == ids.end() || *ib != sentence_b) {
        throw Error("sentence id not present in similarity matrix");
    }
    return sim(ia - ids.begin(), ib - ids.begin());
}

SentenceSimilarity sentence_similarity(const Corpus& corpus,
                                       const std::vector<int>& sentence_ids) {
    SentenceSimilarity out;
    out.ids = sentence_ids;
    std::sort(out.ids.begin(), out.ids.end());
    const Eigen::Index n = static_cast<Eigen::Index>(out.ids.size());
    std::vector<TermVector> vecs(out.ids.size());
    for (std::size_t i = 0; i < out.ids.size(); ++i) {
        vecs[i] = sentence_vector(corpus.sentence(out.ids[i]), corpus);
    }
    out.sim = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.sim(i, i) = cosine(vecs[i], vecs[i]);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double s = cosine(vecs[i], vecs[j]);
            out.sim(i, j) = s;
            out.sim(j, i) = s;
        }
    }
    return out;
}

std::vector<RankedSentence> diversity_rerank(const std::map<int, double>& scores,
                                             const SentenceSimilarity& sim, double omega) {
    std::vector<int> ids;
    std::vector<double> current;
    ids.reserve(scores.size());
    for (const auto& [sid, score] : scores) {  // ascending sentence id
        ids.push_back(sid);
        current.push_back(score);
    }

    std::vector<RankedSentence> order;
    std::vector<bool> taken(ids.size(), false);
    for (std::size_t round = 0; round < ids.size(); ++round) {
        std::size_t best = ids.size();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (taken[i]) continue;
            if (best == ids.size() || current[i] > current[best]) best = i;
        }
        taken[best] = true;
        double selected_score = current[best];
        order.push_back({ids[best], selected_score});
        if (omega == 0.0) continue;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (taken[i]) continue;
            current[i] -= omega * sim.between(ids[i], ids[best]) * selected_score;
        }
    }
    return order;
}

RankResult rank_frames(const AffinityMatrix& H, const PreferenceVector& v,
                       const std::vector<Frame>& frames, const Corpus& corpus,
                       const RankConfig& cfg) {
    RankResult result;
    auto power = power_iteration(H, v, cfg);
    result.pi = std::move(power.pi);
    result.iterations = power.iterations;
    result.residual = power.residual;
    result.converged = power.converged;
    result.sentence_score = sentence_scores(result.pi, frames);

    std::vector<int> ids;
    ids.reserve(result.sentence_score.size());
    for (const auto& [sid, score] : result.sentence_score) ids.push_back(sid);
    auto sim = sentence_similarity(corpus, ids);
    result.final_order = diversity_rerank(result.sentence_score, sim, cfg.penalty_factor);
    return result;
}

} // namespace mlsum
