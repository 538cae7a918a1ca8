#ifndef MLSUM_RANKING_HPP
#define MLSUM_RANKING_HPP

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "mlsum/graph.hpp"

namespace mlsum {

struct RankConfig {
    double damping = 0.85;       // alpha of the PageRank step
    double tolerance = 1e-8;     // L1 convergence threshold
    int max_iters = 200;
    double penalty_factor = 0.7; // omega of the diversity penalty
};

struct PowerIterationResult {
    Eigen::VectorXd pi;    // renormalized to sum exactly 1
    int iterations = 0;
    double residual = 0.0; // final L1 change
    bool converged = false;
};

/// pi <- alpha * H * pi + (1 - alpha) * v starting from pi = v, until the
/// L1 change drops below tolerance or max_iters is reached. Requires both
/// stochasticity certificates; non-convergence is flagged, not fatal.
PowerIterationResult power_iteration(const AffinityMatrix& H, const PreferenceVector& v,
                                     const RankConfig& cfg);

/// score(s) = sum of pi over the frames of s.
std::map<int, double> sentence_scores(const Eigen::VectorXd& pi, const std::vector<Frame>& frames);

/// Pairwise sentence cosine matrix over a fixed id set (symmetric, entries
/// in [0, 1]).
struct SentenceSimilarity {
    std::vector<int> ids;  // ascending sentence ids
    Eigen::MatrixXd sim;

    double between(int sentence_a, int sentence_b) const;
};

SentenceSimilarity sentence_similarity(const Corpus& corpus, const std::vector<int>& sentence_ids);

struct RankedSentence {
    int sentence_id = -1;
    double score = 0.0;  // score held at selection time
};

/// Greedy diversity penalty: pick the best remaining sentence, then charge
/// every remaining one omega * sim * selected-score. Ties break toward the
/// lower sentence id; negative scores are allowed and simply rank last.
std::vector<RankedSentence> diversity_rerank(const std::map<int, double>& scores,
                                             const SentenceSimilarity& sim, double omega);

/// RankConfig-driven bundle of the three steps above.
struct RankResult {
    Eigen::VectorXd pi;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    std::map<int, double> sentence_score;
    std::vector<RankedSentence> final_order;
};

RankResult rank_frames(const AffinityMatrix& H, const PreferenceVector& v,
                       const std::vector<Frame>& frames, const Corpus& corpus,
                       const RankConfig& cfg);

} // namespace mlsum

#endif
