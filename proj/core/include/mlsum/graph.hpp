#ifndef MLSUM_GRAPH_HPP
#define MLSUM_GRAPH_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mlsum/frames.hpp"
#include "mlsum/similarity.hpp"
#include "mlsum/text_model.hpp"

namespace mlsum {

/// Frame / sentence / document vertices with their alpha_v, beta_v, gamma_v
/// weights, the three directed edge maps (no self loops, nonzero entries
/// only) and the containment maps the cross weights traverse.
struct MultiLayerGraph {
    std::vector<Frame> frames;  // index == frame id

    std::vector<double> frame_weight;     // alpha_v by frame id
    std::vector<double> sentence_weight;  // beta_v by global sentence id
    std::vector<double> document_weight;  // gamma_v by document id

    std::map<std::pair<int, int>, double> frame_edges;     // alpha_e
    std::map<std::pair<int, int>, double> sentence_edges;  // beta_e
    std::map<std::pair<int, int>, double> document_edges;  // gamma_e

    std::vector<int> frame_sentence;    // frame id -> sentence id
    std::vector<int> sentence_document; // sentence id -> document id

    std::size_t frame_count() const { return frames.size(); }
    std::size_t sentence_count() const { return sentence_weight.size(); }
    std::size_t document_count() const { return document_weight.size(); }

    double frame_edge(int i, int j) const { return edge(frame_edges, i, j); }
    double sentence_edge_weight(int i, int j) const { return edge(sentence_edges, i, j); }
    double document_edge_weight(int i, int j) const { return edge(document_edges, i, j); }

    /// Unordered frame pairs with a nonzero weight in either direction.
    std::size_t frame_pair_count() const;

private:
    static double edge(const std::map<std::pair<int, int>, double>& edges, int i, int j) {
        auto it = edges.find({i, j});
        return it == edges.end() ? 0.0 : it->second;
    }
};

/// Assemble every layer from the similarity functions. Throws InputError
/// when frames is empty; frame ids must be dense and match their index.
MultiLayerGraph build_graph(const Corpus& corpus, const std::vector<Frame>& frames,
                            const SimCoefficients& coeffs, const CentroidTable& centroid);

/// W_d(i, j): 1 for frames whose sentences share a document, else
/// 1 + gamma_e between the two documents.
double cross_weight_wd(int frame_i, int frame_j, const MultiLayerGraph& graph);

/// W_s(i, j): 1 for frames in the same sentence, else 1 + beta_e between
/// the two sentences.
double cross_weight_ws(int frame_i, int frame_j, const MultiLayerGraph& graph);

enum class NormalizationMode {
    WholeMatrix,      // column-normalize the weighted matrix as a whole
    BlockByDocument,  // per-document column blocks, column-stochastic W_d
};

/// Column-stochastic affinity matrix over frames. Dense up to the assembly
/// threshold, compressed-column sparse above it.
struct AffinityMatrix {
    Eigen::MatrixXd dense;
    Eigen::SparseMatrix<double> sparse;
    bool is_sparse = false;
    bool stochastic = false;  // certificate: every column sums to 1 +- 1e-9

    Eigen::Index size() const { return is_sparse ? sparse.cols() : dense.cols(); }

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
        return is_sparse ? Eigen::VectorXd(sparse * x) : Eigen::VectorXd(dense * x);
    }

    double coeff(Eigen::Index i, Eigen::Index j) const {
        return is_sparse ? sparse.coeff(i, j) : dense(i, j);
    }

    /// Smallest and largest column sum (the Lemma 2 certificate data).
    std::pair<double, double> column_sum_extrema() const;
};

/// Biased teleportation vector over frames.
struct PreferenceVector {
    Eigen::VectorXd v;
    bool normalized = false;  // certificate: entries sum to 1 +- 1e-12
};

struct AssemblyOptions {
    NormalizationMode normalization = NormalizationMode::WholeMatrix;
    std::size_t dense_threshold = 2000;  // frames beyond this go sparse
    // Switching both layers off leaves the flat frame graph the
    // lexrank-frames mode ranks on.
    bool document_layer = true;
    bool sentence_layer = true;
};

/// v(i) = alpha_v(f_i) * (1 + gamma_v(d(s_i))) * (1 + beta_v(s(f_i))),
/// normalized to a strictly positive probability vector. Disabled layers
/// drop their factor.
PreferenceVector assemble_v(const MultiLayerGraph& graph, const AssemblyOptions& opts = {});

/// H(i, j) = alpha_e(f_i, f_j) * W_d(i, j) * W_s(i, j), made column
/// stochastic; all-zero (dangling) columns are replaced by the preference
/// vector. Disabled layers pin their W factor at 1.
AffinityMatrix assemble_H(const MultiLayerGraph& graph, const AssemblyOptions& opts = {});

/// Column-normalize a raw nonnegative matrix, replacing all-zero columns by
/// `dangling`; used by both the frame pipeline and the sentence baseline.
AffinityMatrix make_column_stochastic(const Eigen::MatrixXd& raw, const Eigen::VectorXd& dangling,
                                      std::size_t dense_threshold);

} // namespace mlsum

#endif
