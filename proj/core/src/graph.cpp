#include "mlsum/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mlsum/errors.hpp"

namespace mlsum {

namespace {

constexpr double kColumnSumTolerance = 1e-9;
constexpr double kPreferenceSumTolerance = 1e-12;

} // namespace

std::size_t MultiLayerGraph::frame_pair_count() const {
    std::set<std::pair<int, int>> pairs;
    for (const auto& [key, w] : frame_edges) {
        if (w <= 0.0) continue;
        pairs.insert({std::min(key.first, key.second), std::max(key.first, key.second)});
    }
    return pairs.size();
}

MultiLayerGraph build_graph(const Corpus& corpus, const std::vector<Frame>& frames,
                            const SimCoefficients& coeffs, const CentroidTable& centroid) {
    if (frames.empty()) throw InputError("build_graph: no frames");
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (frames[i].id != static_cast<int>(i)) {
            throw InputError("build_graph: frame ids must be dense and match their index");
        }
        if (frames[i].sentence_id < 0 ||
            frames[i].sentence_id >= static_cast<int>(corpus.sentence_count())) {
            throw InputError("build_graph: frame references unknown sentence");
        }
    }

    MultiLayerGraph graph;
    graph.frames = frames;

    const std::size_t n_sents = corpus.sentence_count();
    const std::size_t n_docs = corpus.documents.size();
    const std::size_t n_frames = frames.size();

    graph.sentence_document.resize(n_sents);
    for (std::size_t s = 0; s < n_sents; ++s) {
        graph.sentence_document[s] = corpus.sentence(static_cast<int>(s)).doc_id;
    }
    graph.frame_sentence.resize(n_frames);
    for (std::size_t f = 0; f < n_frames; ++f) graph.frame_sentence[f] = frames[f].sentence_id;

    // Sentence layer: cosine matrix once, then row-normalized edges.
    std::vector<TermVector> sent_vecs(n_sents);
    for (std::size_t s = 0; s < n_sents; ++s) {
        sent_vecs[s] = sentence_vector(corpus.sentence(static_cast<int>(s)), corpus);
    }
    std::vector<std::vector<double>> sent_cos(n_sents, std::vector<double>(n_sents, 0.0));
    for (std::size_t i = 0; i < n_sents; ++i) {
        for (std::size_t j = i + 1; j < n_sents; ++j) {
            double s = cosine(sent_vecs[i], sent_vecs[j]);
            sent_cos[i][j] = s;
            sent_cos[j][i] = s;
        }
    }
    for (std::size_t i = 0; i < n_sents; ++i) {
        double denom = 0.0;
        for (std::size_t k = 0; k < n_sents; ++k) {
            if (k != i) denom += sent_cos[i][k];
        }
        if (denom == 0.0) continue;
        for (std::size_t j = 0; j < n_sents; ++j) {
            if (j == i || sent_cos[i][j] == 0.0) continue;
            graph.sentence_edges[{static_cast<int>(i), static_cast<int>(j)}] =
                sent_cos[i][j] / denom;
        }
    }

    // Document layer.
    std::vector<TermVector> doc_vecs(n_docs);
    for (std::size_t d = 0; d < n_docs; ++d) {
        doc_vecs[d] = document_vector(corpus.documents[d], corpus);
    }
    std::vector<std::vector<double>> doc_cos(n_docs, std::vector<double>(n_docs, 0.0));
    for (std::size_t i = 0; i < n_docs; ++i) {
        for (std::size_t j = i + 1; j < n_docs; ++j) {
            double s = cosine(doc_vecs[i], doc_vecs[j]);
            doc_cos[i][j] = s;
            doc_cos[j][i] = s;
        }
    }
    for (std::size_t i = 0; i < n_docs; ++i) {
        double denom = 0.0;
        for (std::size_t k = 0; k < n_docs; ++k) {
            if (k != i) denom += doc_cos[i][k];
        }
        if (denom == 0.0) continue;
        for (std::size_t j = 0; j < n_docs; ++j) {
            if (j == i || doc_cos[i][j] == 0.0) continue;
            graph.document_edges[{static_cast<int>(i), static_cast<int>(j)}] =
                doc_cos[i][j] / denom;
        }
    }

    // Vertex weights. The per-sentence and per-document shares are computed
    // against one total so that single-element corpora come out exactly 1.
    std::vector<double> sent_mass(n_sents, 0.0);
    for (std::size_t s = 0; s < n_sents; ++s) {
        for (const auto& tok : corpus.sentence(static_cast<int>(s)).tokens) {
            sent_mass[s] += centroid.weight(tok.term);
        }
    }
    double total_sent_mass = 0.0;
    for (double m : sent_mass) total_sent_mass += m;
    graph.sentence_weight.assign(n_sents, 0.0);
    if (total_sent_mass > 0.0) {
        for (std::size_t s = 0; s < n_sents; ++s) {
            graph.sentence_weight[s] = sent_mass[s] / total_sent_mass;
        }
    }

    std::vector<double> doc_mass(n_docs, 0.0);
    for (std::size_t s = 0; s < n_sents; ++s) {
        doc_mass[static_cast<std::size_t>(graph.sentence_document[s])] += sent_mass[s];
    }
    double total_doc_mass = 0.0;
    for (double m : doc_mass) total_doc_mass += m;
    graph.document_weight.assign(n_docs, 0.0);
    if (total_doc_mass > 0.0) {
        for (std::size_t d = 0; d < n_docs; ++d) {
            graph.document_weight[d] = doc_mass[d] / total_doc_mass;
        }
    }

    graph.frame_weight.resize(n_frames);
    for (std::size_t f = 0; f < n_frames; ++f) {
        graph.frame_weight[f] = frame_vertex(frames[f], n_frames);
    }

    // Frame layer: composite similarity for every ordered pair. The cross
    // protagonist terms make alpha_e direction dependent.
    SpanVectorizer vectorizer(corpus);
    std::vector<FrameTermVectors> frame_vecs;
    frame_vecs.reserve(n_frames);
    for (const auto& frame : frames) frame_vecs.push_back(frame_term_vectors(frame, vectorizer));
    for (std::size_t i = 0; i < n_frames; ++i) {
        for (std::size_t j = 0; j < n_frames; ++j) {
            if (i == j) continue;
            double w = sim_composite(frames[i], frames[j], frame_vecs[i], frame_vecs[j], coeffs);
            if (w > 0.0) graph.frame_edges[{static_cast<int>(i), static_cast<int>(j)}] = w;
        }
    }

    return graph;
}

double cross_weight_wd(int frame_i, int frame_j, const MultiLayerGraph& graph) {
    int si = graph.frame_sentence[static_cast<std::size_t>(frame_i)];
    int sj = graph.frame_sentence[static_cast<std::size_t>(frame_j)];
    int di = graph.sentence_document[static_cast<std::size_t>(si)];
    int dj = graph.sentence_document[static_cast<std::size_t>(sj)];
    if (di == dj) return 1.0;
    return 1.0 + graph.document_edge_weight(di, dj);
}

double cross_weight_ws(int frame_i, int frame_j, const MultiLayerGraph& graph) {
    int si = graph.frame_sentence[static_cast<std::size_t>(frame_i)];
    int sj = graph.frame_sentence[static_cast<std::size_t>(frame_j)];
    if (si == sj) return 1.0;
    return 1.0 + graph.sentence_edge_weight(si, sj);
}

std::pair<double, double> AffinityMatrix::column_sum_extrema() const {
    const Eigen::Index n = size();
    if (n == 0) return {0.0, 0.0};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Eigen::Index j = 0; j < n; ++j) {
        double sum = is_sparse ? sparse.col(j).sum() : dense.col(j).sum();
        lo = std::min(lo, sum);
        hi = std::max(hi, sum);
    }
    return {lo, hi};
}

PreferenceVector assemble_v(const MultiLayerGraph& graph, const AssemblyOptions& opts) {
    const std::size_t n = graph.frame_count();
    if (n == 0) throw InputError("assemble_v: empty graph");
    PreferenceVector pref;
    pref.v.resize(static_cast<Eigen::Index>(n));
    for (std::size_t f = 0; f < n; ++f) {
        int sent = graph.frame_sentence[f];
        int doc = graph.sentence_document[static_cast<std::size_t>(sent)];
        double w = graph.frame_weight[f];
        if (opts.document_layer) {
            w *= 1.0 + graph.document_weight[static_cast<std::size_t>(doc)];
        }
        if (opts.sentence_layer) {
            w *= 1.0 + graph.sentence_weight[static_cast<std::size_t>(sent)];
        }
        pref.v[static_cast<Eigen::Index>(f)] = w;
    }
    double sum = pref.v.sum();
    pref.v /= sum;
    pref.normalized = std::abs(pref.v.sum() - 1.0) <= kPreferenceSumTolerance &&
                      (pref.v.array() > 0.0).all();
    return pref;
}

namespace {

AffinityMatrix finalize_matrix(Eigen::MatrixXd columns, std::size_t dense_threshold) {
    AffinityMatrix H;
    const Eigen::Index n = columns.cols();
    if (static_cast<std::size_t>(n) > dense_threshold) {
        H.is_sparse = true;
        H.sparse = columns.sparseView();
        H.sparse.makeCompressed();
    } else {
        H.dense = std::move(columns);
    }
    auto [lo, hi] = H.column_sum_extrema();
    H.stochastic = n > 0 && std::abs(lo - 1.0) <= kColumnSumTolerance &&
                   std::abs(hi - 1.0) <= kColumnSumTolerance;
    return H;
}

} // namespace

AffinityMatrix make_column_stochastic(const Eigen::MatrixXd& raw, const Eigen::VectorXd& dangling,
                                      std::size_t dense_threshold) {
    Eigen::MatrixXd H = raw;
    const Eigen::Index n = H.cols();
    for (Eigen::Index j = 0; j < n; ++j) {
        double sum = H.col(j).sum();
        if (sum > 0.0) {
            H.col(j) /= sum;
        } else {
            H.col(j) = dangling;
        }
    }
    return finalize_matrix(std::move(H), dense_threshold);
}

AffinityMatrix assemble_H(const MultiLayerGraph& graph, const AssemblyOptions& opts) {
    const std::size_t n = graph.frame_count();
    if (n == 0) throw InputError("assemble_H: empty graph");
    const Eigen::Index ni = static_cast<Eigen::Index>(n);
    PreferenceVector pref = assemble_v(graph, opts);

    // Raw weighted products. In block mode W_d is applied per document
    // block instead of pointwise.
    Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(ni, ni);
    for (const auto& [key, alpha_e] : graph.frame_edges) {
        auto [i, j] = key;
        double w = alpha_e;
        if (opts.sentence_layer) w *= cross_weight_ws(i, j, graph);
        if (opts.document_layer && opts.normalization == NormalizationMode::WholeMatrix) {
            w *= cross_weight_wd(i, j, graph);
        }
        raw(i, j) = w;
    }

    if (opts.normalization == NormalizationMode::WholeMatrix) {
        return make_column_stochastic(raw, pref.v, opts.dense_threshold);
    }

    // Block scheme: within every column, normalize each document's row
    // block, then mix the blocks with a column-stochastic document weight
    // so each column sums to exactly one (the Lemma 2 construction).
    const std::size_t n_docs = graph.document_count();
    std::vector<int> frame_doc(n);
    for (std::size_t f = 0; f < n; ++f) {
        frame_doc[f] = graph.sentence_document[static_cast<std::size_t>(graph.frame_sentence[f])];
    }

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(ni, ni);
    for (Eigen::Index j = 0; j < ni; ++j) {
        int doc_j = frame_doc[static_cast<std::size_t>(j)];
        std::vector<double> block_sum(n_docs, 0.0);
        for (Eigen::Index i = 0; i < ni; ++i) {
            block_sum[static_cast<std::size_t>(frame_doc[static_cast<std::size_t>(i)])] += raw(i, j);
        }
        double weight_total = 0.0;
        std::vector<double> doc_weight(n_docs, 0.0);
        for (std::size_t d = 0; d < n_docs; ++d) {
            if (block_sum[d] <= 0.0) continue;
            double wd = 1.0;
            if (opts.document_layer && static_cast<int>(d) != doc_j) {
                wd = 1.0 + graph.document_edge_weight(static_cast<int>(d), doc_j);
            }
            doc_weight[d] = wd;
            weight_total += wd;
        }
        if (weight_total == 0.0) {
            H.col(j) = pref.v;  // dangling column
            continue;
        }
        for (Eigen::Index i = 0; i < ni; ++i) {
            auto d = static_cast<std::size_t>(frame_doc[static_cast<std::size_t>(i)]);
            if (block_sum[d] <= 0.0 || raw(i, j) == 0.0) continue;
            H(i, j) = raw(i, j) / block_sum[d] * (doc_weight[d] / weight_total);
        }
    }
    return finalize_matrix(std::move(H), opts.dense_threshold);
}

} // namespace mlsum
