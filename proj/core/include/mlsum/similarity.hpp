#ifndef MLSUM_SIMILARITY_HPP
#define MLSUM_SIMILARITY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "mlsum/frames.hpp"
#include "mlsum/term_vector.hpp"
#include "mlsum/text_model.hpp"

namespace mlsum {

/// Mixing weights of the composite frame similarity. The printed defaults
/// sum the alpha side to 1.45 (alpha6 = 0.5 exceeds the direct-match
/// weights; if 0.05 was intended the config can say so).
struct SimCoefficients {
    std::array<double, 6> alpha{0.25, 0.25, 0.25, 0.10, 0.10, 0.5};
    std::array<double, 4> beta{0.4, 0.3, 0.2, 0.1};
};

/// cw(t): mean tf*idf of t across documents, clamped to 0 below the
/// threshold.
struct CentroidTable {
    std::map<std::string, double> cw;

    double weight(const std::string& term) const {
        auto it = cw.find(term);
        return it == cw.end() ? 0.0 : it->second;
    }
};

CentroidTable centroid_table(const Corpus& corpus, double threshold);

/// Standard cosine; 0 when either vector is empty.
double cosine(const TermVector& a, const TermVector& b);

/// beta_e(s_i, s_j) = sim(s_i, s_j) / sum_{k != i} sim(s_i, s_k);
/// 0 when the denominator vanishes.
double sentence_edge(int i, int j, const Corpus& corpus);

/// gamma_e(d_i, d_j), same normalization over document vectors.
double document_edge(int i, int j, const Corpus& corpus);

/// beta_v(s_i): the sentence's share of the corpus centroid mass, summed
/// per token occurrence.
double sentence_vertex(int sentence_id, const Corpus& corpus, const CentroidTable& centroid);

/// gamma_v(d_i), document analogue of sentence_vertex.
double document_vertex(int doc_id, const Corpus& corpus, const CentroidTable& centroid);

/// alpha_v: 1/N for complete frames, 1/(2N) for incomplete ones.
/// Throws InputError when total_frames is 0.
double frame_vertex(const Frame& frame, std::size_t total_frames);

/// Builds tf*idf vectors for argument text spans using the corpus
/// tokenizer settings and idf table.
class SpanVectorizer {
public:
    explicit SpanVectorizer(const Corpus& corpus) : corpus_(corpus) {}
    TermVector vector(std::string_view span) const;

private:
    const Corpus& corpus_;
};

/// Per-frame term vectors for the predicate and each argument role, plus
/// the filled-slot record the composite denominator needs.
struct FrameTermVectors {
    TermVector predicate;
    std::array<TermVector, kRoleCount> role;    // indexed by static_cast<int>(Role)
    std::array<bool, kRoleCount> filled{};      // role present in the frame
};

FrameTermVectors frame_term_vectors(const Frame& frame, const SpanVectorizer& vectorizer);

enum class IndexComponent { Temporality, Spatiality, Causality };

/// alpha1*sim(A0,A0) + alpha2*sim(A1,A1) + alpha3*sim(A2,A2)
/// + alpha4*sim(A0_i,A1_j) + alpha5*sim(A0_i,A2_j) + alpha6*sim(A1_i,A2_j).
/// Missing arguments contribute 0. Not symmetric: the cross terms pair
/// different roles of the two frames.
double sim_protagonist(const FrameTermVectors& fi, const FrameTermVectors& fj,
                       const SimCoefficients& coeffs);

/// Temporality = sim(AM-TMP, AM-TMP), spatiality = sim(AM-LOC, AM-LOC),
/// causality = sim(predicate, predicate).
double sim_index(IndexComponent component, const FrameTermVectors& fi,
                 const FrameTermVectors& fj);

/// Number of distinct slots (five roles + predicate counted once) filled in
/// at least one of the two frames; never less than 1.
int argument_union_count(const Frame& fi, const Frame& fj);

/// (beta1*protagonist + beta2*temporality + beta3*spatiality +
///  beta4*causality) / max(1, #arguments).
double sim_composite(const Frame& fi, const Frame& fj, const FrameTermVectors& vi,
                     const FrameTermVectors& vj, const SimCoefficients& coeffs);

/// Convenience overloads that vectorize on the fly (tests and small call
/// sites; graph assembly prepares FrameTermVectors once per frame).
double sim_protagonist(const Frame& fi, const Frame& fj, const Corpus& corpus,
                       const SimCoefficients& coeffs);
double sim_index(IndexComponent component, const Frame& fi, const Frame& fj,
                 const Corpus& corpus);
double sim_composite(const Frame& fi, const Frame& fj, const Corpus& corpus,
                     const SimCoefficients& coeffs);

} // namespace mlsum

#endif
