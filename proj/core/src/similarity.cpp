#include "mlsum/similarity.hpp"

#include <cmath>

#include "mlsum/errors.hpp"

namespace mlsum {

double cosine(const TermVector& a, const TermVector& b) {
    if (a.empty() || b.empty()) return 0.0;
    double na = a.norm();
    double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    double c = dot(a, b) / (na * nb);
    if (c < 0.0) return 0.0;
    return c > 1.0 ? 1.0 : c;  // guard rounding drift just past 1
}

double sentence_edge(int i, int j, const Corpus& corpus) {
    TermVector vi = sentence_vector(corpus.sentence(i), corpus);
    double denom = 0.0;
    double numer = 0.0;
    for (std::size_t k = 0; k < corpus.sentence_count(); ++k) {
        if (static_cast<int>(k) == i) continue;
        double s = cosine(vi, sentence_vector(corpus.sentence(static_cast<int>(k)), corpus));
        denom += s;
        if (static_cast<int>(k) == j) numer = s;
    }
    return denom == 0.0 ? 0.0 : numer / denom;
}

double document_edge(int i, int j, const Corpus& corpus) {
    TermVector vi = document_vector(corpus.documents[static_cast<std::size_t>(i)], corpus);
    double denom = 0.0;
    double numer = 0.0;
    for (std::size_t k = 0; k < corpus.documents.size(); ++k) {
        if (static_cast<int>(k) == i) continue;
        double s = cosine(vi, document_vector(corpus.documents[k], corpus));
        denom += s;
        if (static_cast<int>(k) == j) numer = s;
    }
    return denom == 0.0 ? 0.0 : numer / denom;
}

CentroidTable centroid_table(const Corpus& corpus, double threshold) {
    CentroidTable table;
    TermVector mean;
    for (const auto& doc : corpus.documents) mean.add(document_vector(doc, corpus));
    const double n_docs = static_cast<double>(corpus.documents.size());
    for (const auto& [term, total] : mean.weights) {
        double cw = total / n_docs;
        if (cw >= threshold && cw > 0.0) table.cw[term] = cw;
    }
    return table;
}

namespace {

double token_centroid_mass(const Sentence& s, const CentroidTable& centroid) {
    double mass = 0.0;
    for (const auto& tok : s.tokens) mass += centroid.weight(tok.term);
    return mass;
}

} // namespace

double sentence_vertex(int sentence_id, const Corpus& corpus, const CentroidTable& centroid) {
    double total = 0.0;
    double mine = 0.0;
    for (std::size_t k = 0; k < corpus.sentence_count(); ++k) {
        double mass = token_centroid_mass(corpus.sentence(static_cast<int>(k)), centroid);
        total += mass;
        if (static_cast<int>(k) == sentence_id) mine = mass;
    }
    return total == 0.0 ? 0.0 : mine / total;
}

double document_vertex(int doc_id, const Corpus& corpus, const CentroidTable& centroid) {
    double total = 0.0;
    double mine = 0.0;
    for (const auto& doc : corpus.documents) {
        double mass = 0.0;
        for (const auto& sent : doc.sentences) mass += token_centroid_mass(sent, centroid);
        total += mass;
        if (doc.id == doc_id) mine = mass;
    }
    return total == 0.0 ? 0.0 : mine / total;
}

double frame_vertex(const Frame& frame, std::size_t total_frames) {
    if (total_frames == 0) throw InputError("frame_vertex: no frames in corpus");
    const double n = static_cast<double>(total_frames);
    return frame.complete ? 1.0 / n : 1.0 / (2.0 * n);
}

TermVector SpanVectorizer::vector(std::string_view span) const {
    auto tokens = tokenize(span, corpus_.config_snapshot, corpus_.stopwords);
    return term_vector(tokens, corpus_.idf_table);
}

FrameTermVectors frame_term_vectors(const Frame& frame, const SpanVectorizer& vectorizer) {
    FrameTermVectors out;
    out.predicate = vectorizer.vector(frame.predicate);
    for (const auto& [role, span] : frame.args) {
        auto idx = static_cast<std::size_t>(role);
        out.role[idx] = vectorizer.vector(span);
        out.filled[idx] = true;
    }
    return out;
}

double sim_protagonist(const FrameTermVectors& fi, const FrameTermVectors& fj,
                       const SimCoefficients& coeffs) {
    const auto& a0i = fi.role[static_cast<int>(Role::A0)];
    const auto& a1i = fi.role[static_cast<int>(Role::A1)];
    const auto& a0j = fj.role[static_cast<int>(Role::A0)];
    const auto& a1j = fj.role[static_cast<int>(Role::A1)];
    const auto& a2i = fi.role[static_cast<int>(Role::A2)];
    const auto& a2j = fj.role[static_cast<int>(Role::A2)];
    return coeffs.alpha[0] * cosine(a0i, a0j) + coeffs.alpha[1] * cosine(a1i, a1j) +
           coeffs.alpha[2] * cosine(a2i, a2j) + coeffs.alpha[3] * cosine(a0i, a1j) +
           coeffs.alpha[4] * cosine(a0i, a2j) + coeffs.alpha[5] * cosine(a1i, a2j);
}

double sim_index(IndexComponent component, const FrameTermVectors& fi,
                 const FrameTermVectors& fj) {
    switch (component) {
        case IndexComponent::Temporality:
            return cosine(fi.role[static_cast<int>(Role::AmTmp)],
                          fj.role[static_cast<int>(Role::AmTmp)]);
        case IndexComponent::Spatiality:
            return cosine(fi.role[static_cast<int>(Role::AmLoc)],
                          fj.role[static_cast<int>(Role::AmLoc)]);
        case IndexComponent::Causality:
            return cosine(fi.predicate, fj.predicate);
    }
    return 0.0;
}

int argument_union_count(const Frame& fi, const Frame& fj) {
    int count = 1;  // the predicate slot, always filled
    for (int r = 0; r < kRoleCount; ++r) {
        auto role = static_cast<Role>(r);
        if (fi.has(role) || fj.has(role)) ++count;
    }
    return count;
}

double sim_composite(const Frame& fi, const Frame& fj, const FrameTermVectors& vi,
                     const FrameTermVectors& vj, const SimCoefficients& coeffs) {
    double numer = coeffs.beta[0] * sim_protagonist(vi, vj, coeffs) +
                   coeffs.beta[1] * sim_index(IndexComponent::Temporality, vi, vj) +
                   coeffs.beta[2] * sim_index(IndexComponent::Spatiality, vi, vj) +
                   coeffs.beta[3] * sim_index(IndexComponent::Causality, vi, vj);
    int args = argument_union_count(fi, fj);
    return numer / static_cast<double>(args < 1 ? 1 : args);
}

double sim_protagonist(const Frame& fi, const Frame& fj, const Corpus& corpus,
                       const SimCoefficients& coeffs) {
    SpanVectorizer vectorizer(corpus);
    return sim_protagonist(frame_term_vectors(fi, vectorizer),
                           frame_term_vectors(fj, vectorizer), coeffs);
}

double sim_index(IndexComponent component, const Frame& fi, const Frame& fj,
                 const Corpus& corpus) {
    SpanVectorizer vectorizer(corpus);
    return sim_index(component, frame_term_vectors(fi, vectorizer),
                     frame_term_vectors(fj, vectorizer));
}

double sim_composite(const Frame& fi, const Frame& fj, const Corpus& corpus,
                     const SimCoefficients& coeffs) {
    SpanVectorizer vectorizer(corpus);
    return sim_composite(fi, fj, frame_term_vectors(fi, vectorizer),
                         frame_term_vectors(fj, vectorizer), coeffs);
}

} // namespace mlsum
