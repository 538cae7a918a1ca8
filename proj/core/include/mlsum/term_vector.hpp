#ifndef MLSUM_TERM_VECTOR_HPP
#define MLSUM_TERM_VECTOR_HPP

#include <cmath>
#include <map>
#include <string>

namespace mlsum {

/// Sparse bag-of-terms vector. Absent term means weight 0; stored weights
/// are always >= 0. std::map keeps iteration order deterministic so that
/// floating point reductions are reproducible run to run.
struct TermVector {
    std::map<std::string, double> weights;

    bool empty() const { return weights.empty(); }

    double weight(const std::string& term) const {
        auto it = weights.find(term);
        return it == weights.end() ? 0.0 : it->second;
    }

    /// Accumulate another vector (used to roll sentence vectors up into
    /// document vectors).
    void add(const TermVector& other) {
        for (const auto& [term, w] : other.weights) weights[term] += w;
    }

    double norm() const {
        double s = 0.0;
        for (const auto& [term, w] : weights) s += w * w;
        return std::sqrt(s);
    }
};

inline double dot(const TermVector& a, const TermVector& b) {
    const auto& small = a.weights.size() <= b.weights.size() ? a : b;
    const auto& large = a.weights.size() <= b.weights.size() ? b : a;
    double s = 0.0;
    for (const auto& [term, w] : small.weights) s += w * large.weight(term);
    return s;
}

} // namespace mlsum

#endif
