#include "weaver/embedding.hpp"

#include "weaver/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weaver {

namespace {

double euclidean_norm(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

} // namespace

EmbeddingVector::EmbeddingVector(std::vector<double> values)
    : values_(std::move(values)), norm_(euclidean_norm(values_)) {}

bool EmbeddingVector::norm_consistent() const {
    double fresh = euclidean_norm(values_);
    double scale = std::max({std::abs(fresh), std::abs(norm_), 1.0});
    return std::abs(fresh - norm_) <= 1e-9 * scale;
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dimension() != b.dimension()) {
        throw IndexError("cosine: dimension mismatch (" + std::to_string(a.dimension()) +
                         " vs " + std::to_string(b.dimension()) + ")");
    }
    if (a.norm() == 0.0 || b.norm() == 0.0) {
        throw IndexError("cosine: degenerate zero-norm vector");
    }
    double dot = 0.0;
    for (size_t i = 0; i < a.dimension(); ++i) dot += a.values()[i] * b.values()[i];
    return std::clamp(dot / (a.norm() * b.norm()), -1.0, 1.0);
}

} // namespace weaver
