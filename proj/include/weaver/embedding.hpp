/// @file embedding.hpp
/// @brief Fixed-dimension embedding vectors and cosine similarity.

#pragma once

#include <cstddef>
#include <vector>

namespace weaver {

/// Immutable real vector with its Euclidean norm cached at construction.
class EmbeddingVector {
public:
    EmbeddingVector() = default;
    explicit EmbeddingVector(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    size_t dimension() const { return values_.size(); }
    double norm() const { return norm_; }

    /// Recomputes the norm and checks it against the cache (1e-9 relative).
    bool norm_consistent() const;

    bool operator==(const EmbeddingVector& other) const { return values_ == other.values_; }

private:
    std::vector<double> values_;
    double norm_ = 0.0;
};

/// dot(a,b) / (|a||b|), clamped to [-1, 1]. Throws IndexError on dimension
/// mismatch or a zero-norm operand.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

} // namespace weaver
