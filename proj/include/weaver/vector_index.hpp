/// @file vector_index.hpp
/// @brief Per-file embedding index with exact top-k cosine retrieval.
///
/// Retrieval is a deterministic linear scan: corpora at desk scale stay well
/// under 10^4 files and reproducibility matters more than speed here.

#pragma once

#include "weaver/embedding.hpp"
#include "weaver/project.hpp"
#include "weaver/provider.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace weaver {

class VectorIndex {
public:
    struct Entry {
        EmbeddingVector vector;
        std::string fingerprint; // SHA-256 of the embedded content
    };

    VectorIndex() = default;
    explicit VectorIndex(int dimension);

    int dimension() const { return dimension_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Inserts or replaces. Throws IndexError on dimension mismatch.
    void put(const std::string& path, EmbeddingVector vector, std::string fingerprint);

    const Entry* find(const std::string& path) const;
    const std::map<std::string, Entry>& entries() const { return entries_; }

    bool operator==(const VectorIndex& other) const;

private:
    int dimension_ = 0;
    std::map<std::string, Entry> entries_;
};

/// Embeds every project file. Entries of `prior` whose content fingerprint
/// still matches are reused without re-embedding. Embedding calls may run
/// concurrently up to `parallelism`; the result does not depend on timing.
VectorIndex build_index(const Project& project, Provider& provider,
                        const VectorIndex* prior = nullptr, int parallelism = 1);

/// Top k entries by descending cosine score against the query; ties break
/// lexicographically by path. Fewer than k entries returns them all.
std::vector<std::pair<std::string, double>> query_top_k(const VectorIndex& index,
                                                        const EmbeddingVector& query, int k);

/// Versioned line-delimited container: a header line
/// {"format":"weaver-index","version":1,"dimension":d,"entry_count":n}
/// followed by one {"path","fingerprint","values"} object per entry.
void persist_index(const VectorIndex& index, const std::filesystem::path& path);

/// Throws IndexError on version/dimension/count mismatches or corrupt lines.
VectorIndex load_index(const std::filesystem::path& path);

} // namespace weaver
