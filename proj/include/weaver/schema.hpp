/// @file schema.hpp
/// @brief The per-file project schema handed to the planner.

#pragma once

#include "weaver/graph.hpp"
#include "weaver/project.hpp"
#include "weaver/provider.hpp"
#include "weaver/vector_index.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weaver {

/// Natural-language description of the functionality to integrate.
struct FeatureRequest {
    std::string text;
};

/// Trims and validates; throws ConfigError when empty.
FeatureRequest make_feature_request(std::string text);

struct SchemaRecord {
    std::string path;
    Language language = Language::unknown;
    size_t byte_count = 0;
    std::vector<std::string> imports;   // raw module names, source order
    std::optional<std::string> snippet; // leading excerpt; top-k files only
};

struct ProjectSchema {
    std::vector<SchemaRecord> records; // lexicographic by path
    std::vector<std::pair<std::string, std::string>> edges;

    bool has_path(const std::string& path) const;
};

/// Describes every file; the k files most similar to the request (cosine
/// against the index, embed via provider) additionally carry a leading
/// excerpt of at most snippet_budget bytes.
ProjectSchema build_schema(const Project& project, const DependencyGraph& graph,
                           const VectorIndex& index, const FeatureRequest& request, int k,
                           Provider& provider, size_t snippet_budget = 1200);

/// Rebuilds the dependency graph the schema was derived from (used to order
/// plans without re-parsing the project).
DependencyGraph schema_graph(const ProjectSchema& schema);

/// Stable JSON rendering used in planning prompts and reports.
std::string schema_to_json(const ProjectSchema& schema);

} // namespace weaver
