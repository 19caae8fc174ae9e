/// @file graph.hpp
/// @brief Project dependency graph: construction, queries, execution order.

#pragma once

#include "weaver/imports.hpp"
#include "weaver/project.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace weaver {

/// Directed graph over project file paths. Edges point from importer to
/// imported file. Every edge endpoint is a vertex; self-loops are rejected.
class DependencyGraph {
public:
    void add_vertex(const std::string& path);

    /// Endpoints must already be vertices; throws GraphError otherwise or on
    /// a self-loop.
    void add_edge(const std::string& from, const std::string& to);

    bool has_vertex(const std::string& path) const { return vertices_.count(path) != 0; }
    const std::set<std::string>& vertices() const { return vertices_; }
    const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }

    /// Out-neighbors of v. Throws GraphError when v is not a vertex.
    std::set<std::string> dependencies_of(const std::string& v) const;

    /// In-neighbors of v. Throws GraphError when v is not a vertex.
    std::set<std::string> dependents_of(const std::string& v) const;

private:
    std::set<std::string> vertices_;
    std::set<std::pair<std::string, std::string>> edges_;
};

/// Builds G over all project files: one vertex per path, one edge per
/// internally-resolved import. A file importing itself is a warning, not an
/// edge.
DependencyGraph build_dependency_graph(const Project& project,
                                       std::vector<std::string>* warnings = nullptr);

/// Orders targets dependency-first: if (a, b) is an edge and both are
/// targets, b comes before a. Cycles collapse into strongly-connected groups
/// ordered as units with members lexicographic. Targets that are not graph
/// vertices (files yet to be created) sort last, lexicographic.
std::vector<std::string> execution_order(const DependencyGraph& g,
                                         const std::set<std::string>& targets);

/// Strongly connected components, each sorted lexicographically. Components
/// are returned in dependency-first order (a component precedes everything
/// that depends on it).
std::vector<std::vector<std::string>> strongly_connected_components(const DependencyGraph& g);

/// {"vertices": [...], "edges": [[from, to], ...]} sorted lexicographically;
/// stable across runs for golden comparisons.
std::string graph_to_json(const DependencyGraph& g);

} // namespace weaver
