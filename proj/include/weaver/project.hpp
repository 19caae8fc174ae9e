/// @file project.hpp
/// @brief In-memory project snapshot and snapshot diffing.
///
/// A Project is an immutable-by-convention value: the pipeline never mutates
/// the snapshot it loaded; transformations operate on a copy. Iteration order
/// is always lexicographic by path, so every consumer is deterministic.

#pragma once

#include "weaver/source_file.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace weaver {

class Project {
public:
    Project() = default;
    explicit Project(std::string root_label) : root_label_(std::move(root_label)) {}

    const std::string& root_label() const { return root_label_; }

    /// Inserts or replaces the file at file.path. Throws std::invalid_argument
    /// on a malformed path.
    void put(SourceFile file);

    /// Removes the file if present; returns whether something was removed.
    bool remove(const std::string& path);

    bool contains(const std::string& path) const { return files_.count(path) != 0; }
    const SourceFile* find(const std::string& path) const;

    /// Throws std::out_of_range when the path is absent.
    const SourceFile& at(const std::string& path) const;

    size_t size() const { return files_.size(); }
    bool empty() const { return files_.empty(); }

    /// Paths in lexicographic order.
    std::vector<std::string> paths() const;

    auto begin() const { return files_.begin(); }
    auto end() const { return files_.end(); }

    bool operator==(const Project& other) const { return files_ == other.files_; }

private:
    std::string root_label_;
    std::map<std::string, SourceFile> files_; // keyed by path, lexicographic
};

inline bool operator==(const SourceFile& a, const SourceFile& b) {
    return a.path == b.path && a.content == b.content && a.kind == b.kind &&
           a.language == b.language;
}

/// Classification of paths(before) ∪ paths(after) into four disjoint sets.
/// "modified" means same path, different content bytes.
struct ProjectDiff {
    std::set<std::string> added;
    std::set<std::string> modified;
    std::set<std::string> removed;
    std::set<std::string> unchanged;

    bool clean() const { return added.empty() && modified.empty() && removed.empty(); }
};

/// Structural deep copy; mutating the copy never affects the original.
Project copy_project(const Project& p);

ProjectDiff diff_projects(const Project& before, const Project& after);

} // namespace weaver
