/// @file project_io.hpp
/// @brief Loading a project snapshot from disk and writing one back out.

#pragma once

#include "weaver/project.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace weaver {

/// Per-load bookkeeping: what was skipped and why.
struct LoadReport {
    int skipped_binary = 0;
    int skipped_ignored = 0;
    std::vector<std::string> warnings;
};

/// VCS metadata, hidden entries, and common build outputs. Used when the
/// caller passes no explicit rules of its own.
std::vector<std::string> default_ignore_rules();

/// Loads every non-ignored, UTF-8-decodable regular file under root.
/// Undecodable files are skipped and counted; unreadable files produce a
/// warning and are skipped. Throws ConfigError when root is missing or not
/// a directory.
Project load_project(const std::filesystem::path& root,
                     const std::vector<std::string>& ignore_rules,
                     LoadReport* report = nullptr);

/// Writes the project as a directory tree, creating intermediate directories.
/// Contents are written byte-exactly.
void write_project_tree(const Project& p, const std::filesystem::path& out_dir);

/// Order-independent fingerprint of a directory tree: SHA-256 over the sorted
/// list of (relative path, content hash) pairs of all regular files.
std::string fingerprint_tree(const std::filesystem::path& root);

} // namespace weaver
