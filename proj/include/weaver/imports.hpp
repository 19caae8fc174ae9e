/// @file imports.hpp
/// @brief Line-grammar import extraction and project-internal resolution.
///
/// Extraction is deliberately not a full language parser: the dependency
/// graph needs reference edges, not semantics. The grammar covers
/// `import a.b as c` (including comma lists) and `from X import Y` at any
/// indentation; anything it cannot read is skipped with a warning.

#pragma once

#include "weaver/project.hpp"
#include "weaver/source_file.hpp"

#include <string>
#include <vector>

namespace weaver {

enum class Resolution { unresolved, internal, external };

struct ImportRef {
    std::string raw_module;  // module text as written, e.g. "utils.helpers" or ".sibling"
    std::string origin;      // path of the importing file
    Resolution resolution = Resolution::unresolved;
    std::string resolved_path; // set when resolution == internal

    // Parse detail used by resolution: `from X import a, b` carries [a, b].
    bool is_from = false;
    std::vector<std::string> from_names;
    int line = 0; // 1-based source line of the statement
};

/// One ImportRef per imported module, in source order, resolution left
/// unresolved. Non-python files yield an empty list plus a warning.
std::vector<ImportRef> extract_imports(const SourceFile& file,
                                       std::vector<std::string>* warnings = nullptr);

/// Resolves raw_module against the project:
///   a.b.c -> a/b/c.py, else a/b/c/__init__.py (both present -> package form,
///   with a warning). A from-import whose module part does not resolve falls
///   back to module-per-name chains (`from utils import helpers` ->
///   utils/helpers.py). Relative imports resolve against the importer's
///   directory. Everything else is external.
ImportRef resolve_import(ImportRef ref, const Project& project,
                         std::vector<std::string>* warnings = nullptr);

/// extract + resolve for every import of the file.
std::vector<ImportRef> resolved_imports(const SourceFile& file, const Project& project,
                                        std::vector<std::string>* warnings = nullptr);

} // namespace weaver
