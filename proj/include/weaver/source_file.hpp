/// @file source_file.hpp
/// @brief A single file snapshot inside a project.

#pragma once

#include <string>
#include <string_view>

namespace weaver {

enum class FileKind { source, manifest, other };
enum class Language { python, unknown };

/// One file of a project snapshot: relative forward-slash path plus content.
/// Paths never contain "." or ".." segments and never start with '/'.
struct SourceFile {
    std::string path;
    std::string content;
    FileKind kind = FileKind::other;
    Language language = Language::unknown;
};

/// Classification is by extension/filename only (".py" -> python source,
/// well-known manifest names -> manifest, everything else -> other).
FileKind classify_kind(std::string_view path);
Language classify_language(std::string_view path);

/// Builds a SourceFile with kind/language derived from the path.
SourceFile make_source_file(std::string path, std::string content);

/// True for a relative, forward-slash, non-empty path with no "." / ".."
/// segments, no empty segments, and no leading or trailing separator.
bool is_well_formed_rel_path(std::string_view path);

const char* to_string(FileKind k);
const char* to_string(Language l);

} // namespace weaver
