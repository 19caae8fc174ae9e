#include "weaver/source_file.hpp"

#include "weaver/text_util.hpp"

#include <array>

namespace weaver {

namespace {

std::string_view basename_of(std::string_view path) {
    size_t sep = path.rfind('/');
    return sep == std::string_view::npos ? path : path.substr(sep + 1);
}

constexpr std::array<std::string_view, 8> kManifestNames = {
    "requirements.txt", "pyproject.toml", "setup.cfg",  "Pipfile",
    "package.json",     "Makefile",       "CMakeLists.txt", "environment.yml",
};

} // namespace

FileKind classify_kind(std::string_view path) {
    if (ends_with(path, ".py")) return FileKind::source;
    auto base = basename_of(path);
    for (auto name : kManifestNames) {
        if (base == name) return FileKind::manifest;
    }
    return FileKind::other;
}

Language classify_language(std::string_view path) {
    return ends_with(path, ".py") ? Language::python : Language::unknown;
}

SourceFile make_source_file(std::string path, std::string content) {
    SourceFile f;
    f.kind = classify_kind(path);
    f.language = classify_language(path);
    f.path = std::move(path);
    f.content = std::move(content);
    return f;
}

bool is_well_formed_rel_path(std::string_view path) {
    if (path.empty() || path.front() == '/' || path.back() == '/') return false;
    if (path.find('\\') != std::string_view::npos) return false;
    size_t start = 0;
    while (start <= path.size()) {
        size_t sep = path.find('/', start);
        std::string_view seg = sep == std::string_view::npos
                                   ? path.substr(start)
                                   : path.substr(start, sep - start);
        if (seg.empty() || seg == "." || seg == "..") return false;
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return true;
}

const char* to_string(FileKind k) {
    switch (k) {
    case FileKind::source: return "source";
    case FileKind::manifest: return "manifest";
    case FileKind::other: return "other";
    }
    return "other";
}

const char* to_string(Language l) {
    switch (l) {
    case Language::python: return "python";
    case Language::unknown: return "unknown";
    }
    return "unknown";
}

} // namespace weaver
